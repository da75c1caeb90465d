#pragma once

#include <stdexcept>
#include <string>

namespace convgraph {

/// Base class for all toolkit errors. Anything derived from Error is a
/// data/configuration problem (CLI exit code 2); other exceptions are
/// treated as internal errors (exit code 3).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct EmptyCorpus : Error {
  using Error::Error;
};
struct UnknownLabel : Error {
  explicit UnknownLabel(const std::string& label)
      : Error("unknown label: " + label), label(label) {}
  std::string label;
};
struct AlternationViolation : Error {
  using Error::Error;
};
struct VocabMismatch : Error {
  using Error::Error;
};
struct NodeNotFound : Error {
  using Error::Error;
};
struct WidthMismatch : Error {
  using Error::Error;
};
struct EmptyReferenceSet : Error {
  using Error::Error;
};
struct EmptyInput : Error {
  using Error::Error;
};
struct ConfigMismatch : Error {
  using Error::Error;
};
struct InsufficientSamples : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct NoAgentNodes : Error {
  using Error::Error;
};

}  // namespace convgraph
