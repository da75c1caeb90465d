#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "convgraph/types.hpp"

namespace convgraph {

enum class Speaker { User, Agent };

enum class Split { Train, Dev, Test };

struct SlotValue {
  std::string slot;
  std::string value;

  friend bool operator==(const SlotValue&, const SlotValue&) = default;
};

/// One dialogue act: an intent plus the slots it mentions.
struct DialogueAct {
  std::string intent;
  std::vector<SlotValue> slots;

  friend bool operator==(const DialogueAct&, const DialogueAct&) = default;
};

/// One turn: who spoke, the act(s) expressed, and the belief state
/// (slot -> value) after the turn. acts must be non-empty.
struct Turn {
  Speaker speaker = Speaker::User;
  std::vector<DialogueAct> acts;
  std::map<std::string, std::string> belief;

  friend bool operator==(const Turn&, const Turn&) = default;
};

struct Dialogue {
  std::string id;
  std::vector<Turn> turns;

  friend bool operator==(const Dialogue&, const Dialogue&) = default;
};

struct Corpus {
  Split split = Split::Train;
  std::vector<Dialogue> dialogues;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Canonical label space of a corpus collection. All four lists are
/// duplicate-free and sorted, so a vocabulary built from the same data is
/// identical regardless of input order.
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<std::string> intents, std::vector<std::string> slots,
             std::vector<std::string> act_labels,
             std::vector<std::string> belief_slots);

  const std::vector<std::string>& intents() const { return intents_; }
  const std::vector<std::string>& slots() const { return slots_; }
  const std::vector<std::string>& act_labels() const { return act_labels_; }
  const std::vector<std::string>& belief_slots() const { return belief_slots_; }

  std::size_t act_size() const { return act_labels_.size(); }       // |da|
  std::size_t belief_size() const { return belief_slots_.size(); }  // |bs|
  std::size_t state_size() const { return act_size() + belief_size(); }

  /// Index of an act label; throws UnknownLabel.
  std::size_t act_index(const std::string& label) const;
  /// Index of a belief slot; throws UnknownLabel.
  std::size_t belief_index(const std::string& slot) const;

  bool has_act_label(const std::string& label) const;

  /// Stable content hash (FNV-1a over the serialized lists), used to tag
  /// derived artifacts so mismatched pairings are caught early.
  std::string hash() const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::vector<std::string> intents_;
  std::vector<std::string> slots_;
  std::vector<std::string> act_labels_;
  std::vector<std::string> belief_slots_;
  std::map<std::string, std::size_t> act_index_;
  std::map<std::string, std::size_t> belief_index_;

  void rebuild_indexes();
};

/// Label for an (intent, slot) pair, e.g. "confirm.date".
std::string qualified_slot_label(const std::string& intent,
                                 const std::string& slot);

/// Scans every turn of every corpus and returns the canonical vocabulary.
/// Throws EmptyCorpus when no turns exist at all.
Vocabulary build_vocabulary(std::span<const Corpus> corpora);

/// Multi-hot act encoding over vocab.act_labels(); union across acts.
BitVec encode_act(std::span<const DialogueAct> acts, const Vocabulary& vocab);

/// Full dialogue-state encoding: act multi-hot ++ belief filled-flags.
/// Slot values are abstracted away; empty string counts as unfilled.
BitVec encode_state(const Turn& turn, const Vocabulary& vocab);

/// Ingestion invariant: first turn is USER, acts non-empty, and an AGENT
/// turn is always preceded by a USER turn. A USER turn directly after a
/// USER turn is accepted as a session restart (produced by dialogue
/// concatenation). Throws AlternationViolation / Error on violation.
void check_dialogue(const Dialogue& d);

// --- persistence -----------------------------------------------------------

/// JSONL, one dialogue per line. Loading validates every dialogue.
Corpus load_corpus(const std::string& path, Split split = Split::Train);
Corpus parse_corpus(std::istream& in, Split split = Split::Train);
void save_corpus(const Corpus& corpus, const std::string& path);
std::string corpus_to_jsonl(const Corpus& corpus);

Vocabulary load_vocabulary(const std::string& path);
void save_vocabulary(const Vocabulary& vocab, const std::string& path);
std::string vocabulary_to_json(const Vocabulary& vocab);
Vocabulary vocabulary_from_json(const std::string& text);

std::string speaker_name(Speaker s);
Speaker speaker_from_name(const std::string& name);

}  // namespace convgraph
