#include "convgraph/dialogue.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "convgraph/errors.hpp"

namespace convgraph {

using json = nlohmann::json;

std::string speaker_name(Speaker s) {
  return s == Speaker::User ? "user" : "agent";
}

Speaker speaker_from_name(const std::string& name) {
  if (name == "user") return Speaker::User;
  if (name == "agent") return Speaker::Agent;
  throw ParseError("speaker must be \"user\" or \"agent\", got \"" + name +
                   "\"");
}

std::string qualified_slot_label(const std::string& intent,
                                 const std::string& slot) {
  return intent + "." + slot;
}

Vocabulary::Vocabulary(std::vector<std::string> intents,
                       std::vector<std::string> slots,
                       std::vector<std::string> act_labels,
                       std::vector<std::string> belief_slots)
    : intents_(std::move(intents)),
      slots_(std::move(slots)),
      act_labels_(std::move(act_labels)),
      belief_slots_(std::move(belief_slots)) {
  rebuild_indexes();
}

void Vocabulary::rebuild_indexes() {
  act_index_.clear();
  belief_index_.clear();
  for (std::size_t i = 0; i < act_labels_.size(); ++i) {
    act_index_[act_labels_[i]] = i;
  }
  for (std::size_t i = 0; i < belief_slots_.size(); ++i) {
    belief_index_[belief_slots_[i]] = i;
  }
}

std::size_t Vocabulary::act_index(const std::string& label) const {
  auto it = act_index_.find(label);
  if (it == act_index_.end()) throw UnknownLabel(label);
  return it->second;
}

std::size_t Vocabulary::belief_index(const std::string& slot) const {
  auto it = belief_index_.find(slot);
  if (it == belief_index_.end()) throw UnknownLabel(slot);
  return it->second;
}

bool Vocabulary::has_act_label(const std::string& label) const {
  return act_index_.count(label) != 0;
}

std::string Vocabulary::hash() const {
  // FNV-1a over the canonical serialization, hex-encoded.
  const std::string text = vocabulary_to_json(*this);
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

void check_dialogue(const Dialogue& d) {
  if (d.turns.empty()) {
    throw Error("dialogue \"" + d.id + "\" has no turns");
  }
  if (d.turns.front().speaker != Speaker::User) {
    throw AlternationViolation("dialogue \"" + d.id +
                               "\" does not start with a user turn");
  }
  for (std::size_t i = 0; i < d.turns.size(); ++i) {
    const Turn& t = d.turns[i];
    if (t.acts.empty()) {
      throw Error("dialogue \"" + d.id + "\" turn " + std::to_string(i + 1) +
                  " has no dialogue acts");
    }
    // agent turns must answer a user turn; user-after-user is a session
    // restart (dialogue concatenation), agent-after-agent never occurs
    if (t.speaker == Speaker::Agent && i > 0 &&
        d.turns[i - 1].speaker == Speaker::Agent) {
      throw AlternationViolation("dialogue \"" + d.id +
                                 "\" has consecutive agent turns at turn " +
                                 std::to_string(i + 1));
    }
  }
}

Vocabulary build_vocabulary(std::span<const Corpus> corpora) {
  std::set<std::string> intents;
  std::set<std::string> slots;
  std::set<std::string> act_labels;
  std::set<std::string> belief_slots;
  std::size_t n_turns = 0;

  for (const Corpus& corpus : corpora) {
    for (const Dialogue& d : corpus.dialogues) {
      for (const Turn& t : d.turns) {
        ++n_turns;
        for (const DialogueAct& act : t.acts) {
          intents.insert(act.intent);
          act_labels.insert(act.intent);
          for (const SlotValue& sv : act.slots) {
            slots.insert(sv.slot);
            act_labels.insert(qualified_slot_label(act.intent, sv.slot));
          }
        }
        for (const auto& [slot, value] : t.belief) {
          slots.insert(slot);
          belief_slots.insert(slot);
        }
      }
    }
  }
  if (n_turns == 0) {
    throw EmptyCorpus("no turns in any corpus");
  }
  return Vocabulary({intents.begin(), intents.end()},
                    {slots.begin(), slots.end()},
                    {act_labels.begin(), act_labels.end()},
                    {belief_slots.begin(), belief_slots.end()});
}

BitVec encode_act(std::span<const DialogueAct> acts, const Vocabulary& vocab) {
  BitVec v(vocab.act_size());
  for (const DialogueAct& act : acts) {
    v.set(vocab.act_index(act.intent));
    for (const SlotValue& sv : act.slots) {
      v.set(vocab.act_index(qualified_slot_label(act.intent, sv.slot)));
    }
  }
  return v;
}

BitVec encode_state(const Turn& turn, const Vocabulary& vocab) {
  BitVec v = encode_act(turn.acts, vocab).concat(BitVec(vocab.belief_size()));
  const std::size_t offset = vocab.act_size();
  for (const auto& [slot, value] : turn.belief) {
    const std::size_t idx = vocab.belief_index(slot);
    if (!value.empty()) {
      v.set(offset + idx);
    }
  }
  return v;
}

// --- persistence -------------------------------------------------------

namespace {

json turn_to_json(const Turn& t) {
  json acts = json::array();
  for (const DialogueAct& act : t.acts) {
    json slots = json::array();
    for (const SlotValue& sv : act.slots) {
      slots.push_back({{"slot", sv.slot}, {"value", sv.value}});
    }
    acts.push_back({{"intent", act.intent}, {"slots", slots}});
  }
  json belief = json::object();
  for (const auto& [slot, value] : t.belief) {
    belief[slot] = value;
  }
  return {{"speaker", speaker_name(t.speaker)},
          {"acts", acts},
          {"belief", belief}};
}

Turn turn_from_json(const json& j) {
  Turn t;
  t.speaker = speaker_from_name(j.at("speaker").get<std::string>());
  for (const json& ja : j.at("acts")) {
    DialogueAct act;
    act.intent = ja.at("intent").get<std::string>();
    if (ja.contains("slots")) {
      for (const json& js : ja.at("slots")) {
        act.slots.push_back({js.at("slot").get<std::string>(),
                             js.at("value").get<std::string>()});
      }
    }
    t.acts.push_back(std::move(act));
  }
  if (j.contains("belief")) {
    for (auto it = j.at("belief").begin(); it != j.at("belief").end(); ++it) {
      t.belief[it.key()] = it.value().get<std::string>();
    }
  }
  return t;
}

json dialogue_to_json(const Dialogue& d) {
  json turns = json::array();
  for (const Turn& t : d.turns) {
    turns.push_back(turn_to_json(t));
  }
  return {{"id", d.id}, {"turns", turns}};
}

Dialogue dialogue_from_json(const json& j) {
  Dialogue d;
  d.id = j.at("id").get<std::string>();
  for (const json& jt : j.at("turns")) {
    d.turns.push_back(turn_from_json(jt));
  }
  return d;
}

}  // namespace

std::string corpus_to_jsonl(const Corpus& corpus) {
  std::string out;
  for (const Dialogue& d : corpus.dialogues) {
    out += dialogue_to_json(d).dump();
    out += '\n';
  }
  return out;
}

Corpus parse_corpus(std::istream& in, Split split) {
  Corpus corpus;
  corpus.split = split;
  std::set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    Dialogue d;
    try {
      d = dialogue_from_json(j);
    } catch (const json::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    try {
      check_dialogue(d);
    } catch (const Error& e) {
      throw AlternationViolation("line " + std::to_string(line_no) + ": " +
                                 e.what());
    }
    if (!ids.insert(d.id).second) {
      throw Error("line " + std::to_string(line_no) + ": duplicate dialogue id \"" +
                  d.id + "\"");
    }
    corpus.dialogues.push_back(std::move(d));
  }
  return corpus;
}

Corpus load_corpus(const std::string& path, Split split) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_corpus(in, split);
}

void save_corpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << corpus_to_jsonl(corpus);
}

std::string vocabulary_to_json(const Vocabulary& vocab) {
  json j = {{"intents", vocab.intents()},
            {"slots", vocab.slots()},
            {"act_labels", vocab.act_labels()},
            {"belief_slots", vocab.belief_slots()}};
  return j.dump();
}

Vocabulary vocabulary_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
    return Vocabulary(j.at("intents").get<std::vector<std::string>>(),
                      j.at("slots").get<std::vector<std::string>>(),
                      j.at("act_labels").get<std::vector<std::string>>(),
                      j.at("belief_slots").get<std::vector<std::string>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("vocabulary: ") + e.what());
  }
}

Vocabulary load_vocabulary(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return vocabulary_from_json(buf.str());
}

void save_vocabulary(const Vocabulary& vocab, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << vocabulary_to_json(vocab) << '\n';
}

}  // namespace convgraph
