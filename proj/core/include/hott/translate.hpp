#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hott/check.hpp"
#include "hott/signature.hpp"
#include "hott/term.hpp"

namespace hott {

// Binary parametricity translation. Every source context entry becomes three
// target entries (left copy, right copy, relation); types become binary
// relations; terms become relational witnesses. Constants and the primitive
// eliminators go through the witness table.

// Maps translation keys to signature entry names. Keys are either plain
// constant names or builtin-eliminator keys:
//   "J@<type level>.<motive level>", "ind0@<l>", "ind1@<l>", "ind2@<l>",
//   "recS1@0", "recS2@0", "IndW@0", "transport2@<l>".
struct WitnessTable {
  std::map<std::string, std::string> names;
  std::set<std::string> trusted;  // witness entries that are postulated

  const std::string* find(const std::string& key) const {
    auto it = names.find(key);
    return it == names.end() ? nullptr : &it->second;
  }
};

enum class TrustPolicy { Permissive, Strict };

struct TranslateOptions {
  bool recheck = true;  // re-check every produced witness (the soundness gate)
  TrustPolicy policy = TrustPolicy::Permissive;
  std::set<std::string> allow_trusted;  // names admitted under Strict
};

// A named source telescope entry, syntax side.
struct TeleEntry {
  std::string name;
  TermPtr type;
};

class Translator {
 public:
  Translator(Signature& sig, WitnessTable& table, TranslateOptions opts = {});

  // Context translation: each entry (x : A) becomes (x : A_l), (x' : A_r),
  // (xbar : [[A]] x x').
  std::vector<TeleEntry> translate_ctx(const std::vector<TeleEntry>& gamma);

  // Relation for a type: [[Gamma]] |- R : A_l -> A_r -> U_l.
  TermPtr translate_type(const std::vector<TeleEntry>& gamma, const TermPtr& type);

  // Witness for a term: [[Gamma]] |- that : [[A]] t_l t_r; re-checked unless
  // options say otherwise.
  TermPtr translate_term(const std::vector<TeleEntry>& gamma, const TermPtr& term,
                         const TermPtr& type);

  // Left/right renamings of a source term into the translated telescope.
  TermPtr rename_left(const std::vector<TeleEntry>& gamma, const TermPtr& t);
  TermPtr rename_right(const std::vector<TeleEntry>& gamma, const TermPtr& t);

  // Ensures entry `name` has a registered relational witness, deriving and
  // appending `<name>_rel` for definitions. Returns the witness name.
  std::string materialize(const std::string& name);

  const std::set<std::string>& trusted_used() const { return trusted_used_; }

  Signature& sig() { return sig_; }
  WitnessTable& table() { return table_; }

 private:
  friend struct TransImpl;
  Signature& sig_;
  WitnessTable& table_;
  TranslateOptions opts_;
  std::set<std::string> trusted_used_;
  std::set<std::string> in_progress_;
};

// Verifies hand-written witnesses against mechanically translated types and
// fills the builtin-key table; synthesizes trusted witness axioms whose types
// are always computed, never written. Idempotent; called after prelude files
// load.
void register_builtin_witnesses(Signature& sig, WitnessTable& table);

// Registers `witness` (an axiom synthesized with translated type) for an
// axiom `name` carrying a [trusted ...] clause.
void register_trusted_axiom(Signature& sig, WitnessTable& table, const std::string& name,
                            const std::string& witness);
// [derived ...] clause: validates the named existing entry against the
// translated type.
void register_derived_axiom(Signature& sig, WitnessTable& table, const std::string& name,
                            const std::string& witness);

}  // namespace hott
