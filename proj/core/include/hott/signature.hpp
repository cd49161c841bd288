#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hott/term.hpp"
#include "hott/value.hpp"

namespace hott {

// Relational witness bookkeeping. Axioms start Pending; `translate` refuses
// to go through a Pending axiom.
struct WitnessStatus {
  enum Kind { Pending, Derived, Trusted } kind = Pending;
  std::string witness;  // entry name when kind != Pending

  static WitnessStatus pending() { return {Pending, ""}; }
  static WitnessStatus derived(std::string w) { return {Derived, std::move(w)}; }
  static WitnessStatus trusted(std::string w) { return {Trusted, std::move(w)}; }
};

struct SignatureEntry {
  std::string name;
  TermPtr type;                  // closed
  std::optional<TermPtr> body;   // closed; absent for axioms
  WitnessStatus witness;
  // caches, filled at declaration time (closed values are depth-independent)
  ValuePtr type_value;
  ValuePtr body_value;
};

class Signature {
 public:
  int max_level = 4;

  bool frozen() const { return frozen_; }
  void freeze() { frozen_ = true; }
  // sessions extend an unfrozen value copy of the shared frozen signature
  void thaw() { frozen_ = false; }

  bool has(const std::string& name) const { return index_.count(name) != 0; }
  const SignatureEntry* find(const std::string& name) const;
  const SignatureEntry& get(const std::string& name) const;
  SignatureEntry& get_mutable(const std::string& name);

  const std::vector<SignatureEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Raw append; the checked path is check_decl() in check.hpp. Witness
  // materialization may append to a frozen signature through
  // `allow_internal`; user declarations may not.
  void append(SignatureEntry e, bool allow_internal = false);

 private:
  std::vector<SignatureEntry> entries_;
  std::map<std::string, std::size_t> index_;
  bool frozen_ = false;
};

}  // namespace hott
