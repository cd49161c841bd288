#pragma once

#include <string>
#include <vector>

#include "hott/value.hpp"

namespace hott {

// Typing context: telescope of types plus the value environment used for
// evaluation. Entries normally bind a fresh neutral; J's base case binds a
// concrete value.
struct CtxEntry {
  std::string name;
  ValuePtr type;
  ValuePtr value;
};

class Ctx {
 public:
  int depth() const { return static_cast<int>(entries_.size()); }
  const std::vector<CtxEntry>& entries() const { return entries_; }
  const Env& env() const { return envs_.back(); }

  const CtxEntry& lookup(int ix) const;  // de Bruijn index, innermost = 0

  void push_fresh(const std::string& name, ValuePtr type);
  void push_value(const std::string& name, ValuePtr type, ValuePtr value);
  void pop();

  std::vector<std::string> names() const;

  Ctx() { envs_.push_back(Env{}); }

 private:
  std::vector<CtxEntry> entries_;
  std::vector<Env> envs_;
};

// Pops `n` entries on scope exit, exception-safe.
struct ScopedBinders {
  Ctx& ctx;
  int n = 0;
  explicit ScopedBinders(Ctx& c) : ctx(c) {}
  ~ScopedBinders() {
    while (n-- > 0) ctx.pop();
  }
  void fresh(const std::string& name, ValuePtr type) {
    ctx.push_fresh(name, std::move(type));
    ++n;
  }
  void value(const std::string& name, ValuePtr type, ValuePtr v) {
    ctx.push_value(name, std::move(type), std::move(v));
    ++n;
  }
};

}  // namespace hott
