#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "hott/term.hpp"

namespace hott {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

// Persistent environment; extension shares the tail.
class Env {
 public:
  Env() = default;
  int size() const { return head_ ? head_->len : 0; }
  ValuePtr at(int ix) const;  // ix 0 = innermost
  Env push(ValuePtr v) const;

 private:
  struct Node {
    ValuePtr v;
    std::shared_ptr<const Node> next;
    int len;
  };
  std::shared_ptr<const Node> head_;
};

// A binder body paired with its captured environment. `arity` is the number
// of values the body expects; native closures are used for internally built
// functions (the indW recursor argument, schematic constant types).
struct Closure {
  Env env;
  TermPtr body;
  int arity = 1;
  std::function<ValuePtr(const std::vector<ValuePtr>&)> native;

  bool is_native() const { return static_cast<bool>(native); }
};

struct VUniv {
  int level;
};
struct VPi {
  std::string name;
  ValuePtr dom;
  Closure cod;
};
struct VLam {
  std::string name;
  Closure body;
};
struct VSigma {
  std::string name;
  ValuePtr fst_ty;
  Closure snd_ty;
};
struct VPair {
  ValuePtr fst;
  ValuePtr snd;
};
struct VId {
  ValuePtr ty;
  ValuePtr lhs;
  ValuePtr rhs;
};
struct VRefl {
  ValuePtr t;
};
struct VIW {
  std::string name;
  ValuePtr idx_ty;
  Closure fam_a;   // arity 1
  Closure fam_b;   // arity 2
  Closure reindex; // arity 3
  ValuePtr index;
};
struct VSup {
  ValuePtr index;  // annotation; ignored by conversion
  ValuePtr label;
  ValuePtr branch;
};

// Neutral heads: free variables (de Bruijn levels) and constants without a
// delta rule (axioms, builtin canonicals, stuck builtin eliminators).
struct NVar {
  int level;
};
struct NConst {
  std::string name;
};
using Head = std::variant<NVar, NConst>;

struct SApp {
  ValuePtr arg;
};
struct SFst {};
struct SSnd {};
struct SJ {
  Closure motive;  // arity 2
  Closure base;    // arity 1
};
struct SIndW {
  Closure motive;  // arity 2
  Closure step;    // arity 4
};
using SpineItem = std::variant<SApp, SFst, SSnd, SJ, SIndW>;

struct VNeutral {
  Head head;
  std::vector<SpineItem> spine;
};

using ValueNode =
    std::variant<VUniv, VPi, VLam, VSigma, VPair, VId, VRefl, VIW, VSup, VNeutral>;

struct Value {
  ValueNode node;
};

ValuePtr v_mk(ValueNode n);
ValuePtr v_univ(int level);
ValuePtr v_var(int level);  // fresh neutral
ValuePtr v_const_head(const std::string& name);
ValuePtr v_refl(ValuePtr t);
ValuePtr v_pair(ValuePtr a, ValuePtr b);
ValuePtr v_id(ValuePtr ty, ValuePtr l, ValuePtr r);

// Native function helpers for schematic types.
ValuePtr v_pi(std::string name, ValuePtr dom, std::function<ValuePtr(ValuePtr)> cod);
ValuePtr v_lam(std::string name, std::function<ValuePtr(ValuePtr)> body);

const VNeutral* as_neutral(const ValuePtr& v);
bool is_const_head(const ValuePtr& v, const std::string& name, std::size_t spine_len);

}  // namespace hott
