#include "hott/value.hpp"

#include "hott/errors.hpp"

namespace hott {

ValuePtr Env::at(int ix) const {
  const Node* n = head_.get();
  while (n && ix > 0) {
    n = n->next.get();
    --ix;
  }
  if (!n) throw KernelPanic("IllScoped: environment lookup out of range");
  return n->v;
}

Env Env::push(ValuePtr v) const {
  Env e;
  auto node = std::make_shared<Node>();
  node->v = std::move(v);
  node->next = head_;
  node->len = size() + 1;
  e.head_ = std::move(node);
  return e;
}

ValuePtr v_mk(ValueNode n) { return std::make_shared<Value>(Value{std::move(n)}); }

ValuePtr v_univ(int level) { return v_mk(VUniv{level}); }

ValuePtr v_var(int level) { return v_mk(VNeutral{NVar{level}, {}}); }

ValuePtr v_const_head(const std::string& name) { return v_mk(VNeutral{NConst{name}, {}}); }

ValuePtr v_refl(ValuePtr t) { return v_mk(VRefl{std::move(t)}); }
ValuePtr v_pair(ValuePtr a, ValuePtr b) { return v_mk(VPair{std::move(a), std::move(b)}); }
ValuePtr v_id(ValuePtr ty, ValuePtr l, ValuePtr r) {
  return v_mk(VId{std::move(ty), std::move(l), std::move(r)});
}

static Closure native1(std::function<ValuePtr(ValuePtr)> f) {
  Closure c;
  c.arity = 1;
  c.native = [f = std::move(f)](const std::vector<ValuePtr>& args) { return f(args.at(0)); };
  return c;
}

ValuePtr v_pi(std::string name, ValuePtr dom, std::function<ValuePtr(ValuePtr)> cod) {
  return v_mk(VPi{std::move(name), std::move(dom), native1(std::move(cod))});
}

ValuePtr v_lam(std::string name, std::function<ValuePtr(ValuePtr)> body) {
  return v_mk(VLam{std::move(name), native1(std::move(body))});
}

const VNeutral* as_neutral(const ValuePtr& v) { return std::get_if<VNeutral>(&v->node); }

bool is_const_head(const ValuePtr& v, const std::string& name, std::size_t spine_len) {
  const VNeutral* n = as_neutral(v);
  if (!n) return false;
  const NConst* c = std::get_if<NConst>(&n->head);
  return c && c->name == name && n->spine.size() == spine_len;
}

}  // namespace hott
