#include "hott/eval.hpp"

#include <optional>

#include "hott/builtins.hpp"
#include "hott/errors.hpp"

namespace hott {

ValuePtr apply_closure(const Signature& sig, const Closure& c, const std::vector<ValuePtr>& args) {
  if (static_cast<int>(args.size()) != c.arity)
    throw KernelPanic("closure applied with wrong arity");
  if (c.is_native()) return c.native(args);
  Env env = c.env;
  for (const auto& a : args) env = env.push(a);
  return eval(sig, env, c.body);
}

static std::optional<ValuePtr> reduce_builtin(const Signature& sig, const std::string& name,
                                              const std::vector<SpineItem>& spine) {
  const BuiltinInfo* info = builtin_info(name);
  if (!info || info->kind != BuiltinKind::Eliminator) return std::nullopt;
  if (static_cast<int>(spine.size()) < info->arity) return std::nullopt;
  std::vector<ValuePtr> args;
  args.reserve(spine.size());
  for (const auto& it : spine) {
    const SApp* a = std::get_if<SApp>(&it);
    if (!a) return std::nullopt;
    args.push_back(a->arg);
  }
  const ValuePtr& scrut = args[static_cast<std::size_t>(info->scrut_pos)];
  ValuePtr result;
  if (name == "ind1" && is_const_head(scrut, "star", 0)) {
    result = args[1];
  } else if (name == "ind2" && is_const_head(scrut, "zero2", 0)) {
    result = args[1];
  } else if (name == "ind2" && is_const_head(scrut, "one2", 0)) {
    result = args[2];
  } else if ((name == "recS1" && is_const_head(scrut, "base1", 0)) ||
             (name == "recS2" && is_const_head(scrut, "base2", 0))) {
    result = args[1];
  } else {
    return std::nullopt;
  }
  // re-apply any arguments past the eliminator's arity
  for (std::size_t i = static_cast<std::size_t>(info->arity); i < args.size(); ++i)
    result = v_app(sig, result, args[i]);
  return result;
}

ValuePtr v_app(const Signature& sig, const ValuePtr& fn, const ValuePtr& arg) {
  if (const VLam* l = std::get_if<VLam>(&fn->node)) return apply_closure(sig, l->body, {arg});
  if (const VNeutral* n = std::get_if<VNeutral>(&fn->node)) {
    VNeutral out = *n;
    out.spine.push_back(SApp{arg});
    if (const NConst* c = std::get_if<NConst>(&out.head)) {
      if (auto r = reduce_builtin(sig, c->name, out.spine)) return *r;
    }
    return v_mk(std::move(out));
  }
  throw KernelPanic("v_app: applied a non-function value");
}

ValuePtr v_app(const Signature& sig, ValuePtr fn, const std::vector<ValuePtr>& args) {
  for (const auto& a : args) fn = v_app(sig, fn, a);
  return fn;
}

ValuePtr v_fst(const Signature& sig, const ValuePtr& v) {
  (void)sig;
  if (const VPair* p = std::get_if<VPair>(&v->node)) return p->fst;
  if (const VNeutral* n = std::get_if<VNeutral>(&v->node)) {
    VNeutral out = *n;
    out.spine.push_back(SFst{});
    return v_mk(std::move(out));
  }
  throw KernelPanic("v_fst: not a pair");
}

ValuePtr v_snd(const Signature& sig, const ValuePtr& v) {
  (void)sig;
  if (const VPair* p = std::get_if<VPair>(&v->node)) return p->snd;
  if (const VNeutral* n = std::get_if<VNeutral>(&v->node)) {
    VNeutral out = *n;
    out.spine.push_back(SSnd{});
    return v_mk(std::move(out));
  }
  throw KernelPanic("v_snd: not a pair");
}

ValuePtr v_j(const Signature& sig, const Closure& motive, const Closure& base,
             const ValuePtr& scrut) {
  if (const VRefl* r = std::get_if<VRefl>(&scrut->node)) return apply_closure(sig, base, {r->t});
  if (const VNeutral* n = std::get_if<VNeutral>(&scrut->node)) {
    VNeutral out = *n;
    out.spine.push_back(SJ{motive, base});
    return v_mk(std::move(out));
  }
  throw KernelPanic("v_j: scrutinee is not a path value");
}

ValuePtr v_indw(const Signature& sig, const Closure& motive, const Closure& step,
                const ValuePtr& scrut) {
  if (const VSup* s = std::get_if<VSup>(&scrut->node)) {
    ValuePtr branch = s->branch;
    Closure m = motive;
    Closure st = step;
    ValuePtr rec = v_lam("y", [&sig, m, st, branch](ValuePtr y) {
      return v_indw(sig, m, st, v_app(sig, branch, y));
    });
    return apply_closure(sig, step, {s->index, s->label, s->branch, rec});
  }
  if (const VNeutral* n = std::get_if<VNeutral>(&scrut->node)) {
    VNeutral out = *n;
    out.spine.push_back(SIndW{motive, step});
    return v_mk(std::move(out));
  }
  throw KernelPanic("v_indw: scrutinee is not a tree value");
}

ValuePtr eval(const Signature& sig, const Env& env, const TermPtr& t) {
  return std::visit(
      overloaded{
          [&](const Var& v) -> ValuePtr {
            if (v.ix >= env.size()) throw KernelPanic("IllScoped: Var index exceeds environment");
            return env.at(v.ix);
          },
          [&](const Univ& u) -> ValuePtr { return v_univ(u.level); },
          [&](const Pi& p) -> ValuePtr {
            return v_mk(VPi{p.name, eval(sig, env, p.dom), Closure{env, p.cod, 1, nullptr}});
          },
          [&](const Lam& l) -> ValuePtr {
            return v_mk(VLam{l.name, Closure{env, l.body, 1, nullptr}});
          },
          [&](const App& a) -> ValuePtr {
            return v_app(sig, eval(sig, env, a.fn), eval(sig, env, a.arg));
          },
          [&](const Sigma& s) -> ValuePtr {
            return v_mk(VSigma{s.name, eval(sig, env, s.fst_ty), Closure{env, s.snd_ty, 1, nullptr}});
          },
          [&](const PairT& p) -> ValuePtr {
            return v_pair(eval(sig, env, p.fst), eval(sig, env, p.snd));
          },
          [&](const FstT& f) -> ValuePtr { return v_fst(sig, eval(sig, env, f.t)); },
          [&](const SndT& s) -> ValuePtr { return v_snd(sig, eval(sig, env, s.t)); },
          [&](const IdT& i) -> ValuePtr {
            return v_id(eval(sig, env, i.ty), eval(sig, env, i.lhs), eval(sig, env, i.rhs));
          },
          [&](const ReflT& r) -> ValuePtr { return v_refl(eval(sig, env, r.t)); },
          [&](const JT& j) -> ValuePtr {
            return v_j(sig, Closure{env, j.motive, 2, nullptr}, Closure{env, j.base, 1, nullptr},
                       eval(sig, env, j.scrut));
          },
          [&](const IWT& w) -> ValuePtr {
            return v_mk(VIW{w.name, eval(sig, env, w.idx_ty), Closure{env, w.fam_a, 1, nullptr},
                            Closure{env, w.fam_b, 2, nullptr}, Closure{env, w.reindex, 3, nullptr},
                            eval(sig, env, w.index)});
          },
          [&](const SupT& s) -> ValuePtr {
            return v_mk(VSup{eval(sig, env, s.index), eval(sig, env, s.label),
                             eval(sig, env, s.branch)});
          },
          [&](const IndWT& iw) -> ValuePtr {
            return v_indw(sig, Closure{env, iw.motive, 2, nullptr},
                          Closure{env, iw.step, 4, nullptr}, eval(sig, env, iw.scrut));
          },
          [&](const ConstT& c) -> ValuePtr {
            ValuePtr head;
            if (const SignatureEntry* e = sig.find(c.name)) {
              if (e->body_value)
                head = e->body_value;  // delta
              else
                head = v_const_head(c.name);  // axiom
            } else if (builtin_info(c.name)) {
              head = v_const_head(c.name);
            } else {
              fail(TypeErrorKind::UnboundName, "unbound constant '" + c.name + "'");
            }
            for (const auto& a : c.spine) head = v_app(sig, head, eval(sig, env, a));
            return head;
          },
      },
      t->node);
}

ValuePtr eval_closed(const Signature& sig, const TermPtr& t) { return eval(sig, Env{}, t); }

// -- readback -----------------------------------------------------------------

static TermPtr quote_neutral(const Signature& sig, int depth, const VNeutral& n) {
  TermPtr acc;
  bool const_spine = false;
  if (const NVar* v = std::get_if<NVar>(&n.head)) {
    if (v->level >= depth) throw KernelPanic("quote: variable level out of range");
    acc = t_var(depth - 1 - v->level);
  } else {
    acc = t_const(std::get<NConst>(n.head).name);
    const_spine = true;
  }
  for (const auto& item : n.spine) {
    std::visit(overloaded{
                   [&](const SApp& a) {
                     TermPtr arg = quote(sig, depth, a.arg);
                     if (const_spine) {
                       const auto& c = std::get<ConstT>(acc->node);
                       std::vector<TermPtr> spine = c.spine;
                       spine.push_back(arg);
                       acc = t_const(c.name, std::move(spine));
                     } else {
                       acc = t_app(acc, arg);
                     }
                   },
                   [&](const SFst&) {
                     acc = t_fst(acc);
                     const_spine = false;
                   },
                   [&](const SSnd&) {
                     acc = t_snd(acc);
                     const_spine = false;
                   },
                   [&](const SJ& j) {
                     TermPtr motive =
                         quote(sig, depth + 2,
                               apply_closure(sig, j.motive, {v_var(depth), v_var(depth + 1)}));
                     TermPtr base = quote(sig, depth + 1, apply_closure(sig, j.base, {v_var(depth)}));
                     acc = t_j(motive, base, acc);
                     const_spine = false;
                   },
                   [&](const SIndW& iw) {
                     TermPtr motive =
                         quote(sig, depth + 2,
                               apply_closure(sig, iw.motive, {v_var(depth), v_var(depth + 1)}));
                     TermPtr step =
                         quote(sig, depth + 4,
                               apply_closure(sig, iw.step,
                                             {v_var(depth), v_var(depth + 1), v_var(depth + 2),
                                              v_var(depth + 3)}));
                     acc = t_indw(motive, step, acc);
                     const_spine = false;
                   },
               },
               item);
  }
  return acc;
}

TermPtr quote(const Signature& sig, int depth, const ValuePtr& v) {
  return std::visit(
      overloaded{
          [&](const VUniv& u) -> TermPtr { return t_univ(u.level); },
          [&](const VPi& p) -> TermPtr {
            return t_pi(p.name, quote(sig, depth, p.dom),
                        quote(sig, depth + 1, apply_closure(sig, p.cod, {v_var(depth)})));
          },
          [&](const VLam& l) -> TermPtr {
            return t_lam(l.name, quote(sig, depth + 1, apply_closure(sig, l.body, {v_var(depth)})));
          },
          [&](const VSigma& s) -> TermPtr {
            return t_sigma(s.name, quote(sig, depth, s.fst_ty),
                           quote(sig, depth + 1, apply_closure(sig, s.snd_ty, {v_var(depth)})));
          },
          [&](const VPair& p) -> TermPtr {
            return t_pair(quote(sig, depth, p.fst), quote(sig, depth, p.snd));
          },
          [&](const VId& i) -> TermPtr {
            return t_id(quote(sig, depth, i.ty), quote(sig, depth, i.lhs),
                        quote(sig, depth, i.rhs));
          },
          [&](const VRefl& r) -> TermPtr { return t_refl(quote(sig, depth, r.t)); },
          [&](const VIW& w) -> TermPtr {
            return t_iw(w.name, quote(sig, depth, w.idx_ty),
                        quote(sig, depth + 1, apply_closure(sig, w.fam_a, {v_var(depth)})),
                        quote(sig, depth + 2,
                              apply_closure(sig, w.fam_b, {v_var(depth), v_var(depth + 1)})),
                        quote(sig, depth + 3,
                              apply_closure(sig, w.reindex,
                                            {v_var(depth), v_var(depth + 1), v_var(depth + 2)})),
                        quote(sig, depth, w.index));
          },
          [&](const VSup& s) -> TermPtr {
            return t_sup(quote(sig, depth, s.index), quote(sig, depth, s.label),
                         quote(sig, depth, s.branch));
          },
          [&](const VNeutral& n) -> TermPtr { return quote_neutral(sig, depth, n); },
      },
      v->node);
}

static TermPtr quote_type(const Signature& sig, int depth, const ValuePtr& v);

TermPtr quote_at(const Signature& sig, int depth, const ValuePtr& ty, const ValuePtr& v) {
  if (const VPi* p = std::get_if<VPi>(&ty->node)) {
    ValuePtr fresh = v_var(depth);
    // prefer the function's own binder hint over the type's
    std::string hint = p->name;
    if (const VLam* l = std::get_if<VLam>(&v->node)) hint = l->name;
    if (hint.empty() || hint == "_") hint = "x";
    return t_lam(hint, quote_at(sig, depth + 1, apply_closure(sig, p->cod, {fresh}),
                                v_app(sig, v, fresh)));
  }
  if (const VSigma* s = std::get_if<VSigma>(&ty->node)) {
    ValuePtr a = v_fst(sig, v);
    return t_pair(quote_at(sig, depth, s->fst_ty, a),
                  quote_at(sig, depth, apply_closure(sig, s->snd_ty, {a}), v_snd(sig, v)));
  }
  if (const VId* i = std::get_if<VId>(&ty->node)) {
    if (const VRefl* r = std::get_if<VRefl>(&v->node))
      return t_refl(quote_at(sig, depth, i->ty, r->t));
    return quote(sig, depth, v);
  }
  if (std::get_if<VUniv>(&ty->node)) return quote_type(sig, depth, v);
  return quote(sig, depth, v);
}

// Structural readback of a type value, recursing with quote_at on components.
static TermPtr quote_type(const Signature& sig, int depth, const ValuePtr& v) {
  return std::visit(
      overloaded{
          [&](const VPi& p) -> TermPtr {
            return t_pi(p.name, quote_type(sig, depth, p.dom),
                        quote_type(sig, depth + 1, apply_closure(sig, p.cod, {v_var(depth)})));
          },
          [&](const VSigma& s) -> TermPtr {
            return t_sigma(s.name, quote_type(sig, depth, s.fst_ty),
                           quote_type(sig, depth + 1, apply_closure(sig, s.snd_ty, {v_var(depth)})));
          },
          [&](const VId& i) -> TermPtr {
            return t_id(quote_type(sig, depth, i.ty), quote_at(sig, depth, i.ty, i.lhs),
                        quote_at(sig, depth, i.ty, i.rhs));
          },
          [&](const VUniv& u) -> TermPtr { return t_univ(u.level); },
          [&](const auto&) -> TermPtr { return quote(sig, depth, v); },
      },
      v->node);
}

// -- conversion ---------------------------------------------------------------

static bool conv_closure(const Signature& sig, int depth, const Closure& a, const Closure& b,
                         int arity) {
  std::vector<ValuePtr> fresh;
  fresh.reserve(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) fresh.push_back(v_var(depth + i));
  return conv(sig, depth + arity, apply_closure(sig, a, fresh), apply_closure(sig, b, fresh));
}

static bool conv_spine(const Signature& sig, int depth, const std::vector<SpineItem>& a,
                       const std::vector<SpineItem>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].index() != b[i].index()) return false;
    bool ok = std::visit(
        overloaded{
            [&](const SApp& x) { return conv(sig, depth, x.arg, std::get<SApp>(b[i]).arg); },
            [&](const SFst&) { return true; },
            [&](const SSnd&) { return true; },
            [&](const SJ& x) {
              const auto& y = std::get<SJ>(b[i]);
              return conv_closure(sig, depth, x.motive, y.motive, 2) &&
                     conv_closure(sig, depth, x.base, y.base, 1);
            },
            [&](const SIndW& x) {
              const auto& y = std::get<SIndW>(b[i]);
              return conv_closure(sig, depth, x.motive, y.motive, 2) &&
                     conv_closure(sig, depth, x.step, y.step, 4);
            },
        },
        a[i]);
    if (!ok) return false;
  }
  return true;
}

bool conv(const Signature& sig, int depth, const ValuePtr& a, const ValuePtr& b) {
  if (a.get() == b.get()) return true;

  // eta for functions: if either side is a lambda, compare applied to a fresh
  // variable (the other side must itself be function-like for well-typed
  // inputs).
  const bool a_lam = std::holds_alternative<VLam>(a->node);
  const bool b_lam = std::holds_alternative<VLam>(b->node);
  if (a_lam || b_lam) {
    ValuePtr fresh = v_var(depth);
    return conv(sig, depth + 1, v_app(sig, a, fresh), v_app(sig, b, fresh));
  }
  // eta for pairs
  const bool a_pair = std::holds_alternative<VPair>(a->node);
  const bool b_pair = std::holds_alternative<VPair>(b->node);
  if (a_pair || b_pair) {
    if ((a_pair && !b_pair && !std::holds_alternative<VNeutral>(b->node)) ||
        (b_pair && !a_pair && !std::holds_alternative<VNeutral>(a->node)))
      return false;
    return conv(sig, depth, v_fst(sig, a), v_fst(sig, b)) &&
           conv(sig, depth, v_snd(sig, a), v_snd(sig, b));
  }

  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const VUniv& x) { return x.level == std::get<VUniv>(b->node).level; },
          [&](const VPi& x) {
            const auto& y = std::get<VPi>(b->node);
            return conv(sig, depth, x.dom, y.dom) && conv_closure(sig, depth, x.cod, y.cod, 1);
          },
          [&](const VLam&) { return false; },   // handled above
          [&](const VPair&) { return false; },  // handled above
          [&](const VSigma& x) {
            const auto& y = std::get<VSigma>(b->node);
            return conv(sig, depth, x.fst_ty, y.fst_ty) &&
                   conv_closure(sig, depth, x.snd_ty, y.snd_ty, 1);
          },
          [&](const VId& x) {
            const auto& y = std::get<VId>(b->node);
            return conv(sig, depth, x.ty, y.ty) && conv(sig, depth, x.lhs, y.lhs) &&
                   conv(sig, depth, x.rhs, y.rhs);
          },
          [&](const VRefl& x) { return conv(sig, depth, x.t, std::get<VRefl>(b->node).t); },
          [&](const VIW& x) {
            const auto& y = std::get<VIW>(b->node);
            return conv(sig, depth, x.idx_ty, y.idx_ty) &&
                   conv_closure(sig, depth, x.fam_a, y.fam_a, 1) &&
                   conv_closure(sig, depth, x.fam_b, y.fam_b, 2) &&
                   conv_closure(sig, depth, x.reindex, y.reindex, 3) &&
                   conv(sig, depth, x.index, y.index);
          },
          [&](const VSup& x) {
            // the index annotation is determined by the type, so it is not
            // compared
            const auto& y = std::get<VSup>(b->node);
            return conv(sig, depth, x.label, y.label) && conv(sig, depth, x.branch, y.branch);
          },
          [&](const VNeutral& x) {
            const auto& y = std::get<VNeutral>(b->node);
            if (x.head.index() != y.head.index()) return false;
            if (const NVar* v = std::get_if<NVar>(&x.head)) {
              if (v->level != std::get<NVar>(y.head).level) return false;
            } else if (std::get<NConst>(x.head).name != std::get<NConst>(y.head).name) {
              return false;
            }
            return conv_spine(sig, depth, x.spine, y.spine);
          },
      },
      a->node);
}

}  // namespace hott
