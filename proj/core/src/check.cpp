#include "hott/check.hpp"

#include <algorithm>

#include "hott/builtins.hpp"
#include "hott/errors.hpp"

namespace hott {

const CtxEntry& Ctx::lookup(int ix) const {
  if (ix < 0 || ix >= depth()) throw KernelPanic("IllScoped: context lookup out of range");
  return entries_[entries_.size() - 1 - static_cast<std::size_t>(ix)];
}

void Ctx::push_fresh(const std::string& name, ValuePtr type) {
  ValuePtr v = v_var(depth());
  entries_.push_back(CtxEntry{name, std::move(type), v});
  envs_.push_back(envs_.back().push(v));
}

void Ctx::push_value(const std::string& name, ValuePtr type, ValuePtr value) {
  entries_.push_back(CtxEntry{name, std::move(type), value});
  envs_.push_back(envs_.back().push(value));
}

void Ctx::pop() {
  if (entries_.empty()) throw KernelPanic("Ctx::pop on empty context");
  entries_.pop_back();
  envs_.pop_back();
}

std::vector<std::string> Ctx::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

static TermShowFn g_show = nullptr;
void set_term_show(TermShowFn fn) { g_show = fn; }
std::string show_term(const TermPtr& t) { return g_show ? g_show(t) : show_raw(t); }
std::string show_value(const Signature& sig, int depth, const ValuePtr& v) {
  return show_term(quote(sig, depth, v));
}

// ---------------------------------------------------------------------------

namespace {

const VPi* expect_pi(const Signature& sig, int depth, const ValuePtr& ty, const TermPtr& at) {
  const VPi* p = std::get_if<VPi>(&ty->node);
  if (!p)
    fail(TypeErrorKind::NotAFunction,
         "expected a function, but '" + show_term(at) + "' has type " +
             show_value(sig, depth, ty),
         at.get());
  return p;
}

const VSigma* expect_sigma(const Signature& sig, int depth, const ValuePtr& ty, const TermPtr& at) {
  const VSigma* s = std::get_if<VSigma>(&ty->node);
  if (!s)
    fail(TypeErrorKind::NotAPair,
         "expected a pair, but '" + show_term(at) + "' has type " + show_value(sig, depth, ty),
         at.get());
  return s;
}

[[noreturn]] void mismatch(const Signature& sig, int depth, const ValuePtr& expected,
                           const ValuePtr& got, const TermPtr& at) {
  fail(TypeErrorKind::TypeMismatch,
       "type mismatch at '" + show_term(at) + "'\n  expected: " +
           show_value(sig, depth, expected) + "\n  got:      " + show_value(sig, depth, got),
       at.get());
}

// Closure over a term at the current context environment.
Closure clo(const Ctx& ctx, const TermPtr& body, int arity) {
  return Closure{ctx.env(), body, arity, nullptr};
}

}  // namespace

ValuePtr infer(const Signature& sig, Ctx& ctx, const TermPtr& t) {
  return std::visit(
      overloaded{
          [&](const Var& v) -> ValuePtr {
            if (v.ix < 0 || v.ix >= ctx.depth())
              fail(TypeErrorKind::UnboundName,
                   "variable index " + std::to_string(v.ix) + " out of scope");
            return ctx.lookup(v.ix).type;
          },
          [&](const Univ& u) -> ValuePtr {
            if (u.level < 0 || u.level > sig.max_level)
              fail(TypeErrorKind::LevelOverflow,
                   "universe U" + std::to_string(u.level) + " exceeds MAX_LEVEL " +
                       std::to_string(sig.max_level));
            return v_univ(u.level + 1);
          },
          [&](const Pi& p) -> ValuePtr {
            int l1 = check_type(sig, ctx, p.dom);
            ScopedBinders sb(ctx);
            sb.fresh(p.name, eval(sig, ctx.env(), p.dom));
            int l2 = check_type(sig, ctx, p.cod);
            return v_univ(std::max(l1, l2));
          },
          [&](const Lam&) -> ValuePtr {
            fail(TypeErrorKind::Other, "cannot infer the type of an unannotated function '" +
                                           show_term(t) + "'");
          },
          [&](const App& a) -> ValuePtr {
            ValuePtr fty = infer(sig, ctx, a.fn);
            const VPi* p = expect_pi(sig, ctx.depth(), fty, a.fn);
            check(sig, ctx, a.arg, p->dom);
            return apply_closure(sig, p->cod, {eval(sig, ctx.env(), a.arg)});
          },
          [&](const Sigma& s) -> ValuePtr {
            int l1 = check_type(sig, ctx, s.fst_ty);
            ScopedBinders sb(ctx);
            sb.fresh(s.name, eval(sig, ctx.env(), s.fst_ty));
            int l2 = check_type(sig, ctx, s.snd_ty);
            return v_univ(std::max(l1, l2));
          },
          [&](const PairT&) -> ValuePtr {
            fail(TypeErrorKind::Other,
                 "cannot infer the type of a bare pair '" + show_term(t) + "'");
          },
          [&](const FstT& f) -> ValuePtr {
            ValuePtr pty = infer(sig, ctx, f.t);
            return expect_sigma(sig, ctx.depth(), pty, f.t)->fst_ty;
          },
          [&](const SndT& s) -> ValuePtr {
            ValuePtr pty = infer(sig, ctx, s.t);
            const VSigma* st = expect_sigma(sig, ctx.depth(), pty, s.t);
            return apply_closure(sig, st->snd_ty, {v_fst(sig, eval(sig, ctx.env(), s.t))});
          },
          [&](const IdT& i) -> ValuePtr {
            int l = check_type(sig, ctx, i.ty);
            ValuePtr ty = eval(sig, ctx.env(), i.ty);
            check(sig, ctx, i.lhs, ty);
            check(sig, ctx, i.rhs, ty);
            return v_univ(l);
          },
          [&](const ReflT& r) -> ValuePtr {
            // refl also infers; J scrutinees like J(M, m, refl a) need it
            ValuePtr a_ty = infer(sig, ctx, r.t);
            ValuePtr av = eval(sig, ctx.env(), r.t);
            return v_id(a_ty, av, av);
          },
          [&](const JT& j) -> ValuePtr {
            ValuePtr qty = infer(sig, ctx, j.scrut);
            const VId* id = std::get_if<VId>(&qty->node);
            if (!id)
              fail(TypeErrorKind::BadEliminator, "J eliminates a path, but '" +
                                                     show_term(j.scrut) + "' has type " +
                                                     show_value(sig, ctx.depth(), qty));
            Closure motive = clo(ctx, j.motive, 2);
            {
              ScopedBinders sb(ctx);
              sb.fresh("y", id->ty);
              ValuePtr y = ctx.lookup(0).value;
              sb.fresh("p", v_id(id->ty, id->lhs, y));
              check_type(sig, ctx, j.motive);
            }
            {
              // base case, instantiated at the left endpoint
              ValuePtr expected = apply_closure(sig, motive, {id->lhs, v_refl(id->lhs)});
              ScopedBinders sb(ctx);
              sb.value("x", id->ty, id->lhs);
              check(sig, ctx, j.base, expected);
            }
            return apply_closure(sig, motive, {id->rhs, eval(sig, ctx.env(), j.scrut)});
          },
          [&](const IWT& w) -> ValuePtr {
            int li = check_type(sig, ctx, w.idx_ty);
            ValuePtr ity = eval(sig, ctx.env(), w.idx_ty);
            int la, lb;
            {
              ScopedBinders sb(ctx);
              sb.fresh(w.name, ity);
              la = check_type(sig, ctx, w.fam_a);
              sb.fresh("a", eval(sig, ctx.env(), w.fam_a));
              lb = check_type(sig, ctx, w.fam_b);
              sb.fresh("y", eval(sig, ctx.env(), w.fam_b));
              check(sig, ctx, w.reindex, ity);
            }
            check(sig, ctx, w.index, ity);
            return v_univ(std::max(li, std::max(la, lb)));
          },
          [&](const SupT&) -> ValuePtr {
            fail(TypeErrorKind::Other,
                 "cannot infer the type of 'sup' outside a checked position");
          },
          [&](const IndWT& iw) -> ValuePtr {
            ValuePtr sty = infer(sig, ctx, iw.scrut);
            const VIW* w = std::get_if<VIW>(&sty->node);
            if (!w)
              fail(TypeErrorKind::BadEliminator, "indW eliminates a tree, but '" +
                                                     show_term(iw.scrut) + "' has type " +
                                                     show_value(sig, ctx.depth(), sty));
            Closure motive = clo(ctx, iw.motive, 2);
            {
              ScopedBinders sb(ctx);
              sb.fresh("i", w->idx_ty);
              ValuePtr i = ctx.lookup(0).value;
              VIW at_i = *w;
              at_i.index = i;
              sb.fresh("w", v_mk(at_i));
              check_type(sig, ctx, iw.motive);
            }
            {
              ScopedBinders sb(ctx);
              sb.fresh("i", w->idx_ty);
              ValuePtr i = ctx.lookup(0).value;
              sb.fresh("a", apply_closure(sig, w->fam_a, {i}));
              ValuePtr a = ctx.lookup(0).value;
              VIW base = *w;
              ValuePtr fty = v_pi("y", apply_closure(sig, w->fam_b, {i, a}),
                                  [&sig, base, i, a](ValuePtr y) {
                                    VIW at = base;
                                    at.index = apply_closure(sig, base.reindex, {i, a, y});
                                    return v_mk(at);
                                  });
              sb.fresh("f", fty);
              ValuePtr f = ctx.lookup(0).value;
              ValuePtr gty = v_pi("y", apply_closure(sig, w->fam_b, {i, a}),
                                  [&sig, base, motive, i, a, f](ValuePtr y) {
                                    ValuePtr ti = apply_closure(sig, base.reindex, {i, a, y});
                                    return apply_closure(sig, motive,
                                                         {ti, v_app(sig, f, y)});
                                  });
              sb.fresh("g", gty);
              ValuePtr expected =
                  apply_closure(sig, motive, {i, v_mk(VSup{i, a, f})});
              check(sig, ctx, iw.step, expected);
            }
            return apply_closure(sig, motive, {w->index, eval(sig, ctx.env(), iw.scrut)});
          },
          [&](const ConstT& c) -> ValuePtr {
            ValuePtr ty = const_head_type(sig, ctx, c, t);
            for (const auto& arg : c.spine) {
              const VPi* p = expect_pi(sig, ctx.depth(), ty, t);
              check(sig, ctx, arg, p->dom);
              ty = apply_closure(sig, p->cod, {eval(sig, ctx.env(), arg)});
            }
            return ty;
          },
      },
      t->node);
}

// Schematic types for built-in constants. Eliminators read their universe
// level off the first spine argument.
static ValuePtr builtin_const_type(const Signature& sig, Ctx& ctx, const ConstT& c,
                                   const TermPtr& at) {
  const std::string& n = c.name;
  auto cv = [](const char* s) { return v_const_head(s); };
  if (n == "Empty" || n == "Unit" || n == "Two" || n == "S1" || n == "S2") return v_univ(0);
  if (n == "star") return cv("Unit");
  if (n == "zero2" || n == "one2") return cv("Two");
  if (n == "base1") return cv("S1");
  if (n == "base2") return cv("S2");
  if (n == "loop1") return v_id(cv("S1"), cv("base1"), cv("base1"));
  if (n == "loop2")
    return v_id(v_id(cv("S2"), cv("base2"), cv("base2")), v_refl(cv("base2")),
                v_refl(cv("base2")));

  // eliminators
  if (c.spine.empty())
    fail(TypeErrorKind::BadEliminator, "eliminator '" + n + "' needs its motive argument");

  if (n == "ind0" || n == "ind1" || n == "ind2") {
    const char* data = n == "ind0" ? "Empty" : (n == "ind1" ? "Unit" : "Two");
    // The motive's shape is fixed up to its level; a lambda motive is checked
    // under the data type to discover the level, anything else is inferred.
    int lvl = -1;
    if (const Lam* l = std::get_if<Lam>(&c.spine[0]->node)) {
      ScopedBinders sb(ctx);
      sb.fresh(l->name, cv(data));
      lvl = check_type(sig, ctx, l->body);
    } else {
      ValuePtr first_ty = infer(sig, ctx, c.spine[0]);
      const VPi* p = std::get_if<VPi>(&first_ty->node);
      bool ok = p && conv(sig, ctx.depth(), p->dom, cv(data));
      if (ok) {
        ValuePtr cod = apply_closure(sig, p->cod, {v_var(ctx.depth())});
        if (const VUniv* u = std::get_if<VUniv>(&cod->node)) lvl = u->level;
      }
      if (lvl < 0)
        fail(TypeErrorKind::BadEliminator, "motive of '" + n + "' must be a family " +
                                               std::string(data) + " -> U_l, got " +
                                               show_value(sig, ctx.depth(), first_ty) + " at '" +
                                               show_term(at) + "'");
    }
    ValuePtr mty = v_pi("c", cv(data), [lvl](ValuePtr) { return v_univ(lvl); });
    if (n == "ind0") {
      return v_pi("M", mty, [&sig, cv](ValuePtr M) {
        return v_pi("e", cv("Empty"),
                    [&sig, M](ValuePtr e) { return v_app(sig, M, e); });
      });
    }
    if (n == "ind1") {
      return v_pi("M", mty, [&sig, cv](ValuePtr M) {
        return v_pi("m", v_app(sig, M, cv("star")), [&sig, M, cv](ValuePtr) {
          return v_pi("u", cv("Unit"), [&sig, M](ValuePtr u) { return v_app(sig, M, u); });
        });
      });
    }
    return v_pi("M", mty, [&sig, cv](ValuePtr M) {
      return v_pi("a0", v_app(sig, M, cv("zero2")), [&sig, M, cv](ValuePtr) {
        return v_pi("a1", v_app(sig, M, cv("one2")), [&sig, M, cv](ValuePtr) {
          return v_pi("c", cv("Two"), [&sig, M](ValuePtr cc) { return v_app(sig, M, cc); });
        });
      });
    });
  }

  if (n == "recS1" || n == "recS2") {
    ValuePtr first_ty = infer(sig, ctx, c.spine[0]);
    if (!std::holds_alternative<VUniv>(first_ty->node))
      fail(TypeErrorKind::BadEliminator,
           "first argument of '" + n + "' must be a type, got " +
               show_value(sig, ctx.depth(), first_ty));
    int lvl = std::get<VUniv>(first_ty->node).level;
    bool s1 = n == "recS1";
    return v_pi("X", v_univ(lvl), [&sig, s1, cv](ValuePtr X) {
      return v_pi("x", X, [&sig, s1, X, cv](ValuePtr x) {
        ValuePtr cell = s1 ? v_id(X, x, x)
                           : v_id(v_id(X, x, x), v_refl(x), v_refl(x));
        return v_pi("p", cell, [&sig, s1, X, cv](ValuePtr) {
          return v_pi("s", cv(s1 ? "S1" : "S2"), [X](ValuePtr) { return X; });
        });
      });
    });
  }

  throw KernelPanic("builtin_const_type: unhandled builtin " + n);
}

ValuePtr const_head_type(const Signature& sig, Ctx& ctx, const ConstT& c, const TermPtr& at) {
  if (const SignatureEntry* e = sig.find(c.name)) return e->type_value;
  if (builtin_info(c.name)) return builtin_const_type(sig, ctx, c, at);
  fail(TypeErrorKind::UnboundName, "unbound name '" + c.name + "'");
}

void check(const Signature& sig, Ctx& ctx, const TermPtr& t, const ValuePtr& ty) {
  if (const Lam* l = std::get_if<Lam>(&t->node)) {
    const VPi* p = std::get_if<VPi>(&ty->node);
    if (!p)
      fail(TypeErrorKind::TypeMismatch, "function '" + show_term(t) +
                                            "' checked against non-function type " +
                                            show_value(sig, ctx.depth(), ty));
    ScopedBinders sb(ctx);
    sb.fresh(l->name, p->dom);
    check(sig, ctx, l->body, apply_closure(sig, p->cod, {ctx.lookup(0).value}));
    return;
  }
  if (const PairT* pr = std::get_if<PairT>(&t->node)) {
    const VSigma* s = std::get_if<VSigma>(&ty->node);
    if (!s)
      fail(TypeErrorKind::TypeMismatch, "pair '" + show_term(t) +
                                            "' checked against non-pair type " +
                                            show_value(sig, ctx.depth(), ty));
    check(sig, ctx, pr->fst, s->fst_ty);
    check(sig, ctx, pr->snd, apply_closure(sig, s->snd_ty, {eval(sig, ctx.env(), pr->fst)}));
    return;
  }
  if (const ReflT* r = std::get_if<ReflT>(&t->node)) {
    const VId* id = std::get_if<VId>(&ty->node);
    if (!id)
      fail(TypeErrorKind::TypeMismatch, "'refl' checked against non-path type " +
                                            show_value(sig, ctx.depth(), ty));
    check(sig, ctx, r->t, id->ty);
    ValuePtr tv = eval(sig, ctx.env(), r->t);
    if (!conv(sig, ctx.depth(), tv, id->lhs) || !conv(sig, ctx.depth(), tv, id->rhs))
      fail(TypeErrorKind::TypeMismatch,
           "refl endpoint mismatch: 'refl " + show_term(r->t) + "' does not inhabit " +
               show_value(sig, ctx.depth(), ty));
    return;
  }
  if (const SupT* s = std::get_if<SupT>(&t->node)) {
    const VIW* w = std::get_if<VIW>(&ty->node);
    if (!w)
      fail(TypeErrorKind::TypeMismatch, "'sup' checked against non-tree type " +
                                            show_value(sig, ctx.depth(), ty));
    check(sig, ctx, s->index, w->idx_ty);
    ValuePtr iv = eval(sig, ctx.env(), s->index);
    if (!conv(sig, ctx.depth(), iv, w->index))
      fail(TypeErrorKind::TypeMismatch,
           "sup index annotation does not match the expected tree index at '" + show_term(t) +
               "'");
    check(sig, ctx, s->label, apply_closure(sig, w->fam_a, {iv}));
    ValuePtr lv = eval(sig, ctx.env(), s->label);
    VIW base = *w;
    ValuePtr bty = v_pi("y", apply_closure(sig, w->fam_b, {iv, lv}),
                        [&sig, base, iv, lv](ValuePtr y) {
                          VIW at = base;
                          at.index = apply_closure(sig, base.reindex, {iv, lv, y});
                          return v_mk(at);
                        });
    check(sig, ctx, s->branch, bty);
    return;
  }
  ValuePtr got = infer(sig, ctx, t);
  if (!conv(sig, ctx.depth(), got, ty)) mismatch(sig, ctx.depth(), ty, got, t);
}

int check_type(const Signature& sig, Ctx& ctx, const TermPtr& t) {
  ValuePtr ty = infer(sig, ctx, t);
  if (const VUniv* u = std::get_if<VUniv>(&ty->node)) return u->level;
  fail(TypeErrorKind::NotAType,
       "'" + show_term(t) + "' is not a type (it has type " + show_value(sig, ctx.depth(), ty) +
           ")",
       t.get());
}

void check_decl(Signature& sig, const std::string& name, const TermPtr& type,
                const std::optional<TermPtr>& body, WitnessStatus witness, bool allow_internal) {
  if (sig.frozen() && !allow_internal)
    fail(TypeErrorKind::FrozenSignature, "signature is frozen; cannot declare '" + name + "'");
  if (sig.has(name) || builtin_info(name))
    fail(TypeErrorKind::DuplicateName, "duplicate name '" + name + "'");
  Ctx ctx;
  check_type(sig, ctx, type);
  SignatureEntry e;
  e.name = name;
  e.type = type;
  e.witness = witness;
  e.type_value = eval_closed(sig, type);
  if (body) {
    check(sig, ctx, *body, e.type_value);
    e.body = body;
    e.body_value = eval_closed(sig, *body);
  }
  sig.append(std::move(e), allow_internal);
}

TermPtr normalize(const Signature& sig, Ctx& ctx, const TermPtr& t) {
  ValuePtr ty = infer(sig, ctx, t);
  return quote_at(sig, ctx.depth(), ty, eval(sig, ctx.env(), t));
}

TermPtr normalize_at(const Signature& sig, Ctx& ctx, const TermPtr& t, const ValuePtr& ty) {
  return quote_at(sig, ctx.depth(), ty, eval(sig, ctx.env(), t));
}

TermPtr normalize_type(const Signature& sig, Ctx& ctx, const TermPtr& t) {
  return quote_at(sig, ctx.depth(), v_univ(0), eval(sig, ctx.env(), t));
}

bool conv_terms(const Signature& sig, Ctx& ctx, const TermPtr& a, const TermPtr& b) {
  return conv(sig, ctx.depth(), eval(sig, ctx.env(), a), eval(sig, ctx.env(), b));
}

}  // namespace hott
