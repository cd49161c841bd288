#include "hott/builtins.hpp"
#include "hott/surface.hpp"

namespace hott {

namespace {

void record(SpanMap* spans, const TermPtr& t, const SourceSpan& sp) {
  if (spans) (*spans)[t.get()] = sp;
}

// Peels `arity` parameters off a fun-expression; extra parameters re-wrap as
// an inner fun.
std::pair<std::vector<std::string>, SExprPtr> expect_fun(const SExprPtr& e, std::size_t arity,
                                                         const char* what) {
  const SFun* f = std::get_if<SFun>(&e->node);
  if (!f || f->params.size() < arity)
    throw ParseError(e->span, std::string(what) + " must be written as a 'fun' with " +
                                  std::to_string(arity) + " parameters");
  std::vector<std::string> names(f->params.begin(), f->params.begin() + static_cast<long>(arity));
  SExprPtr body = f->body;
  if (f->params.size() > arity) {
    std::vector<std::string> rest(f->params.begin() + static_cast<long>(arity), f->params.end());
    auto inner = std::make_shared<SExpr>();
    const_cast<SExpr&>(*inner).node = SFun{std::move(rest), body};
    const_cast<SExpr&>(*inner).span = e->span;
    body = inner;
  }
  return {std::move(names), body};
}

struct Elab {
  const Signature& sig;
  ElabScope& scope;
  SpanMap* spans;

  TermPtr under(const std::vector<std::string>& names, const SExprPtr& e) {
    for (const auto& n : names) scope.names.push_back(n);
    TermPtr t = go(e);
    for (std::size_t i = 0; i < names.size(); ++i) scope.names.pop_back();
    return t;
  }

  TermPtr go(const SExprPtr& e) {
    TermPtr out = std::visit(
        overloaded{
            [&](const SName& n) -> TermPtr {
              for (std::size_t i = scope.names.size(); i-- > 0;) {
                if (scope.names[i] == n.name)
                  return t_var(static_cast<int>(scope.names.size() - 1 - i));
              }
              if (builtin_info(n.name) || sig.has(n.name)) return t_const(n.name);
              throw ParseError(e->span, "unbound name '" + n.name + "'");
            },
            [&](const SUniv& u) -> TermPtr { return t_univ(u.level); },
            [&](const SPiE& p) -> TermPtr {
              return t_pi(p.name, go(p.dom), under({p.name}, p.cod));
            },
            [&](const SFun& f) -> TermPtr {
              TermPtr body = under(f.params, f.body);
              for (std::size_t i = f.params.size(); i-- > 0;)
                body = t_lam(f.params[i], body);
              return body;
            },
            [&](const SAppE& a) -> TermPtr {
              TermPtr fn = go(a.fn);
              TermPtr arg = go(a.arg);
              // keep constant spines canonical
              if (const ConstT* c = std::get_if<ConstT>(&fn->node)) {
                std::vector<TermPtr> spine = c->spine;
                spine.push_back(arg);
                return t_const(c->name, std::move(spine));
              }
              return t_app(fn, arg);
            },
            [&](const SSigmaE& s) -> TermPtr {
              return t_sigma(s.name, go(s.fst), under({s.name}, s.snd));
            },
            [&](const SPairE& p) -> TermPtr { return t_pair(go(p.fst), go(p.snd)); },
            [&](const SFstE& f) -> TermPtr { return t_fst(go(f.t)); },
            [&](const SSndE& s) -> TermPtr { return t_snd(go(s.t)); },
            [&](const SIdE& i) -> TermPtr { return t_id(go(i.ty), go(i.lhs), go(i.rhs)); },
            [&](const SReflE& r) -> TermPtr { return t_refl(go(r.t)); },
            [&](const SJE& j) -> TermPtr {
              auto [mnames, mbody] = expect_fun(j.motive, 2, "the J motive");
              TermPtr motive = under(mnames, mbody);
              TermPtr base;
              if (j.dependent_base) {
                auto [bnames, bbody] = expect_fun(j.base, 1, "the Jd base");
                base = under(bnames, bbody);
              } else {
                base = shift(go(j.base), 1);  // ignores the basepoint binder
              }
              return t_j(motive, base, go(j.scrut));
            },
            [&](const SIWE& w) -> TermPtr {
              auto [anames, abody] = expect_fun(w.fam_a, 1, "the IW label family");
              auto [bnames, bbody] = expect_fun(w.fam_b, 2, "the IW branch family");
              auto [tnames, tbody] = expect_fun(w.reindex, 3, "the IW reindexing");
              return t_iw(anames[0], go(w.idx_ty), under(anames, abody), under(bnames, bbody),
                          under(tnames, tbody), go(w.index));
            },
            [&](const SSupE& s) -> TermPtr {
              return t_sup(go(s.index), go(s.label), go(s.branch));
            },
            [&](const SIndWE& iw) -> TermPtr {
              auto [mnames, mbody] = expect_fun(iw.motive, 2, "the indW motive");
              auto [snames, sbody] = expect_fun(iw.step, 4, "the indW step");
              return t_indw(under(mnames, mbody), under(snames, sbody), go(iw.scrut));
            },
            [&](const SOmegaE& o) -> TermPtr {
              TermPtr ty = go(o.ty);
              TermPtr pt = go(o.pt);
              for (int i = 0; i < o.n; ++i) {
                TermPtr nty = t_id(ty, pt, pt);
                pt = t_refl(pt);
                ty = nty;
              }
              return ty;
            },
            [&](const SReflnE& r) -> TermPtr {
              TermPtr pt = go(r.pt);
              for (int i = 0; i < r.n; ++i) pt = t_refl(pt);
              return pt;
            },
        },
        e->node);
    record(spans, out, e->span);
    return out;
  }
};

}  // namespace

TermPtr elaborate(const Signature& sig, ElabScope& scope, const SExprPtr& e, SpanMap* spans) {
  Elab el{sig, scope, spans};
  return el.go(e);
}

}  // namespace hott
