#include "hott/term.hpp"

#include <sstream>

#include "hott/errors.hpp"

namespace hott {

static TermPtr mk(TermNode n) { return std::make_shared<Term>(Term{std::move(n)}); }

TermPtr t_var(int ix) { return mk(Var{ix}); }
TermPtr t_univ(int level) { return mk(Univ{level}); }
TermPtr t_pi(std::string name, TermPtr dom, TermPtr cod) {
  return mk(Pi{std::move(name), std::move(dom), std::move(cod)});
}
TermPtr t_arrow(TermPtr dom, TermPtr cod) {
  return t_pi("_", std::move(dom), shift(cod, 1));
}
TermPtr t_lam(std::string name, TermPtr body) { return mk(Lam{std::move(name), std::move(body)}); }
TermPtr t_app(TermPtr fn, TermPtr arg) { return mk(App{std::move(fn), std::move(arg)}); }
TermPtr t_app(TermPtr fn, const std::vector<TermPtr>& args) {
  TermPtr r = std::move(fn);
  for (const auto& a : args) r = t_app(r, a);
  return r;
}
TermPtr t_sigma(std::string name, TermPtr fst_ty, TermPtr snd_ty) {
  return mk(Sigma{std::move(name), std::move(fst_ty), std::move(snd_ty)});
}
TermPtr t_pair(TermPtr fst, TermPtr snd) { return mk(PairT{std::move(fst), std::move(snd)}); }
TermPtr t_fst(TermPtr t) { return mk(FstT{std::move(t)}); }
TermPtr t_snd(TermPtr t) { return mk(SndT{std::move(t)}); }
TermPtr t_id(TermPtr ty, TermPtr lhs, TermPtr rhs) {
  return mk(IdT{std::move(ty), std::move(lhs), std::move(rhs)});
}
TermPtr t_refl(TermPtr t) { return mk(ReflT{std::move(t)}); }
TermPtr t_j(TermPtr motive, TermPtr base, TermPtr scrut) {
  return mk(JT{std::move(motive), std::move(base), std::move(scrut)});
}
TermPtr t_iw(std::string name, TermPtr idx_ty, TermPtr fam_a, TermPtr fam_b, TermPtr reindex,
             TermPtr index) {
  return mk(IWT{std::move(name), std::move(idx_ty), std::move(fam_a), std::move(fam_b),
                std::move(reindex), std::move(index)});
}
TermPtr t_sup(TermPtr index, TermPtr label, TermPtr branch) {
  return mk(SupT{std::move(index), std::move(label), std::move(branch)});
}
TermPtr t_indw(TermPtr motive, TermPtr step, TermPtr scrut) {
  return mk(IndWT{std::move(motive), std::move(step), std::move(scrut)});
}
TermPtr t_const(std::string name, std::vector<TermPtr> spine) {
  return mk(ConstT{std::move(name), std::move(spine)});
}

TermPtr map_free_vars(const TermPtr& t, const std::function<TermPtr(int, int)>& fn) {
  std::function<TermPtr(const TermPtr&, int)> go = [&](const TermPtr& u, int d) -> TermPtr {
    return std::visit(
        overloaded{
            [&](const Var& v) -> TermPtr { return v.ix < d ? u : fn(v.ix, d); },
            [&](const Univ&) -> TermPtr { return u; },
            [&](const Pi& p) -> TermPtr { return t_pi(p.name, go(p.dom, d), go(p.cod, d + 1)); },
            [&](const Lam& l) -> TermPtr { return t_lam(l.name, go(l.body, d + 1)); },
            [&](const App& a) -> TermPtr { return t_app(go(a.fn, d), go(a.arg, d)); },
            [&](const Sigma& s) -> TermPtr {
              return t_sigma(s.name, go(s.fst_ty, d), go(s.snd_ty, d + 1));
            },
            [&](const PairT& p) -> TermPtr { return t_pair(go(p.fst, d), go(p.snd, d)); },
            [&](const FstT& f) -> TermPtr { return t_fst(go(f.t, d)); },
            [&](const SndT& s) -> TermPtr { return t_snd(go(s.t, d)); },
            [&](const IdT& i) -> TermPtr {
              return t_id(go(i.ty, d), go(i.lhs, d), go(i.rhs, d));
            },
            [&](const ReflT& r) -> TermPtr { return t_refl(go(r.t, d)); },
            [&](const JT& j) -> TermPtr {
              return t_j(go(j.motive, d + 2), go(j.base, d + 1), go(j.scrut, d));
            },
            [&](const IWT& w) -> TermPtr {
              return t_iw(w.name, go(w.idx_ty, d), go(w.fam_a, d + 1), go(w.fam_b, d + 2),
                          go(w.reindex, d + 3), go(w.index, d));
            },
            [&](const SupT& s) -> TermPtr {
              return t_sup(go(s.index, d), go(s.label, d), go(s.branch, d));
            },
            [&](const IndWT& iw) -> TermPtr {
              return t_indw(go(iw.motive, d + 2), go(iw.step, d + 4), go(iw.scrut, d));
            },
            [&](const ConstT& c) -> TermPtr {
              std::vector<TermPtr> spine;
              spine.reserve(c.spine.size());
              for (const auto& a : c.spine) spine.push_back(go(a, d));
              return t_const(c.name, std::move(spine));
            },
        },
        u->node);
  };
  return go(t, 0);
}

TermPtr shift(const TermPtr& t, int delta, int cutoff) {
  if (delta == 0) return t;
  return map_free_vars(t, [&](int ix, int depth) -> TermPtr {
    if (ix - depth < cutoff) return t_var(ix);
    return t_var(ix + delta);
  });
}

TermPtr subst(const TermPtr& t, int ix, const TermPtr& u) {
  return map_free_vars(t, [&](int v, int depth) -> TermPtr {
    int abs = v - depth;
    if (abs == ix) return shift(u, depth);
    if (abs > ix) return t_var(v - 1);
    return t_var(v);
  });
}

bool uses_var(const TermPtr& t, int ix) {
  bool used = false;
  map_free_vars(t, [&](int v, int depth) -> TermPtr {
    if (v - depth == ix) used = true;
    return t_var(v);
  });
  return used;
}

TermPtr strengthen(const TermPtr& t, int ix) {
  return map_free_vars(t, [&](int v, int depth) -> TermPtr {
    int abs = v - depth;
    if (abs == ix) throw KernelPanic("strengthen: variable still in use");
    return abs > ix ? t_var(v - 1) : t_var(v);
  });
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Var& x) { return x.ix == std::get<Var>(b->node).ix; },
          [&](const Univ& x) { return x.level == std::get<Univ>(b->node).level; },
          [&](const Pi& x) {
            const auto& y = std::get<Pi>(b->node);
            return term_eq(x.dom, y.dom) && term_eq(x.cod, y.cod);
          },
          [&](const Lam& x) { return term_eq(x.body, std::get<Lam>(b->node).body); },
          [&](const App& x) {
            const auto& y = std::get<App>(b->node);
            return term_eq(x.fn, y.fn) && term_eq(x.arg, y.arg);
          },
          [&](const Sigma& x) {
            const auto& y = std::get<Sigma>(b->node);
            return term_eq(x.fst_ty, y.fst_ty) && term_eq(x.snd_ty, y.snd_ty);
          },
          [&](const PairT& x) {
            const auto& y = std::get<PairT>(b->node);
            return term_eq(x.fst, y.fst) && term_eq(x.snd, y.snd);
          },
          [&](const FstT& x) { return term_eq(x.t, std::get<FstT>(b->node).t); },
          [&](const SndT& x) { return term_eq(x.t, std::get<SndT>(b->node).t); },
          [&](const IdT& x) {
            const auto& y = std::get<IdT>(b->node);
            return term_eq(x.ty, y.ty) && term_eq(x.lhs, y.lhs) && term_eq(x.rhs, y.rhs);
          },
          [&](const ReflT& x) { return term_eq(x.t, std::get<ReflT>(b->node).t); },
          [&](const JT& x) {
            const auto& y = std::get<JT>(b->node);
            return term_eq(x.motive, y.motive) && term_eq(x.base, y.base) &&
                   term_eq(x.scrut, y.scrut);
          },
          [&](const IWT& x) {
            const auto& y = std::get<IWT>(b->node);
            return term_eq(x.idx_ty, y.idx_ty) && term_eq(x.fam_a, y.fam_a) &&
                   term_eq(x.fam_b, y.fam_b) && term_eq(x.reindex, y.reindex) &&
                   term_eq(x.index, y.index);
          },
          [&](const SupT& x) {
            const auto& y = std::get<SupT>(b->node);
            return term_eq(x.index, y.index) && term_eq(x.label, y.label) &&
                   term_eq(x.branch, y.branch);
          },
          [&](const IndWT& x) {
            const auto& y = std::get<IndWT>(b->node);
            return term_eq(x.motive, y.motive) && term_eq(x.step, y.step) &&
                   term_eq(x.scrut, y.scrut);
          },
          [&](const ConstT& x) {
            const auto& y = std::get<ConstT>(b->node);
            if (x.name != y.name || x.spine.size() != y.spine.size()) return false;
            for (std::size_t i = 0; i < x.spine.size(); ++i)
              if (!term_eq(x.spine[i], y.spine[i])) return false;
            return true;
          },
      },
      a->node);
}

std::size_t term_size(const TermPtr& t) {
  return std::visit(
      overloaded{
          [&](const Var&) -> std::size_t { return 1; },
          [&](const Univ&) -> std::size_t { return 1; },
          [&](const Pi& x) { return 1 + term_size(x.dom) + term_size(x.cod); },
          [&](const Lam& x) { return 1 + term_size(x.body); },
          [&](const App& x) { return 1 + term_size(x.fn) + term_size(x.arg); },
          [&](const Sigma& x) { return 1 + term_size(x.fst_ty) + term_size(x.snd_ty); },
          [&](const PairT& x) { return 1 + term_size(x.fst) + term_size(x.snd); },
          [&](const FstT& x) { return 1 + term_size(x.t); },
          [&](const SndT& x) { return 1 + term_size(x.t); },
          [&](const IdT& x) { return 1 + term_size(x.ty) + term_size(x.lhs) + term_size(x.rhs); },
          [&](const ReflT& x) { return 1 + term_size(x.t); },
          [&](const JT& x) {
            return 1 + term_size(x.motive) + term_size(x.base) + term_size(x.scrut);
          },
          [&](const IWT& x) {
            return 1 + term_size(x.idx_ty) + term_size(x.fam_a) + term_size(x.fam_b) +
                   term_size(x.reindex) + term_size(x.index);
          },
          [&](const SupT& x) {
            return 1 + term_size(x.index) + term_size(x.label) + term_size(x.branch);
          },
          [&](const IndWT& x) {
            return 1 + term_size(x.motive) + term_size(x.step) + term_size(x.scrut);
          },
          [&](const ConstT& x) {
            std::size_t n = 1;
            for (const auto& a : x.spine) n += term_size(a);
            return n;
          },
      },
      t->node);
}

std::string show_raw(const TermPtr& t) {
  std::ostringstream o;
  std::function<void(const TermPtr&)> go = [&](const TermPtr& u) {
    std::visit(overloaded{
                   [&](const Var& v) { o << "#" << v.ix; },
                   [&](const Univ& u2) { o << "U" << u2.level; },
                   [&](const Pi& p) {
                     o << "(Pi ";
                     go(p.dom);
                     o << " ";
                     go(p.cod);
                     o << ")";
                   },
                   [&](const Lam& l) {
                     o << "(lam ";
                     go(l.body);
                     o << ")";
                   },
                   [&](const App& a) {
                     o << "(";
                     go(a.fn);
                     o << " ";
                     go(a.arg);
                     o << ")";
                   },
                   [&](const Sigma& s) {
                     o << "(Sigma ";
                     go(s.fst_ty);
                     o << " ";
                     go(s.snd_ty);
                     o << ")";
                   },
                   [&](const PairT& p) {
                     o << "(pair ";
                     go(p.fst);
                     o << " ";
                     go(p.snd);
                     o << ")";
                   },
                   [&](const FstT& f) {
                     o << "(fst ";
                     go(f.t);
                     o << ")";
                   },
                   [&](const SndT& s) {
                     o << "(snd ";
                     go(s.t);
                     o << ")";
                   },
                   [&](const IdT& i) {
                     o << "(Id ";
                     go(i.ty);
                     o << " ";
                     go(i.lhs);
                     o << " ";
                     go(i.rhs);
                     o << ")";
                   },
                   [&](const ReflT& r) {
                     o << "(refl ";
                     go(r.t);
                     o << ")";
                   },
                   [&](const JT& j) {
                     o << "(J ";
                     go(j.motive);
                     o << " ";
                     go(j.base);
                     o << " ";
                     go(j.scrut);
                     o << ")";
                   },
                   [&](const IWT& w) {
                     o << "(IW ";
                     go(w.idx_ty);
                     o << " ";
                     go(w.fam_a);
                     o << " ";
                     go(w.fam_b);
                     o << " ";
                     go(w.reindex);
                     o << " ";
                     go(w.index);
                     o << ")";
                   },
                   [&](const SupT& s) {
                     o << "(sup ";
                     go(s.index);
                     o << " ";
                     go(s.label);
                     o << " ";
                     go(s.branch);
                     o << ")";
                   },
                   [&](const IndWT& iw) {
                     o << "(indW ";
                     go(iw.motive);
                     o << " ";
                     go(iw.step);
                     o << " ";
                     go(iw.scrut);
                     o << ")";
                   },
                   [&](const ConstT& c) {
                     if (c.spine.empty()) {
                       o << c.name;
                       return;
                     }
                     o << "(" << c.name;
                     for (const auto& a : c.spine) {
                       o << " ";
                       go(a);
                     }
                     o << ")";
                   },
               },
               u->node);
  };
  go(t);
  return o.str();
}

}  // namespace hott
