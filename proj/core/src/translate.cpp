#include "hott/translate.hpp"

#include <functional>

#include "hott/builtins.hpp"
#include "hott/errors.hpp"
#include "hott/eval.hpp"

namespace hott {

namespace {

// Right-nested 5-tuple and its projections, the shape of the translated
// indexed-W index pack (i, i', ibar, w, w').
TermPtr tuple5(TermPtr a, TermPtr b, TermPtr c, TermPtr d, TermPtr e) {
  return t_pair(std::move(a),
                t_pair(std::move(b), t_pair(std::move(c), t_pair(std::move(d), std::move(e)))));
}
TermPtr proj5(const TermPtr& p, int k) {
  TermPtr t = p;
  for (int i = 0; i < k; ++i) t = t_snd(t);
  return k == 4 ? t : t_fst(t);
}

// Applications built by the translator collapse administrative lambdas at
// construction time, keeping outputs inside the inferable fragment.
TermPtr bapp(const TermPtr& f, const TermPtr& a) {
  if (const Lam* l = std::get_if<Lam>(&f->node)) return subst(l->body, 0, a);
  if (const ConstT* c = std::get_if<ConstT>(&f->node)) {
    std::vector<TermPtr> spine = c->spine;
    spine.push_back(a);
    return t_const(c->name, std::move(spine));  // keep constant spines canonical
  }
  return t_app(f, a);
}
TermPtr apps(TermPtr f, const std::vector<TermPtr>& args) {
  for (const auto& a : args) f = bapp(f, a);
  return f;
}

std::string prime(const std::string& n) { return n + "'"; }
std::string barred(const std::string& n) { return n + "_r"; }

}  // namespace

struct TransImpl {
  Translator& tr;
  Signature& sig;
  Ctx src;

  struct Entry {
    TermPtr l, r, rel;
    int depth;  // target depth the three terms are valid at
  };
  std::vector<Entry> entries;

  explicit TransImpl(Translator& t) : tr(t), sig(t.sig_) {}

  // -- renamings ---------------------------------------------------------------

  TermPtr rename(const TermPtr& t, int D, int which) {  // 0 left, 1 right, 2 rel
    return map_free_vars(t, [&](int ix, int d) -> TermPtr {
      std::size_t k = static_cast<std::size_t>(ix - d);
      if (k >= entries.size())
        throw KernelPanic("translate: source variable escapes the telescope");
      const Entry& e = entries[entries.size() - 1 - k];
      const TermPtr& img = which == 0 ? e.l : (which == 1 ? e.r : e.rel);
      return shift(img, D + d - e.depth);
    });
  }
  TermPtr left(const TermPtr& t, int D) { return rename(t, D, 0); }
  TermPtr right(const TermPtr& t, int D) { return rename(t, D, 1); }

  void push_triple(const std::string& name, const ValuePtr& src_ty, int depth_after) {
    src.push_fresh(name, src_ty);
    entries.push_back(Entry{t_var(2), t_var(1), t_var(0), depth_after});
  }
  void push_terms(const std::string& name, const ValuePtr& src_ty, TermPtr l, TermPtr r,
                  TermPtr rel, int depth) {
    src.push_fresh(name, src_ty);
    entries.push_back(Entry{std::move(l), std::move(r), std::move(rel), depth});
  }
  void pop_entry() {
    src.pop();
    entries.pop_back();
  }

  ValuePtr src_eval(const TermPtr& t) { return eval(sig, src.env(), t); }

  // -- witness resolution --------------------------------------------------------

  std::string resolve_key(const std::string& key, const std::string& what) {
    const std::string* w = tr.table_.find(key);
    if (!w)
      fail(TypeErrorKind::MissingWitness,
           "no relational witness registered for " + what + " (key '" + key + "')");
    if (tr.table_.trusted.count(*w)) {
      tr.trusted_used_.insert(*w);
      if (tr.opts_.policy == TrustPolicy::Strict && !tr.opts_.allow_trusted.count(*w))
        fail(TypeErrorKind::MissingWitness,
             "strict trust policy forbids the trusted witness '" + *w + "' needed for " + what);
    }
    return *w;
  }

  int motive_level(const char* data, const TermPtr& motive) {
    if (const Lam* l = std::get_if<Lam>(&motive->node)) {
      ScopedBinders sb(src);
      sb.fresh(l->name, v_const_head(data));
      return check_type(sig, src, l->body);
    }
    ValuePtr mty = infer(sig, src, motive);
    if (const VPi* p = std::get_if<VPi>(&mty->node)) {
      ValuePtr cod = apply_closure(sig, p->cod, {v_var(src.depth())});
      if (const VUniv* u = std::get_if<VUniv>(&cod->node)) return u->level;
    }
    fail(TypeErrorKind::BadEliminator,
         "cannot read the motive level of '" + show_term(motive) + "'");
  }

  std::string resolve_const(const ConstT& c) {
    const BuiltinInfo* b = builtin_info(c.name);
    if (!b) return tr.materialize(c.name);
    switch (b->kind) {
      case BuiltinKind::TypeConst:
        throw KernelPanic("type constants translate structurally");
      case BuiltinKind::Constructor:
        return resolve_key(c.name, "constructor '" + c.name + "'");
      case BuiltinKind::Eliminator: {
        if (c.spine.empty())
          fail(TypeErrorKind::BadEliminator, "eliminator '" + c.name + "' lacks its motive");
        std::string key;
        if (c.name == "ind0" || c.name == "ind1" || c.name == "ind2") {
          const char* data = c.name == "ind0" ? "Empty" : (c.name == "ind1" ? "Unit" : "Two");
          key = c.name + "@" + std::to_string(motive_level(data, c.spine[0]));
        } else {
          ValuePtr xty = infer(sig, src, c.spine[0]);
          const VUniv* u = std::get_if<VUniv>(&xty->node);
          key = c.name + "@" + std::to_string(u ? u->level : -1);
        }
        return resolve_key(key, "eliminator '" + c.name + "'");
      }
    }
    throw KernelPanic("unreachable");
  }

  // -- types ------------------------------------------------------------------

  TermPtr ttype(const TermPtr& A, int D) {
    if (const Univ* u = std::get_if<Univ>(&A->node)) {
      return t_lam("X", t_lam("X'", t_pi("_", t_var(1), t_pi("_", t_var(1), t_univ(u->level)))));
    }
    if (const Pi* p = std::get_if<Pi>(&A->node)) {
      // [[Pi x:A. B]] f f' = Pi (x : A_l) (x' : A_r) (x_r : [[A]] x x').
      //                        [[B]] (f x) (f' x')
      TermPtr Al = left(p->dom, D + 2);
      TermPtr Ar = right(p->dom, D + 3);
      TermPtr RA = ttype(p->dom, D + 4);
      TermPtr xbar_ty = apps(RA, {t_var(1), t_var(0)});
      push_triple(p->name, src_eval(p->dom), D + 5);
      TermPtr RB = ttype(p->cod, D + 5);
      pop_entry();
      // levels under the five binders: f=4 f'=3 x=2 x'=1 x_r=0
      TermPtr body = apps(RB, {t_app(t_var(4), t_var(2)), t_app(t_var(3), t_var(1))});
      return t_lam(
          "f", t_lam("f'", t_pi(p->name, Al,
                                t_pi(prime(p->name), Ar, t_pi(barred(p->name), xbar_ty, body)))));
    }
    if (const Sigma* s = std::get_if<Sigma>(&A->node)) {
      // [[Sigma x:A. B]] z z' =
      //   Sigma (x_r : [[A]] (fst z) (fst z')). [[B]] (snd z) (snd z')
      TermPtr RA = ttype(s->fst_ty, D + 2);
      TermPtr xbar_ty = apps(RA, {t_fst(t_var(1)), t_fst(t_var(0))});
      push_terms(s->name, src_eval(s->fst_ty), t_fst(t_var(2)), t_fst(t_var(1)), t_var(0), D + 3);
      TermPtr RB = ttype(s->snd_ty, D + 3);
      pop_entry();
      TermPtr body = apps(RB, {t_snd(t_var(2)), t_snd(t_var(1))});
      return t_lam("z", t_lam("z'", t_sigma(barred(s->name), xbar_ty, body)));
    }
    if (const IdT* id = std::get_if<IdT>(&A->node)) {
      // [[Id A a b]] p p' = Id ([[A]] b_l b_r) (transport2 [[A]] p p' [[a]]) [[b]]
      int lvl = check_type(sig, src, id->ty);
      std::string tr2 = resolve_key("transport2@" + std::to_string(lvl),
                                    "path-space translation at level " + std::to_string(lvl));
      TermPtr Al = left(id->ty, D + 2);
      TermPtr Ar = right(id->ty, D + 2);
      TermPtr RA = ttype(id->ty, D + 2);
      ValuePtr av = src_eval(id->ty);
      TermPtr al = left(id->lhs, D + 2), ar = right(id->lhs, D + 2);
      TermPtr bl = left(id->rhs, D + 2), br = right(id->rhs, D + 2);
      TermPtr Ta = tterm(id->lhs, av, D + 2);
      TermPtr Tb = tterm(id->rhs, av, D + 2);
      TermPtr carrier = apps(RA, {bl, br});
      TermPtr moved = t_const(tr2, {Al, Ar, RA, al, bl, t_var(1), ar, br, t_var(0), Ta});
      return t_lam("p", t_lam("p'", t_id(carrier, moved, Tb)));
    }
    if (const IWT* w = std::get_if<IWT>(&A->node)) return ttype_iw(*w, D);
    if (const ConstT* c = std::get_if<ConstT>(&A->node)) {
      const BuiltinInfo* b = builtin_info(c->name);
      if (b && b->kind == BuiltinKind::TypeConst && c->spine.empty()) {
        // constant types are interpreted by their path spaces
        return t_lam("c", t_lam("c'", t_id(t_const(c->name), t_var(1), t_var(0))));
      }
    }
    // neutral type expressions (variables, applications, eliminations, consts)
    return tterm(A, std::nullopt, D);
  }

  // Relational indexed W-type, following the pack construction: the index
  // pack J = Sigma(i)(i')(ibar)(w). w', the label family Acheck, the branch
  // family Bcheck and the reindexing tcheck. Complex pieces are built as
  // closed lambda helpers at depth D+2 and applied where needed; the kernel
  // normalizes the administrative redexes away.
  TermPtr ttype_iw(const IWT& w, int D) {
    const int D2 = D + 2;
    ValuePtr iv_ty = src_eval(w.idx_ty);

    TermPtr Il = left(w.idx_ty, D2);
    TermPtr Ir = right(w.idx_ty, D2);
    TermPtr RI = ttype(w.idx_ty, D2);

    // binder bodies are wrapped into lambdas before renaming so their bound
    // slots are not confused with telescope variables
    TermPtr Afun = t_lam(w.name, w.fam_a);
    TermPtr Bfun = t_lam(w.name, t_lam("a", w.fam_b));
    TermPtr tfun = t_lam(w.name, t_lam("a", t_lam("y", w.reindex)));
    TermPtr Afun_l = left(Afun, D2);
    TermPtr Afun_r = right(Afun, D2);
    TermPtr Bfun_l = left(Bfun, D2);
    TermPtr Bfun_r = right(Bfun, D2);
    TermPtr tfun_l = left(tfun, D2);
    TermPtr tfun_r = right(tfun, D2);

    // W-former copies as lambda families: Wl i = IW(...left pieces..., i)
    auto wform = [&](const TermPtr& I, const TermPtr& Af, const TermPtr& Bf, const TermPtr& tf) {
      return t_lam("i",
                   t_iw(w.name, shift(I, 1), bapp(shift(Af, 2), t_var(0)),
                        apps(shift(Bf, 3), {t_var(1), t_var(0)}),
                        apps(shift(tf, 4), {t_var(2), t_var(1), t_var(0)}), t_var(0)));
    };
    TermPtr Wl = wform(Il, Afun_l, Bfun_l, tfun_l);
    TermPtr Wr = wform(Ir, Afun_r, Bfun_r, tfun_r);

    // relational families abstracted over the source binder triples
    TermPtr RAfun;
    {
      push_triple(w.name, iv_ty, D2 + 3);
      TermPtr RA = ttype(w.fam_a, D2 + 3);
      pop_entry();
      RAfun = t_lam("i", t_lam("i'", t_lam("i_r", RA)));
    }
    TermPtr RBfun;
    {
      push_triple(w.name, iv_ty, D2 + 3);
      ValuePtr a_ty = src_eval(w.fam_a);
      push_triple("a", a_ty, D2 + 6);
      TermPtr RB = ttype(w.fam_b, D2 + 6);
      pop_entry();
      pop_entry();
      RBfun = t_lam("i", t_lam("i'", t_lam("i_r", t_lam("a", t_lam("a'", t_lam("a_r", RB))))));
    }
    TermPtr Rtfun;
    {
      push_triple(w.name, iv_ty, D2 + 3);
      ValuePtr a_ty = src_eval(w.fam_a);
      push_triple("a", a_ty, D2 + 6);
      ValuePtr b_ty = src_eval(w.fam_b);
      push_triple("y", b_ty, D2 + 9);
      TermPtr Rt = tterm(w.reindex, iv_ty, D2 + 9);
      pop_entry();
      pop_entry();
      pop_entry();
      Rtfun = t_lam(
          "i", t_lam("i'", t_lam("i_r", t_lam("a", t_lam("a'", t_lam("a_r", t_lam("y", t_lam("y'", t_lam("y_r", Rt)))))))));
    }

    // first projection of a tree (any index): indW with motive (i,v). A i
    auto pr1fun = [&](const TermPtr& Af) {
      // motive sits under: 1 lambda + 2 motive binders
      TermPtr motive = bapp(shift(Af, 3), t_var(1));
      return t_lam("v", t_indw(motive, t_var(2), t_var(0)));
    };
    TermPtr pr1l = pr1fun(Afun_l);
    TermPtr pr1r = pr1fun(Afun_r);

    // second projection applied to a branch argument:
    //   pr2 v y : W (t i (pr1 v) y)
    auto pr2fun = [&](const TermPtr& Bf, const TermPtr& tf, const TermPtr& Wf,
                      const TermPtr& pr1f) {
      // under lambdas (v, y economy: v=Var1, y=Var0) the indW node sits at +2;
      // motive binders (i, u) bring helper shifts to +4
      TermPtr pr1u = bapp(shift(pr1f, 4), t_var(0));
      TermPtr dom = apps(shift(Bf, 4), {t_var(1), pr1u});
      // under the y binder of the motive: i=Var2, u=Var1, y=Var0
      TermPtr pr1u2 = bapp(shift(pr1f, 5), t_var(1));
      TermPtr reix = apps(shift(tf, 5), {t_var(2), pr1u2, t_var(0)});
      TermPtr motive = t_pi("y", dom, bapp(shift(Wf, 5), reix));
      return t_lam("v", t_lam("y", t_app(t_indw(motive, t_var(1), t_var(1)), t_var(0))));
    };
    TermPtr pr2l = pr2fun(Bfun_l, tfun_l, Wl, pr1l);
    TermPtr pr2r = pr2fun(Bfun_r, tfun_r, Wr, pr1r);

    // index pack type
    TermPtr pack_ty =
        t_sigma("i", Il,
                t_sigma("i'", shift(Ir, 1),
                        t_sigma("i_r", apps(shift(RI, 2), {t_var(1), t_var(0)}),
                                t_sigma("wt", bapp(shift(Wl, 3), t_var(2)),
                                        bapp(shift(Wr, 4), t_var(2))))));

    // label family: Acheck j = [[A]](j projections) (pr1 j.4) (pr1 j.5)
    TermPtr acheck_fun;
    {
      TermPtr j = t_var(0);
      acheck_fun = t_lam(
          "j", apps(shift(RAfun, 1), {proj5(j, 0), proj5(j, 1), proj5(j, 2),
                                      bapp(shift(pr1l, 1), proj5(j, 3)),
                                      bapp(shift(pr1r, 1), proj5(j, 4))}));
    }

    // branch family: Bcheck j a_r = Sigma (b) (b'). [[B]] ... b b'
    TermPtr bcheck_fun;
    {
      // binders: j=Var1, ab=Var0; inside Sigma b: +1; inside Sigma b': +2
      TermPtr j1 = t_var(1);
      TermPtr dom_b =
          apps(shift(Bfun_l, 2), {proj5(j1, 0), bapp(shift(pr1l, 2), proj5(j1, 3))});
      TermPtr j2 = t_var(2);
      TermPtr dom_b2 =
          apps(shift(Bfun_r, 3), {proj5(j2, 1), bapp(shift(pr1r, 3), proj5(j2, 4))});
      TermPtr j3 = t_var(3);
      TermPtr rel = apps(shift(RBfun, 4),
                         {proj5(j3, 0), proj5(j3, 1), proj5(j3, 2),
                          bapp(shift(pr1l, 4), proj5(j3, 3)), bapp(shift(pr1r, 4), proj5(j3, 4)),
                          t_var(2), t_var(1), t_var(0)});
      bcheck_fun =
          t_lam("j", t_lam("a_r", t_sigma("b", dom_b, t_sigma("b'", dom_b2, rel))));
    }

    // reindexing: tcheck j a_r yp = (t_l .., t_r .., [[t]] .., pr2 j.4 b, pr2 j.5 b')
    TermPtr tcheck_fun;
    {
      TermPtr j = t_var(2), ab = t_var(1), yp = t_var(0);
      TermPtr b = t_fst(yp), b2 = t_fst(t_snd(yp)), brel = t_snd(t_snd(yp));
      TermPtr al = bapp(shift(pr1l, 3), proj5(j, 3));
      TermPtr ar = bapp(shift(pr1r, 3), proj5(j, 4));
      TermPtr tl = apps(shift(tfun_l, 3), {proj5(j, 0), al, b});
      TermPtr trr = apps(shift(tfun_r, 3), {proj5(j, 1), ar, b2});
      TermPtr trel = apps(shift(Rtfun, 3),
                          {proj5(j, 0), proj5(j, 1), proj5(j, 2), al, ar, ab, b, b2, brel});
      TermPtr wl2 = apps(shift(pr2l, 3), {proj5(j, 3), b});
      TermPtr wr2 = apps(shift(pr2r, 3), {proj5(j, 4), b2});
      tcheck_fun = t_lam("j", t_lam("a_r", t_lam("yp", tuple5(tl, trr, trel, wl2, wr2))));
    }

    TermPtr idx_rel = tterm(w.index, iv_ty, D2);
    TermPtr pack_index =
        tuple5(left(w.index, D2), right(w.index, D2), idx_rel, t_var(1), t_var(0));

    TermPtr iw_node = t_iw(
        "j", pack_ty, bapp(shift(acheck_fun, 1), t_var(0)),
        apps(shift(bcheck_fun, 2), {t_var(1), t_var(0)}),
        apps(shift(tcheck_fun, 3), {t_var(2), t_var(1), t_var(0)}), pack_index);
    return t_lam("w", t_lam("w'", iw_node));
  }

  // -- terms --------------------------------------------------------------------

  TermPtr tterm(const TermPtr& t, std::optional<ValuePtr> expected, int D) {
    if (std::get_if<Univ>(&t->node) || std::get_if<Pi>(&t->node) ||
        std::get_if<Sigma>(&t->node) || std::get_if<IdT>(&t->node) ||
        std::get_if<IWT>(&t->node))
      return ttype(t, D);

    if (const Var* v = std::get_if<Var>(&t->node)) {
      const Entry& e = entries[entries.size() - 1 - static_cast<std::size_t>(v->ix)];
      return shift(e.rel, D - e.depth);
    }
    if (const ConstT* c = std::get_if<ConstT>(&t->node)) {
      const BuiltinInfo* b = builtin_info(c->name);
      if (b && b->kind == BuiltinKind::TypeConst) return ttype(t, D);
      std::string wname = resolve_const(*c);
      ValuePtr ty = const_head_type(sig, src, *c, t);
      std::vector<TermPtr> args;
      args.reserve(c->spine.size() * 3);
      for (const auto& u : c->spine) {
        const VPi* p = std::get_if<VPi>(&ty->node);
        if (!p) throw KernelPanic("translate: constant spine against non-function type");
        args.push_back(left(u, D));
        args.push_back(right(u, D));
        args.push_back(tterm(u, p->dom, D));
        ty = apply_closure(sig, p->cod, {src_eval(u)});
      }
      return t_const(wname, std::move(args));
    }
    if (const Lam* l = std::get_if<Lam>(&t->node)) {
      if (!expected)
        fail(TypeErrorKind::Other,
             "translate: lambda in inferring position '" + show_term(t) + "'");
      const VPi* p = std::get_if<VPi>(&(*expected)->node);
      if (!p)
        fail(TypeErrorKind::TypeMismatch, "translate: lambda against non-function type");
      push_triple(l->name, p->dom, D + 3);
      ValuePtr body_exp = apply_closure(sig, p->cod, {src.lookup(0).value});
      TermPtr body = tterm(l->body, body_exp, D + 3);
      pop_entry();
      return t_lam(l->name,
                   t_lam(prime(l->name), t_lam(barred(l->name), body)));
    }
    if (const App* a = std::get_if<App>(&t->node)) {
      ValuePtr fty = infer(sig, src, a->fn);
      const VPi* p = std::get_if<VPi>(&fty->node);
      if (!p) throw KernelPanic("translate: application head is not a function");
      TermPtr tf = tterm(a->fn, fty, D);
      TermPtr tu = tterm(a->arg, p->dom, D);
      return apps(tf, {left(a->arg, D), right(a->arg, D), tu});
    }
    if (const PairT* pr = std::get_if<PairT>(&t->node)) {
      if (!expected) fail(TypeErrorKind::Other, "translate: pair in inferring position");
      const VSigma* s = std::get_if<VSigma>(&(*expected)->node);
      if (!s) fail(TypeErrorKind::TypeMismatch, "translate: pair against non-pair type");
      TermPtr ta = tterm(pr->fst, s->fst_ty, D);
      TermPtr tb = tterm(pr->snd, apply_closure(sig, s->snd_ty, {src_eval(pr->fst)}), D);
      return t_pair(ta, tb);
    }
    if (const FstT* f = std::get_if<FstT>(&t->node))
      return t_fst(tterm(f->t, std::nullopt, D));
    if (const SndT* s = std::get_if<SndT>(&t->node))
      return t_snd(tterm(s->t, std::nullopt, D));
    if (const ReflT* r = std::get_if<ReflT>(&t->node)) {
      ValuePtr ety;
      if (expected) {
        if (const VId* id = std::get_if<VId>(&(*expected)->node)) ety = id->ty;
      }
      if (!ety) ety = infer(sig, src, r->t);
      return t_refl(tterm(r->t, ety, D));
    }
    if (const JT* j = std::get_if<JT>(&t->node)) return tterm_j(*j, D);
    if (const IndWT* iw = std::get_if<IndWT>(&t->node)) return tterm_indw(*iw, D);
    if (const SupT* sp = std::get_if<SupT>(&t->node)) {
      if (!expected) fail(TypeErrorKind::Other, "translate: sup in inferring position");
      const VIW* wv = std::get_if<VIW>(&(*expected)->node);
      if (!wv) fail(TypeErrorKind::TypeMismatch, "translate: sup against non-tree type");
      return tterm_sup(t, *sp, *wv, D);
    }
    throw KernelPanic("translate: unhandled term form");
  }

  TermPtr tterm_j(const JT& j, int D);
  TermPtr tterm_indw(const IndWT& iw, int D);
  TermPtr tterm_sup(const TermPtr& whole, const SupT& s, const VIW& wv, int D);
};

// J translates through the per-level path-induction witness:
//   [[J(M,m,q)]] = pathind_rel A* a* M* m* b* q*  (each * a translated triple)
TermPtr TransImpl::tterm_j(const JT& j, int D) {
  ValuePtr qty = infer(sig, src, j.scrut);
  const VId* id = std::get_if<VId>(&qty->node);
  if (!id) throw KernelPanic("translate: J scrutinee is not a path");
  int d = src.depth();
  TermPtr Aterm = quote(sig, d, id->ty);
  TermPtr aterm = quote_at(sig, d, id->ty, id->lhs);
  TermPtr bterm = quote_at(sig, d, id->ty, id->rhs);
  int lvl_ty = check_type(sig, src, Aterm);
  int lvl_mot;
  {
    ScopedBinders sb(src);
    sb.fresh("y", id->ty);
    ValuePtr y = src.lookup(0).value;
    sb.fresh("p", v_id(id->ty, id->lhs, y));
    lvl_mot = check_type(sig, src, j.motive);
  }
  std::string wname = resolve_key(
      "J@" + std::to_string(lvl_ty) + "." + std::to_string(lvl_mot), "path induction");

  TermPtr m0 = uses_var(j.base, 0) ? subst(j.base, 0, aterm) : strengthen(j.base, 0);

  TermPtr RA = ttype(Aterm, D);
  TermPtr Ta = tterm(aterm, id->ty, D);
  TermPtr Tb = tterm(bterm, id->ty, D);
  TermPtr Tq = tterm(j.scrut, qty, D);
  Closure motive_clo{src.env(), j.motive, 2, nullptr};
  ValuePtr m0_exp = apply_closure(sig, motive_clo, {id->lhs, v_refl(id->lhs)});
  TermPtr Tm0 = tterm(m0, m0_exp, D);

  TermPtr Mfun = t_lam("y", t_lam("p", j.motive));
  TermPtr Ml = left(Mfun, D);
  TermPtr Mr = right(Mfun, D);
  TermPtr Mbar;
  {
    push_triple("y", id->ty, D + 3);
    ValuePtr y = src.lookup(0).value;
    push_triple("p", v_id(id->ty, id->lhs, y), D + 6);
    TermPtr RM = ttype(j.motive, D + 6);
    pop_entry();
    pop_entry();
    Mbar = t_lam("y", t_lam("y'", t_lam("y_r",
                                        t_lam("p", t_lam("p'", t_lam("p_r", RM))))));
  }
  return t_const(wname, {left(Aterm, D), right(Aterm, D), RA,
                         left(aterm, D), right(aterm, D), Ta,
                         Ml, Mr, Mbar,
                         left(m0, D), right(m0, D), Tm0,
                         left(bterm, D), right(bterm, D), Tb,
                         left(j.scrut, D), right(j.scrut, D), Tq});
}

// indW goes through the generic level-0 wrapper witness, with the W-type's
// families read back from the scrutinee's type.
TermPtr TransImpl::tterm_indw(const IndWT& iw, int D) {
  ValuePtr sty = infer(sig, src, iw.scrut);
  const VIW* w = std::get_if<VIW>(&sty->node);
  if (!w) throw KernelPanic("translate: indW scrutinee is not a tree");
  int d = src.depth();

  TermPtr Iterm = quote(sig, d, w->idx_ty);
  TermPtr Abody = quote(sig, d + 1, apply_closure(sig, w->fam_a, {v_var(d)}));
  TermPtr Bbody = quote(sig, d + 2, apply_closure(sig, w->fam_b, {v_var(d), v_var(d + 1)}));
  TermPtr tbody =
      quote(sig, d + 3, apply_closure(sig, w->reindex, {v_var(d), v_var(d + 1), v_var(d + 2)}));
  TermPtr idx_term = quote_at(sig, d, w->idx_ty, w->index);

  // only the level-0 witness is provided
  {
    int li = check_type(sig, src, Iterm);
    int la, lb;
    {
      ScopedBinders sb(src);
      sb.fresh("i", w->idx_ty);
      la = check_type(sig, src, Abody);
      sb.fresh("a", apply_closure(sig, w->fam_a, {src.lookup(0).value}));
      lb = check_type(sig, src, Bbody);
    }
    int lm;
    {
      ScopedBinders sm(src);
      sm.fresh("i", w->idx_ty);
      VIW at = *w;
      at.index = src.lookup(0).value;
      sm.fresh("w", v_mk(at));
      lm = check_type(sig, src, iw.motive);
    }
    if (li != 0 || la != 0 || lb != 0 || lm != 0)
      fail(TypeErrorKind::MissingWitness,
           "indexed W translation is provided at universe level 0 only");
  }
  std::string wname = resolve_key("IndW@0", "indexed W induction");

  TermPtr Afun = t_lam("i", Abody);
  TermPtr Bfun = t_lam("i", t_lam("a", Bbody));
  TermPtr tfun = t_lam("i", t_lam("a", t_lam("y", tbody)));
  TermPtr Mfun = t_lam("i", t_lam("w", iw.motive));
  TermPtr dfun = t_lam("i", t_lam("a", t_lam("f", t_lam("g", iw.step))));

  // expected types for each wrapper argument, as values
  VIW base = *w;
  auto Wat = [this, base](ValuePtr i) {
    VIW at = base;
    at.index = std::move(i);
    return v_mk(at);
  };
  Closure motive_clo{src.env(), iw.motive, 2, nullptr};

  ValuePtr vI = v_univ(0);
  ValuePtr vA = v_pi("i", w->idx_ty, [](ValuePtr) { return v_univ(0); });
  ValuePtr vB = v_pi("i", w->idx_ty, [this, base](ValuePtr i) {
    return v_pi("a", apply_closure(sig, base.fam_a, {i}), [](ValuePtr) { return v_univ(0); });
  });
  ValuePtr vt = v_pi("i", w->idx_ty, [this, base](ValuePtr i) {
    return v_pi("a", apply_closure(sig, base.fam_a, {i}), [this, base, i](ValuePtr a) {
      return v_pi("y", apply_closure(sig, base.fam_b, {i, a}),
                  [base](ValuePtr) { return base.idx_ty; });
    });
  });
  ValuePtr vM = v_pi("i", w->idx_ty, [this, base, Wat](ValuePtr i) {
    return v_pi("w", Wat(i), [](ValuePtr) { return v_univ(0); });
  });
  ValuePtr vd = v_pi("i", w->idx_ty, [this, base, Wat, motive_clo](ValuePtr i) {
    return v_pi("a", apply_closure(sig, base.fam_a, {i}),
                [this, base, Wat, motive_clo, i](ValuePtr a) {
                  ValuePtr fty = v_pi("y", apply_closure(sig, base.fam_b, {i, a}),
                                      [this, base, Wat, i, a](ValuePtr y) {
                                        return Wat(apply_closure(sig, base.reindex, {i, a, y}));
                                      });
                  return v_pi("f", fty, [this, base, Wat, motive_clo, i, a](ValuePtr f) {
                    ValuePtr gty =
                        v_pi("y", apply_closure(sig, base.fam_b, {i, a}),
                             [this, base, motive_clo, i, a, f](ValuePtr y) {
                               ValuePtr ti = apply_closure(sig, base.reindex, {i, a, y});
                               return apply_closure(sig, motive_clo, {ti, v_app(sig, f, y)});
                             });
                    return v_pi("g", gty, [this, motive_clo, i, a, f](ValuePtr) {
                      return apply_closure(sig, motive_clo, {i, v_mk(VSup{i, a, f})});
                    });
                  });
                });
  });
  ValuePtr vidx = w->idx_ty;
  ValuePtr vscrut = sty;

  std::vector<std::pair<TermPtr, ValuePtr>> wargs = {
      {Iterm, vI}, {Afun, vA},     {Bfun, vB},        {tfun, vt},
      {Mfun, vM},  {dfun, vd},     {idx_term, vidx},  {iw.scrut, vscrut}};
  std::vector<TermPtr> args;
  args.reserve(wargs.size() * 3);
  for (const auto& [u, ty] : wargs) {
    args.push_back(left(u, D));
    args.push_back(right(u, D));
    args.push_back(tterm(u, ty, D));
  }
  return t_const(wname, std::move(args));
}

// sup maps to the constructor of the relational W-type; the branch argument
// repackages the translated branch over the Sigma-packed branch family.
TermPtr TransImpl::tterm_sup(const TermPtr& whole, const SupT& s, const VIW& wv, int D) {
  ValuePtr iv = src_eval(s.index);
  TermPtr Ti = tterm(s.index, wv.idx_ty, D);
  TermPtr pack = tuple5(left(s.index, D), right(s.index, D), Ti, left(whole, D), right(whole, D));

  TermPtr Ta = tterm(s.label, apply_closure(sig, wv.fam_a, {iv}), D);

  ValuePtr lv = src_eval(s.label);
  VIW base = wv;
  ValuePtr fty = v_pi("y", apply_closure(sig, wv.fam_b, {iv, lv}), [this, base, iv, lv](ValuePtr y) {
    VIW at = base;
    at.index = apply_closure(sig, base.reindex, {iv, lv, y});
    return v_mk(at);
  });
  TermPtr Tf = tterm(s.branch, fty, D);
  TermPtr yp = t_var(0);
  TermPtr branch =
      t_lam("yp", apps(shift(Tf, 1), {t_fst(yp), t_fst(t_snd(yp)), t_snd(t_snd(yp))}));
  return t_sup(pack, Ta, branch);
}

// ----------------------------------------------------------------------------

Translator::Translator(Signature& sig, WitnessTable& table, TranslateOptions opts)
    : sig_(sig), table_(table), opts_(std::move(opts)) {}

namespace {

// Loads a source telescope into a TransImpl and returns the translated
// telescope (3 entries per source entry).
std::vector<TeleEntry> load_telescope(TransImpl& impl, const std::vector<TeleEntry>& gamma) {
  std::vector<TeleEntry> out;
  Ctx tgt;
  auto push_tgt = [&](const std::string& n, const TermPtr& ty) {
    tgt.push_fresh(n, eval(impl.sig, tgt.env(), ty));
  };
  int D = 0;
  for (const auto& e : gamma) {
    check_type(impl.sig, impl.src, e.type);
    TermPtr lt = impl.left(e.type, D);
    out.push_back({e.name, lt});
    push_tgt(e.name, lt);
    TermPtr rt = impl.right(e.type, D + 1);
    out.push_back({prime(e.name), rt});
    push_tgt(prime(e.name), rt);
    TermPtr rel = apps(impl.ttype(e.type, D + 2), {t_var(1), t_var(0)});
    rel = normalize_type(impl.sig, tgt, rel);
    out.push_back({barred(e.name), rel});
    push_tgt(barred(e.name), rel);
    impl.push_triple(e.name, impl.src_eval(e.type), D + 3);
    D += 3;
  }
  return out;
}

}  // namespace

std::vector<TeleEntry> Translator::translate_ctx(const std::vector<TeleEntry>& gamma) {
  TransImpl impl(*this);
  return load_telescope(impl, gamma);
}

TermPtr Translator::translate_type(const std::vector<TeleEntry>& gamma, const TermPtr& type) {
  TransImpl impl(*this);
  load_telescope(impl, gamma);
  check_type(sig_, impl.src, type);
  return impl.ttype(type, 3 * static_cast<int>(gamma.size()));
}

TermPtr Translator::rename_left(const std::vector<TeleEntry>& gamma, const TermPtr& t) {
  TransImpl impl(*this);
  load_telescope(impl, gamma);
  return impl.left(t, 3 * static_cast<int>(gamma.size()));
}

TermPtr Translator::rename_right(const std::vector<TeleEntry>& gamma, const TermPtr& t) {
  TransImpl impl(*this);
  load_telescope(impl, gamma);
  return impl.right(t, 3 * static_cast<int>(gamma.size()));
}

TermPtr Translator::translate_term(const std::vector<TeleEntry>& gamma, const TermPtr& term,
                                   const TermPtr& type) {
  TransImpl impl(*this);
  std::vector<TeleEntry> tgt = load_telescope(impl, gamma);
  int D = 3 * static_cast<int>(gamma.size());

  check_type(sig_, impl.src, type);
  ValuePtr tyv = eval(sig_, impl.src.env(), type);
  check(sig_, impl.src, term, tyv);

  TermPtr that = impl.tterm(term, tyv, D);

  if (opts_.recheck) {
    Ctx tctx;
    for (const auto& e : tgt) {
      ValuePtr v = eval(sig_, tctx.env(), e.type);
      tctx.push_fresh(e.name, v);
    }
    TermPtr expect = apps(impl.ttype(type, D), {impl.left(term, D), impl.right(term, D)});
    ValuePtr expect_v = eval(sig_, tctx.env(), expect);
    try {
      check(sig_, tctx, that, expect_v);
    } catch (const TypeError& e) {
      fail(TypeErrorKind::InternalCheckFailed,
           std::string("abstraction theorem violated (translation failed to re-check): ") +
               e.what());
    }
  }
  return that;
}

std::string Translator::materialize(const std::string& name) {
  if (const std::string* w = table_.find(name)) {
    if (table_.trusted.count(*w)) {
      trusted_used_.insert(*w);
      if (opts_.policy == TrustPolicy::Strict && !opts_.allow_trusted.count(*w))
        fail(TypeErrorKind::MissingWitness,
             "strict trust policy forbids the trusted witness '" + *w + "'");
    }
    return *w;
  }
  // copy: later appends may reallocate the entry storage
  const SignatureEntry entry = sig_.get(name);
  if (!entry.body) {
    if (entry.witness.kind == WitnessStatus::Pending)
      fail(TypeErrorKind::MissingWitness,
           "axiom '" + name + "' has no relational witness (Pending)");
    table_.names[name] = entry.witness.witness;
    if (entry.witness.kind == WitnessStatus::Trusted) {
      table_.trusted.insert(entry.witness.witness);
      trusted_used_.insert(entry.witness.witness);
      if (opts_.policy == TrustPolicy::Strict && !opts_.allow_trusted.count(entry.witness.witness))
        fail(TypeErrorKind::MissingWitness,
             "strict trust policy forbids the trusted witness '" + entry.witness.witness + "'");
    }
    return entry.witness.witness;
  }
  if (in_progress_.count(name))
    throw KernelPanic("circular witness materialization for '" + name + "'");
  struct Guard {
    std::set<std::string>& s;
    std::string n;
    ~Guard() { s.erase(n); }
  } guard{in_progress_, name};
  in_progress_.insert(name);

  std::string wname = name + "_rel";
  while (sig_.has(wname) || builtin_info(wname)) wname += "'";

  TransImpl impl(*this);
  TermPtr wtype = apps(impl.ttype(entry.type, 0), {t_const(name), t_const(name)});
  {
    Ctx empty;
    wtype = normalize_type(sig_, empty, wtype);
  }
  TermPtr wbody;
  try {
    wbody = impl.tterm(*entry.body, entry.type_value, 0);
    check_decl(sig_, wname, wtype, wbody, WitnessStatus::pending(), /*allow_internal=*/true);
  } catch (const TypeError& err) {
    if (err.kind == TypeErrorKind::MissingWitness) throw;
    fail(TypeErrorKind::InternalCheckFailed,
         "abstraction theorem violated while deriving the witness of '" + name +
             "': " + err.what());
  }
  sig_.get_mutable(name).witness = WitnessStatus::derived(wname);
  table_.names[name] = wname;
  return wname;
}

// -- builtin witness registration ------------------------------------------------

namespace {

struct BuiltinWitnessSpec {
  const char* key;      // translation key
  const char* wrapper;  // prelude definition whose type pins the witness type
  const char* witness;  // prelude entry (or synthesized axiom when trusted)
  bool trusted;
};

const std::vector<BuiltinWitnessSpec>& builtin_witness_specs() {
  static const std::vector<BuiltinWitnessSpec> specs = {
      {"J@0.0", "pathind00", "pathind00_rel", false},
      {"J@0.1", "pathind01", "pathind01_rel", false},
      {"J@1.0", "pathind10", "pathind10_rel", false},
      {"J@1.1", "pathind11", "pathind11_rel", false},
      {"ind0@0", "emptyind0", "emptyind0_rel", false},
      {"ind0@1", "emptyind1", "emptyind1_rel", false},
      {"ind1@0", "unitind0", "unitind0_rel", false},
      {"ind2@0", "twoind0", "twoind0_rel", false},
      {"ind2@1", "twoind1", "twoind1_rel", false},
      {"IndW@0", "indw", "indw_rel", false},
      {"recS1@0", "s1rec", "s1_ind_rel", true},
      {"recS2@0", "s2rec", "s2_ind_rel", true},
  };
  return specs;
}

struct CtorWitnessSpec {
  const char* ctor;
  const char* witness;
};

const std::vector<CtorWitnessSpec>& ctor_witness_specs() {
  static const std::vector<CtorWitnessSpec> specs = {
      {"star", "unit_star_rel"},   {"zero2", "two_zero_rel"}, {"one2", "two_one_rel"},
      {"base1", "s1_base_rel"},    {"loop1", "s1_loop_rel"},  {"base2", "s2_base_rel"},
      {"loop2", "s2_loop_rel"},
  };
  return specs;
}

TermPtr builtin_ctor_type(const std::string& name) {
  Signature dummy;
  Ctx ctx;
  ConstT c{name, {}};
  ValuePtr ty = const_head_type(dummy, ctx, c, t_const(name));
  return quote(dummy, 0, ty);
}

}  // namespace

void register_builtin_witnesses(Signature& sig, WitnessTable& table) {
  // transport2 instances first: translated types below may mention path spaces
  const char* tr2[] = {"transport2", "transport2_u1", "transport2_u2"};
  for (int l = 0; l < 3; ++l) {
    if (sig.has(tr2[l])) table.names["transport2@" + std::to_string(l)] = tr2[l];
  }

  Translator tr(sig, table);

  for (const auto& spec : ctor_witness_specs()) {
    if (table.find(spec.ctor) || !sig.has(spec.witness)) continue;
    TermPtr cty = builtin_ctor_type(spec.ctor);
    TermPtr expect = apps(tr.translate_type({}, cty), {t_const(spec.ctor), t_const(spec.ctor)});
    Ctx ctx;
    if (!conv_terms(sig, ctx, sig.get(spec.witness).type, expect))
      fail(TypeErrorKind::TypeMismatch,
           "witness '" + std::string(spec.witness) + "' does not have the translated type of '" +
               spec.ctor + "': expected " + show_term(expect));
    table.names[spec.ctor] = spec.witness;
  }

  for (const auto& spec : builtin_witness_specs()) {
    if (table.find(spec.key) || !sig.has(spec.wrapper)) continue;
    TermPtr wrapper_ty = sig.get(spec.wrapper).type;
    TermPtr expect =
        apps(tr.translate_type({}, wrapper_ty), {t_const(spec.wrapper), t_const(spec.wrapper)});
    {
      Ctx empty;
      expect = normalize_type(sig, empty, expect);
    }
    if (spec.trusted) {
      if (!sig.has(spec.witness))
        check_decl(sig, spec.witness, expect, std::nullopt,
                   WitnessStatus::pending(), /*allow_internal=*/true);
      table.trusted.insert(spec.witness);
    } else {
      if (!sig.has(spec.witness)) continue;  // corpus file not loaded yet
      Ctx ctx;
      if (!conv_terms(sig, ctx, sig.get(spec.witness).type, expect))
        fail(TypeErrorKind::TypeMismatch,
             "witness '" + std::string(spec.witness) +
                 "' does not have the translated type of '" + spec.wrapper + "'");
    }
    table.names[spec.key] = spec.witness;
    table.names[spec.wrapper] = spec.witness;
    sig.get_mutable(spec.wrapper).witness = spec.trusted
                                                ? WitnessStatus::trusted(spec.witness)
                                                : WitnessStatus::derived(spec.witness);
  }
}

void register_trusted_axiom(Signature& sig, WitnessTable& table, const std::string& name,
                            const std::string& witness) {
  Translator tr(sig, table);
  TermPtr nty = sig.get(name).type;
  TermPtr expect = apps(tr.translate_type({}, nty), {t_const(name), t_const(name)});
  {
    Ctx empty;
    expect = normalize_type(sig, empty, expect);
  }
  if (!sig.has(witness))
    check_decl(sig, witness, expect, std::nullopt, WitnessStatus::pending(),
               /*allow_internal=*/true);
  sig.get_mutable(name).witness = WitnessStatus::trusted(witness);
  table.names[name] = witness;
  table.trusted.insert(witness);
}

void register_derived_axiom(Signature& sig, WitnessTable& table, const std::string& name,
                            const std::string& witness) {
  Translator tr(sig, table);
  TermPtr nty = sig.get(name).type;
  TermPtr expect = apps(tr.translate_type({}, nty), {t_const(name), t_const(name)});
  Ctx ctx;
  if (!conv_terms(sig, ctx, sig.get(witness).type, expect))
    fail(TypeErrorKind::TypeMismatch, "derived witness '" + witness +
                                          "' does not have the translated type of '" + name + "'");
  sig.get_mutable(name).witness = WitnessStatus::derived(witness);
  table.names[name] = witness;
}

}  // namespace hott
