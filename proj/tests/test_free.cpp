#include "doctest.h"

#include "corpus_fixture.hpp"
#include "hott/free_theorems.hpp"

using namespace hott;
using namespace hott::test;

namespace {

// fresh extendable copies of the shared corpus
struct Local {
  Signature sig;
  WitnessTable table;
  Local() : sig(Corpus::get().sig), table(Corpus::get().table) { sig.thaw(); }
  TermPtr t(const std::string& src) {
    ElabScope sc;
    return elaborate(sig, sc, parse_expr_string("<test>", src));
  }
  void def(const std::string& name, const std::string& ty, const std::string& body) {
    check_decl(sig, name, t(ty), t(body));
  }
};

}  // namespace

TEST_CASE("loopop 1 1 on three loop operations") {
  Local l;
  l.def("u_id", "(X : U0) (x : X) -> Id X x x -> Id X x x", "fun X x p => p");
  l.def("u_sq", "(X : U0) (x : X) -> Id X x x -> Id X x x",
        "fun X x p => concat X x x x p p");
  l.def("u_inv", "(X : U0) (x : X) -> Id X x x -> Id X x x", "fun X x p => inv X x x p");
  for (const char* name : {"u_id", "u_sq", "u_inv"}) {
    CAPTURE(name);
    FreeRecipe r;
    r.kind = FreeRecipe::LoopOp;
    r.n = r.k = 1;
    FreeTheoremResult out = derive_free_theorem(l.sig, l.table, r, name);
    CHECK(l.sig.has(out.name));
    // the statement is the displayed naturality square t (f p) = f (t p)
    Ctx ctx;
    CHECK(conv_terms(l.sig, ctx, out.statement,
                     l.t(std::string("(X : U0) (X' : U0) (f : X -> X') (x : X) "
                                     "(p : Id X x x) -> Id (Id X' (f x) (f x)) (") +
                         name + " X' (f x) (ap X X' f x x p)) "
                                "(ap X X' f x x (" + name + " X x p))")));
  }
}

TEST_CASE("loopop at higher dimensions") {
  Local l;
  l.def("u_12", "(X : U0) (x : X) -> Id X x x -> Omega 2 X x",
        "fun X x p => concat (Id X x x) (refl x) (concat X x x x p (inv X x x p)) (refl x) "
        "(inv (Id X x x) (concat X x x x p (inv X x x p)) (refl x) (rinv X x x p)) "
        "(rinv X x x p)");
  l.def("u_22", "(X : U0) (x : X) -> Omega 2 X x -> Omega 2 X x",
        "fun X x a => concat (Id X x x) (refl x) (refl x) (refl x) a a");
  l.def("u_23", "(X : U0) (x : X) -> Omega 2 X x -> Omega 3 X x", "fun X x a => cOm X x a");
  for (auto sample : std::initializer_list<std::tuple<const char*, int, int>>{
           {"u_12", 1, 2}, {"u_22", 2, 2}, {"u_23", 2, 3}}) {
    const char* name = std::get<0>(sample);
    CAPTURE(name);
    FreeRecipe r;
    r.kind = FreeRecipe::LoopOp;
    r.n = std::get<1>(sample);
    r.k = std::get<2>(sample);
    FreeTheoremResult out = derive_free_theorem(l.sig, l.table, r, name);
    CHECK(l.sig.has(out.name));
  }
}

TEST_CASE("contembed on two distinct continuation inhabitants") {
  Local l;
  for (const char* name : {"churchTwoA", "churchTwoB"}) {
    CAPTURE(name);
    FreeRecipe r;
    r.kind = FreeRecipe::ContEmbed;
    r.base_type = "Two";
    FreeTheoremResult out = derive_free_theorem(l.sig, l.table, r, name);
    Ctx ctx;
    CHECK(conv_terms(l.sig, ctx, out.statement,
                     l.t(std::string("(X : U0) (g : Two -> X) -> Id X "
                                     "(church_i Two (church_j Two ") +
                         name + ") X g) (" + name + " X g)")));
  }
}

TEST_CASE("template mismatches are rejected") {
  Local l;
  l.def("u_bad", "(X : U0) -> X -> X", "fun X x => x");
  FreeRecipe r;
  r.kind = FreeRecipe::LoopOp;
  r.n = r.k = 1;
  try {
    derive_free_theorem(l.sig, l.table, r, "u_bad");
    FAIL("expected TemplateMismatch");
  } catch (const TypeError& e) {
    CHECK(e.kind == TypeErrorKind::TemplateMismatch);
  }
  FreeRecipe ce;
  ce.kind = FreeRecipe::ContEmbed;
  ce.base_type = "Two";
  CHECK_THROWS_AS(derive_free_theorem(l.sig, l.table, ce, "u_bad"), TypeError);
}

TEST_CASE("derived proofs re-check in a fresh pass") {
  Local l;
  l.def("u_id2", "(X : U0) (x : X) -> Id X x x -> Id X x x", "fun X x p => p");
  FreeRecipe r;
  r.kind = FreeRecipe::LoopOp;
  r.n = r.k = 1;
  FreeTheoremResult out = derive_free_theorem(l.sig, l.table, r, "u_id2");
  Ctx ctx;
  check(l.sig, ctx, out.proof, eval_closed(l.sig, out.statement));
}
