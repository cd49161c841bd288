#include "doctest.h"

#include "hott/check.hpp"
#include "hott/eval.hpp"
#include "test_util.hpp"

using namespace hott;
using namespace hott::test;

TEST_CASE("beta reduction under eval") {
  Signature sig;
  declare_axiom(sig, "A", "U0");
  declare_axiom(sig, "a", "A");
  CHECK(conv0(sig, "(fun x => x) a", "a"));
  CHECK(conv0(sig, "(fun X x => x) Two one2", "one2"));
}

TEST_CASE("iota: J computes on refl") {
  Signature sig;
  declare_axiom(sig, "A", "U0");
  declare_axiom(sig, "a", "A");
  // J (fun y p => A) a (refl a)  ==  a
  CHECK(conv0(sig, "J (fun y p => A) a (refl a)", "a"));
}

TEST_CASE("iota: ind2 computes on both constructors") {
  Signature sig;
  CHECK(conv0(sig, "ind2 (fun c => U0) Empty Unit zero2", "Empty"));
  CHECK(conv0(sig, "ind2 (fun c => U0) Empty Unit one2", "Unit"));
  CHECK(conv0(sig, "ind1 (fun u => Two) zero2 star", "zero2"));
}

TEST_CASE("sphere point constructors compute under rec, loops are stuck") {
  Signature sig;
  declare_axiom(sig, "X", "U0");
  declare_axiom(sig, "x", "X");
  declare_axiom(sig, "p", "Id X x x");
  CHECK(conv0(sig, "recS1 X x p base1", "x"));
  CHECK(conv0(sig, "recS2 X x (refl (refl x)) base2", "x"));
  // stuck on loop1: the value is a neutral recS1 application
  ValuePtr v = ev(sig, "recS1 X x p loop1");
  CHECK(as_neutral(v) != nullptr);
  CHECK_FALSE(conv0(sig, "recS1 X x p loop1", "x"));
}

TEST_CASE("eliminators are stuck on neutrals") {
  Signature sig;
  declare_axiom(sig, "c", "Two");
  ValuePtr v = ev(sig, "ind2 (fun c => U0) Empty Unit c");
  CHECK(as_neutral(v) != nullptr);

  declare_axiom(sig, "A", "U0");
  declare_axiom(sig, "a", "A");
  declare_axiom(sig, "b", "A");
  declare_axiom(sig, "q", "Id A a b");
  CHECK(as_neutral(ev(sig, "J (fun y p => A) a q")) != nullptr);

  declare(sig, "natB0", "Two -> U0", "fun c2 => ind2 (fun u => U0) Empty Unit c2");
  declare(sig, "Nat0", "U0",
          "IW Unit (fun i => Two) (fun i a2 => natB0 a2) (fun i a2 y => star) star");
  declare_axiom(sig, "n", "Nat0");
  CHECK(as_neutral(ev(sig, "indW (fun i w => Two) (fun i a2 f g => a2) n")) != nullptr);
}

TEST_CASE("quote of beta redex and projections") {
  Signature sig;
  declare_axiom(sig, "A", "U0");
  declare_axiom(sig, "a", "A");
  declare_axiom(sig, "b", "A");
  TermPtr t = quote(sig, 0, ev(sig, "(fun x => x) a"));
  CHECK(term_eq(t, term_of(sig, "a")));
  CHECK(term_eq(quote(sig, 0, ev(sig, "fst (a, b)")), term_of(sig, "a")));
  CHECK(term_eq(quote(sig, 0, ev(sig, "snd (a, b)")), term_of(sig, "b")));
}

TEST_CASE("quote_at eta-expands neutrals at Pi types") {
  Signature sig;
  declare_axiom(sig, "A", "U0");
  Ctx ctx;
  ctx.push_fresh("f", eval_closed(sig, term_of(sig, "A -> A")));
  TermPtr t = normalize(sig, ctx, term_in(sig, {"f"}, "f"));
  // f  ~~>  fun y => f y
  CHECK(term_eq(t, t_lam("x", t_app(t_var(1), t_var(0)))));
}

TEST_CASE("eta: functions and pairs convert with their expansions") {
  Signature sig;
  declare_axiom(sig, "A", "U0");
  declare_axiom(sig, "f", "A -> A");
  declare_axiom(sig, "z", "Sigma (x : A), A");
  CHECK(conv0(sig, "fun x => f x", "f"));
  CHECK(conv0(sig, "(fst z, snd z)", "z"));
}

TEST_CASE("conv distinguishes universes") {
  Signature sig;
  CHECK_FALSE(conv0(sig, "U0", "U1"));
  CHECK(conv0(sig, "U0", "U0"));
}

TEST_CASE("normalize is idempotent on sample terms") {
  Signature sig;
  declare_axiom(sig, "A", "U0");
  declare_axiom(sig, "a", "A");
  declare(sig, "idA", "A -> A", "fun x => x");
  for (auto sample : std::initializer_list<std::pair<const char*, const char*>>{
           {"idA a", "A"},
           {"fst ((a, a))", "A"},
           {"fun f => f a", "(A -> A) -> A"}}) {
    const char* src = sample.first;
    const char* ty = sample.second;
    CAPTURE(src);
    Ctx ctx;
    ValuePtr tyv = eval_closed(sig, term_of(sig, ty));
    TermPtr n1 = normalize_at(sig, ctx, term_of(sig, src), tyv);
    TermPtr n2 = normalize_at(sig, ctx, n1, tyv);
    CHECK(term_eq(n1, n2));
  }
}

TEST_CASE("indW computes on sup") {
  Signature sig;
  // Natural numbers as a W-type over Two indexed by Unit.
  declare(sig, "natB", "Two -> U0", "fun c => ind2 (fun c => U0) Empty Unit c");
  declare(sig, "Nat", "U0",
          "IW Unit (fun i => Two) (fun i a => natB a) (fun i a y => star) star");
  declare(sig, "zero", "Nat",
          "sup star zero2 (fun e => ind0 (fun v => Nat) e)");
  declare(sig, "succ", "Nat -> Nat", "fun n => sup star one2 (fun u => n)");
  // pr1(sup(a,f)) == a via the projection eliminator
  CHECK(conv0(sig, "indW (fun i w => Two) (fun i a f g => a) zero", "zero2"));
  CHECK(conv0(sig, "indW (fun i w => Two) (fun i a f g => a) (succ zero)", "one2"));
  // recursion: double via indW
  declare(sig, "dbl", "Nat -> Nat",
          "fun n => indW (fun i w => Nat) "
          "(fun i a f g => ind2 (fun c => (natB c -> Nat) -> (natB c -> Nat) -> Nat) "
          "  (fun f0 g0 => zero) (fun f1 g1 => succ (succ (g1 star))) a f g) n");
  CHECK(conv0(sig, "dbl (succ zero)", "succ (succ zero)"));
  CHECK(conv0(sig, "dbl (succ (succ zero))", "succ (succ (succ (succ zero)))"));
}

TEST_CASE("conv is reflexive and stable under eval/quote round trips") {
  Signature sig;
  declare_axiom(sig, "A", "U0");
  declare_axiom(sig, "a", "A");
  for (const char* src :
       {"fun x => x", "(a, fun x => x)", "refl a", "Id A a a", "(x : A) -> Id A x x"}) {
    CAPTURE(src);
    TermPtr t = term_of(sig, src);
    ValuePtr v = eval_closed(sig, t);
    CHECK(conv(sig, 0, v, v));
    ValuePtr v2 = eval_closed(sig, quote(sig, 0, v));
    CHECK(conv(sig, 0, v, v2));
  }
}
