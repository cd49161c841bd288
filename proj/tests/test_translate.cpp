#include "doctest.h"

#include "hott/translate.hpp"
#include "test_util.hpp"

using namespace hott;
using namespace hott::test;

namespace {

// Minimal path algebra so translated Id-types have their transport2.
void mini_prelude(Signature& sig) {
  declare(sig, "transport2",
          "(X : U0) (X' : U0) (R : X -> X' -> U0) (x0 : X) (x1 : X) (p : Id X x0 x1) "
          "(y0 : X') (y1 : X') (q : Id X' y0 y1) -> R x0 y0 -> R x1 y1",
          "fun X X' R x0 x1 p y0 y1 q r => "
          "J (fun v qv => R x1 v) (J (fun u pu => R u y0) r p) q");
  declare(sig, "two_zero_rel", "Id Two zero2 zero2", "refl zero2");
  declare(sig, "two_one_rel", "Id Two one2 one2", "refl one2");
}

std::vector<TeleEntry> tele(const Signature& sig,
                            std::initializer_list<std::pair<const char*, const char*>> es) {
  std::vector<TeleEntry> out;
  std::vector<std::string> names;
  for (auto [n, ty] : es) {
    out.push_back({n, term_in(sig, names, ty)});
    names.push_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("translation of the universe") {
  Signature sig;
  WitnessTable table;
  Translator tr(sig, table);
  TermPtr r = tr.translate_type({}, term_of(sig, "U0"));
  CHECK(term_eq(r, term_of(sig, "fun X X' => X -> X' -> U0")));
}

TEST_CASE("translation of constant types is the path space") {
  Signature sig;
  WitnessTable table;
  Translator tr(sig, table);
  TermPtr r = tr.translate_type({}, term_of(sig, "Two"));
  CHECK(term_eq(r, term_of(sig, "fun c c' => Id Two c c'")));
}

TEST_CASE("context translation: one and two entries") {
  Signature sig;
  WitnessTable table;
  Translator tr(sig, table);

  auto g1 = tr.translate_ctx(tele(sig, {{"X", "U0"}}));
  REQUIRE(g1.size() == 3);
  CHECK(term_eq(g1[0].type, term_of(sig, "U0")));
  CHECK(term_eq(g1[1].type, term_of(sig, "U0")));
  // X_r : X -> X' -> U0, i.e. #1 -> #0 -> U0 under (X, X')
  CHECK(term_eq(g1[2].type, t_pi("_", t_var(1), t_pi("_", t_var(1), t_univ(0)))));

  auto g2 = tr.translate_ctx(tele(sig, {{"X", "U0"}, {"x", "X"}}));
  REQUIRE(g2.size() == 6);
  // x : X (the left copy), x' : X' and x_r : X_r x x'
  CHECK(term_eq(g2[3].type, t_var(2)));
  CHECK(term_eq(g2[4].type, t_var(2)));
  CHECK(term_eq(g2[5].type, t_app(t_app(t_var(2), t_var(1)), t_var(0))));
}

TEST_CASE("left/right erasure reconstructs the source context") {
  Signature sig;
  WitnessTable table;
  Translator tr(sig, table);
  mini_prelude(sig);
  register_builtin_witnesses(sig, table);
  auto gamma = tele(sig, {{"X", "U0"}, {"x", "X"}, {"p", "Id X x x"}});
  auto out = tr.translate_ctx(gamma);
  REQUIRE(out.size() == 9);
  // dropping relation entries and de-interleaving gives two copies of gamma:
  // left entries sit at positions 3k and mention only left images (3j).
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    TermPtr lt = out[3 * k].type;
    // remap left-image variables back to source indices; in the prefix of
    // entry k, source var j has left image at target index 3j+2 from entry
    // k's position minus offsets; here we check the roundtrip through the
    // translator's own renamer instead of re-deriving the arithmetic.
    TermPtr expect = tr.rename_left(
        std::vector<TeleEntry>(gamma.begin(), gamma.begin() + static_cast<long>(k)),
        gamma[k].type);
    CHECK(term_eq(lt, expect));
  }
}

TEST_CASE("translation of the polymorphic identity") {
  Signature sig;
  WitnessTable table;
  Translator tr(sig, table);
  TermPtr t = term_of(sig, "fun X x => x");
  TermPtr ty = term_of(sig, "(X : U0) -> X -> X");
  TermPtr r = tr.translate_term({}, t, ty);
  CHECK(term_eq(r, term_of(sig, "fun X X' X_r x x' x_r => x_r")));
}

TEST_CASE("translation of refl is refl of the translation") {
  Signature sig;
  mini_prelude(sig);
  WitnessTable table;
  register_builtin_witnesses(sig, table);
  Translator tr(sig, table);
  auto gamma = tele(sig, {{"X", "U0"}, {"x", "X"}});
  TermPtr r = tr.translate_term(gamma, term_in(sig, {"X", "x"}, "refl x"),
                                term_in(sig, {"X", "x"}, "Id X x x"));
  CHECK(term_eq(r, t_refl(t_var(0))));
}

TEST_CASE("translation of the canonical embedding i") {
  // i = fun a X g => g a  of type  A -> (X : U0) -> (A -> X) -> X
  Signature sig;
  declare_axiom(sig, "A", "U0");
  WitnessTable table;
  Translator tr(sig, table);
  // A is an axiom without a witness, so use a context variable instead
  auto gamma = tele(sig, {{"A", "U0"}});
  TermPtr t = term_in(sig, {"A"}, "fun a X g => g a");
  TermPtr ty = term_in(sig, {"A"}, "A -> (X : U0) -> (A -> X) -> X");
  TermPtr r = tr.translate_term(gamma, t, ty);
  CHECK(term_eq(
      r, term_in(sig, {"A", "A'", "A_r"},
                 "fun a a' a_r X X' X_r g g' g_r => g_r a a' a_r")));
}

TEST_CASE("the translated loop-operation type is the displayed relational tower") {
  Signature sig;
  mini_prelude(sig);
  WitnessTable table;
  register_builtin_witnesses(sig, table);
  Translator tr(sig, table);
  TermPtr src = term_of(sig, "(X : U0) (x : X) -> Id X x x -> Id X x x");
  TermPtr rel = tr.translate_type({}, src);
  // [[T]] t t for a hypothetical closed inhabitant t
  declare_axiom(sig, "th", "(X : U0) (x : X) -> Id X x x -> Id X x x");
  TermPtr inst = t_app(t_app(rel, t_const("th")), t_const("th"));
  TermPtr display = term_of(
      sig,
      "(X : U0) (X' : U0) (X_r : X -> X' -> U0) "
      "(x : X) (x' : X') (x_r : X_r x x') "
      "(p : Id X x x) (p' : Id X' x' x') "
      "(p_r : Id (X_r x x') (transport2 X X' X_r x x p x' x' p' x_r) x_r) -> "
      "Id (X_r x x') "
      "(transport2 X X' X_r x x (th X x p) x' x' (th X' x' p') x_r) x_r");
  Ctx ctx;
  CHECK(conv_terms(sig, ctx, inst, display));
}

TEST_CASE("soundness recheck rejects a broken witness table entry") {
  Signature sig;
  mini_prelude(sig);
  // deliberately wrong arity/type for the zero2 witness
  declare(sig, "bad_wit", "Id Two one2 one2", "refl one2");
  WitnessTable table;
  table.names["zero2"] = "bad_wit";
  Translator tr(sig, table);
  CHECK_THROWS_AS((void)tr.translate_term({}, term_of(sig, "refl zero2"),
                                          term_of(sig, "Id Two zero2 zero2")),
                  TypeError);
}

TEST_CASE("missing witnesses are reported, not invented") {
  Signature sig;
  declare_axiom(sig, "ax", "Two");
  WitnessTable table;
  Translator tr(sig, table);
  try {
    (void)tr.translate_term({}, term_of(sig, "ax"), term_of(sig, "Two"));
    FAIL("expected MissingWitness");
  } catch (const TypeError& e) {
    CHECK(e.kind == TypeErrorKind::MissingWitness);
  }
}

TEST_CASE("witness materialization for definitions, recursively") {
  Signature sig;
  mini_prelude(sig);
  declare(sig, "idfun", "(X : U0) -> X -> X", "fun X x => x");
  declare(sig, "idtwice", "(X : U0) -> X -> X", "fun X x => idfun X (idfun X x)");
  WitnessTable table;
  Translator tr(sig, table);
  std::string w = tr.materialize("idtwice");
  CHECK(w == "idtwice_rel");
  CHECK(sig.has("idfun_rel"));
  CHECK(sig.get("idfun").witness.kind == WitnessStatus::Derived);
  // also usable at an instance
  Ctx ctx;
  CHECK(conv_terms(sig, ctx, term_of(sig, "idfun_rel Two Two (fun a b => Id Two a b) "
                                          "zero2 zero2 (refl zero2)"),
                   term_of(sig, "refl zero2")));
}

TEST_CASE("level bound: translating a type raises its level by one at most") {
  Signature sig;
  mini_prelude(sig);
  WitnessTable table;
  register_builtin_witnesses(sig, table);
  Translator tr(sig, table);
  for (auto sample : std::initializer_list<std::pair<const char*, int>>{
           {"U0", 1}, {"(X : U0) -> X -> X", 1}, {"Two", 0}, {"Id Two zero2 zero2", 0}}) {
    const char* src = sample.first;
    int lvl = sample.second;
    CAPTURE(src);
    TermPtr A = term_of(sig, src);
    Ctx ctx;
    int la = check_type(sig, ctx, A);
    TermPtr R = tr.translate_type({}, A);
    // R : A_l -> A_r -> U_la
    Ctx ctx2;
    ValuePtr expect =
        eval_closed(sig, t_pi("_", A, t_pi("_", shift(A, 1), t_univ(la))));
    check(sig, ctx2, R, expect);
    (void)lvl;
  }
}

TEST_CASE("strict trust policy blocks trusted witnesses unless allowed") {
  Signature sig;
  declare_axiom(sig, "myax", "Two");
  WitnessTable table;
  // hand-register a trusted witness for the axiom
  check_decl(sig, "myax_rel", term_of(sig, "Id Two myax myax"), std::nullopt);
  sig.get_mutable("myax").witness = WitnessStatus::trusted("myax_rel");
  table.names["myax"] = "myax_rel";
  table.trusted.insert("myax_rel");

  TranslateOptions strict;
  strict.policy = TrustPolicy::Strict;
  Translator tr1(sig, table, strict);
  CHECK_THROWS_AS((void)tr1.translate_term({}, term_of(sig, "myax"), term_of(sig, "Two")),
                  TypeError);

  strict.allow_trusted = {"myax_rel"};
  Translator tr2(sig, table, strict);
  TermPtr r = tr2.translate_term({}, term_of(sig, "myax"), term_of(sig, "Two"));
  CHECK(term_eq(r, term_of(sig, "myax_rel")));
  CHECK(tr2.trusted_used().count("myax_rel") == 1);
}
