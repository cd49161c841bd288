#include "doctest.h"

#include "hott/check.hpp"
#include "hott/surface.hpp"
#include "test_util.hpp"

using namespace hott;
using namespace hott::test;

TEST_CASE("parse_file: definitions, axioms, directives") {
  auto decls = parse_file("<t>", "def idf : (X : U0) -> X -> X := fun X x => x\n"
                                 "axiom ua : U0 [trusted ua_rel]\n"
                                 "#check idf : (X : U0) -> X -> X\n"
                                 "#normalize idf\n"
                                 "#translate idf\n"
                                 "#free loopop 1 1 idf\n"
                                 "#free contembed Two idf\n"
                                 "import path_algebra\n");
  REQUIRE(decls.size() == 8);
  CHECK(std::get<DeclDef>(decls[0].node).name == "idf");
  auto& ax = std::get<DeclAxiom>(decls[1].node);
  CHECK(ax.witness.has_value());
  CHECK(ax.witness->trusted);
  CHECK(ax.witness->name == "ua_rel");
  auto& fr = std::get<DeclFree>(decls[5].node);
  CHECK(fr.recipe.kind == FreeRecipe::LoopOp);
  CHECK(fr.recipe.n == 1);
  auto& fr2 = std::get<DeclFree>(decls[6].node);
  CHECK(fr2.recipe.kind == FreeRecipe::ContEmbed);
  CHECK(fr2.recipe.base_type == "Two");
}

TEST_CASE("syntax errors carry spans") {
  try {
    parse_file("bad.hott", "def x : :=");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.span.file == "bad.hott");
    CHECK(e.span.begin >= 8);
  }
}

TEST_CASE("Omega and refln macros unfold at elaboration") {
  Signature sig;
  declare_axiom(sig, "X", "U0");
  declare_axiom(sig, "x", "X");
  CHECK(term_eq(term_of(sig, "Omega 1 X x"), term_of(sig, "Id X x x")));
  CHECK(term_eq(term_of(sig, "Omega 2 X x"), term_of(sig, "Id (Id X x x) (refl x) (refl x)")));
  CHECK(term_eq(term_of(sig, "Omega 0 X x"), term_of(sig, "X")));
  CHECK(term_eq(term_of(sig, "refln 2 X x"), term_of(sig, "refl (refl x)")));
  CHECK(term_eq(term_of(sig, "refln 0 X x"), term_of(sig, "x")));
}

TEST_CASE("shadowed binders resolve innermost") {
  Signature sig;
  TermPtr t = term_of(sig, "fun x => fun x => x");
  const Lam* l1 = std::get_if<Lam>(&t->node);
  REQUIRE(l1);
  const Lam* l2 = std::get_if<Lam>(&l1->body->node);
  REQUIRE(l2);
  const Var* v = std::get_if<Var>(&l2->body->node);
  REQUIRE(v);
  CHECK(v->ix == 0);
}

TEST_CASE("unicode arrow aliases lex to the ascii tokens") {
  Signature sig;
  CHECK(term_eq(term_of(sig, "(X : U0) \xe2\x86\x92 X \xe2\x86\x92 X"),
                term_of(sig, "(X : U0) -> X -> X")));
  CHECK(term_eq(term_of(sig, "fun X x \xe2\x87\x92 x"), term_of(sig, "fun X x => x")));
}

TEST_CASE("unbound names error with span") {
  Signature sig;
  ElabScope scope;
  CHECK_THROWS_AS((void)elaborate(sig, scope, parse_expr_string("<t>", "nope")), ParseError);
}

TEST_CASE("constant applications elaborate to canonical spines") {
  Signature sig;
  TermPtr t = term_of(sig, "ind2 (fun c => U0) Empty Unit zero2");
  const ConstT* c = std::get_if<ConstT>(&t->node);
  REQUIRE(c);
  CHECK(c->name == "ind2");
  CHECK(c->spine.size() == 4);
}

TEST_CASE("print round-trips elaborated terms") {
  Signature sig;
  declare_axiom(sig, "A", "U0");
  declare_axiom(sig, "a", "A");
  for (const char* src : {
           "fun X x => x",
           "(X : U0) (x : X) -> Id X x x -> Id X x x",
           "fun p => (fst p, snd p)",
           "J (fun y p => Id A a y) (refl a) (refl a)",
           "Jd (fun y p => Id A y y) (fun x => refl x) (refl a)",
           "IW Unit (fun i => Two) (fun i a => Two) (fun i a y => star) star",
           "sup star zero2 (fun e => e)",
           "indW (fun i w => Two) (fun i a f g => a) (sup star zero2 (fun e => e))",
           "Sigma (x : A), Id A x x",
           "(a, refl a)",
           "fun f x => f x a",
           "U1 -> U0",
       }) {
    CAPTURE(src);
    TermPtr t = term_of(sig, src);
    std::string printed = print_term_closed(sig, t);
    CAPTURE(printed);
    TermPtr back = term_of(sig, printed);
    CHECK(term_eq(t, back));
  }
}

TEST_CASE("printing avoids capture when hints collide") {
  Signature sig;
  // inner binder hint "x" must not capture the outer "x" reference
  TermPtr t = t_lam("x", t_lam("x", t_app(t_var(1), t_var(0))));
  std::string printed = print_term_closed(sig, t);
  TermPtr back = term_of(sig, printed);
  CHECK(term_eq(t, back));
}

TEST_CASE("printing avoids shadowing signature constants") {
  Signature sig;
  declare_axiom(sig, "c0", "U0");
  TermPtr t = t_lam("c0", t_const("c0", {t_var(0)}));
  std::string printed = print_term_closed(sig, t);
  TermPtr back = term_of(sig, printed);
  CHECK(term_eq(t, back));
}

TEST_CASE("sexpr output is stable") {
  Signature sig;
  TermPtr t = term_of(sig, "fun X x => x");
  CHECK(sexpr_term(t) == "(lam (lam (var 0)))");
  CHECK(sexpr_term(term_of(sig, "Id Two zero2 one2")) ==
        "(id (const \"Two\") (const \"zero2\") (const \"one2\"))");
}

TEST_CASE("eta-long normal form prints as the spec example") {
  Signature sig;
  // normalize the translated-universe shape: fun X X' => X -> X' -> U0
  Ctx ctx;
  ValuePtr ty = eval_closed(sig, term_of(sig, "U0 -> U0 -> U1"));
  TermPtr n = normalize_at(sig, ctx, term_of(sig, "fun X Xp => X -> Xp -> U0"), ty);
  CHECK(print_term_closed(sig, n) == "fun X Xp => X -> Xp -> U0");
}
