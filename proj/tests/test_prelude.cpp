#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "corpus_fixture.hpp"
#include "hott/check.hpp"

using namespace hott;
using namespace hott::test;

TEST_CASE("prelude loads on an empty signature with manifest counts") {
  Corpus& c = Corpus::get();
  Manifest m = load_manifest(PARAM_HOTT_PRELUDE_DIR);
  REQUIRE(m.files.size() == 9);
  for (const auto& mf : m.files) {
    CAPTURE(mf.file);
    CHECK(c.loaded.entries_per_file.at(mf.file) == mf.expected_entries);
  }
}

TEST_CASE("definitional identities from the derivations hold") {
  Corpus& c = Corpus::get();
  CHECK(c.defeq("fun P a => church_j P (church_i P a)", "fun P a => a"));
  CHECK(c.defeq("rec2U Empty Unit zero2", "Empty"));
  CHECK(c.defeq("rec2U Empty Unit one2", "Unit"));
  // indW computation rule on a sup
  CHECK(c.defeq("plus one two", "succ (succ (succ zero))"));
  // first projection of sup computes to the label
  CHECK(c.defeq(
      "wpr1 Unit (fun i => Two) (fun i a => natB a) (fun i a y => star) star (succ zero)",
      "one2"));
  // sphere point constructors compute under rec
  CHECK(c.defeq("s1rec S1 base1 loop1 base1", "base1"));
  CHECK(c.defeq("s2rec S2 base2 (refl (refl base2)) base2", "base2"));
}

TEST_CASE("double transport computes away on a pair of refls") {
  Corpus& c = Corpus::get();
  CHECK(c.defeq("fun X X' R => fun x0 y0 r => "
                "transport2 X X' R x0 x0 (refl x0) y0 y0 (refl y0) r",
                "fun X X' R => fun x0 y0 r => r"));
}

TEST_CASE("the exchange cell computes on double refl") {
  Corpus& c = Corpus::get();
  CHECK(c.defeq("fun X x => fig1E X x (refl x) (refl x) (refl (refl x)) (refl (refl x))",
                "fun X x => refln 3 X x"));
}

TEST_CASE("the Hopf pattern applied to the join 3-loop is the generator") {
  Corpus& c = Corpus::get();
  CHECK(c.defeq("hopf3 l3", "cgen"));
  // and the second typing is the diagonal instance
  CHECK(c.defeq("cOm", "fun X x a => cgen X x x (refl x) a"));
}

TEST_CASE("loop-space retractions of the embedding") {
  Corpus& c = Corpus::get();
  Ctx ctx;
  check(c.sig, ctx, c.t("loopspace_ji1"),
        eval_closed(c.sig, c.t("(P : U0) (a : P) (p : Id P a a) -> Id (Id P a a) "
                               "(loopspace_j1 P a (fun X g => loopspace_i1 P a p X g)) p")));
  check(c.sig, ctx, c.t("loopspace_ji2"),
        eval_closed(c.sig, c.t("(P : U0) (a : P) (s : Omega 2 P a) -> Id (Omega 2 P a) "
                               "(loopspace_j2 P a (fun X g => loopspace_i2 P a s X g)) s")));
}

TEST_CASE("the section-4.2 lemma at dimension one is the section-4.1 lemma") {
  Corpus& c = Corpus::get();
  Ctx ctx;
  CHECK(conv_terms(c.sig, ctx, c.sig.get("lemma41").type, c.sig.get("lemma42_1").type));
}

TEST_CASE("verify_all reports full coverage and the exact trusted set") {
  // run on a fresh load so materialized state is reproducible
  Signature sig;
  WitnessTable table;
  LoadResult loaded = load_prelude(sig, table, PARAM_HOTT_PRELUDE_DIR);
  CorpusReport rep = verify_all(sig, table, loaded);
  CHECK(rep.ok());
  CHECK(rep.checked == static_cast<int>(loaded.corpus_entries.size()));
  CHECK(rep.translated == rep.checked - rep.axioms);
  Manifest m = load_manifest(PARAM_HOTT_PRELUDE_DIR);
  CHECK(rep.postulates == m.trusted);
  // trusted witnesses used by translation are within the declared set
  for (const auto& t : rep.trusted_used) {
    CAPTURE(t);
    CHECK(m.trusted.count(t) == 1);
  }
  CHECK(rep.trusted_used ==
        std::set<std::string>{"s1_ind_rel", "s2_ind_rel", "ua_rel"});
}

TEST_CASE("corrupting a corpus byte is reported with the file name") {
  // copy the prelude, flip one definition body, expect a named failure
  std::string dir = "/tmp/param_hott_corrupt";
  int rc = std::system(
      ("rm -rf " + dir + " && cp -r " + std::string(PARAM_HOTT_PRELUDE_DIR) + " " + dir).c_str());
  REQUIRE(rc == 0);
  {
    std::ifstream in(dir + "/church.hott");
    std::string text((std::istreambuf_iterator<char>(in)), {});
    in.close();
    auto pos = text.find("fun P a X g => g a");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 18, "fun P a X g => a a");
    std::ofstream out(dir + "/church.hott");
    out << text;
  }
  Signature sig;
  WitnessTable table;
  try {
    load_prelude(sig, table, dir);
    FAIL("corrupted corpus loaded");
  } catch (const TypeError& e) {
    std::string msg = e.what();
    CHECK(msg.find("church") != std::string::npos);
    REQUIRE(e.span.has_value());
    CHECK(e.span->file == "church");
  }
}

TEST_CASE("a loop concatenation checks against the loop-operation type in context") {
  Corpus& c = Corpus::get();
  Ctx ctx;
  ctx.push_fresh("X", v_univ(0));
  ctx.push_fresh("x", ctx.lookup(0).value);
  ElabScope sc;
  sc.names = {"X", "x"};
  TermPtr body =
      elaborate(c.sig, sc, parse_expr_string("<t>", "fun p => concat X x x x p p"));
  TermPtr ty = elaborate(c.sig, sc, parse_expr_string("<t>", "Id X x x -> Id X x x"));
  check(c.sig, ctx, body, eval(c.sig, ctx.env(), ty));
}

TEST_CASE("printing round-trips every corpus term") {
  Corpus& c = Corpus::get();
  ElabScope sc;
  for (const auto& name : c.loaded.corpus_entries) {
    const SignatureEntry& e = c.sig.get(name);
    CAPTURE(name);
    {
      std::string printed = print_term_closed(c.sig, e.type);
      TermPtr back = elaborate(c.sig, sc, parse_expr_string("<rt>", printed));
      CHECK(term_eq(back, e.type));
    }
    if (e.body) {
      std::string printed = print_term_closed(c.sig, *e.body);
      TermPtr back = elaborate(c.sig, sc, parse_expr_string("<rt>", printed));
      CHECK(term_eq(back, *e.body));
    }
  }
}

TEST_CASE("no term checks at Empty in the empty context across the corpus") {
  Corpus& c = Corpus::get();
  ValuePtr empty = v_const_head("Empty");
  for (const auto& name : c.loaded.corpus_entries) {
    const SignatureEntry& e = c.sig.get(name);
    Ctx ctx;
    CHECK_FALSE(conv(c.sig, 0, e.type_value, empty));
  }
}
