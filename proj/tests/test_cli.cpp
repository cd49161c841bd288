#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef PARAM_HOTT_BIN
#define PARAM_HOTT_BIN "param-hott"
#endif
#ifndef PARAM_HOTT_PRELUDE_DIR
#define PARAM_HOTT_PRELUDE_DIR "prelude"
#endif

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(PARAM_HOTT_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  while (fgets(buf.data(), buf.size(), p)) out += buf.data();
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path);
  o << text;
}

const std::string kPrelude = std::string(" --prelude ") + PARAM_HOTT_PRELUDE_DIR;

}  // namespace

TEST_CASE("corpus command verifies everything and exits 0") {
  RunResult r = run("corpus" + kPrelude);
  CAPTURE(r.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("translated") != std::string::npos);
}

TEST_CASE("missing files exit with the I/O code") {
  RunResult r = run("check /tmp/param_hott_does_not_exist.hott" + kPrelude);
  CHECK(r.code == 3);
}

TEST_CASE("syntax errors exit 2 with a span") {
  write_file("/tmp/ph_syn.hott", "def x : :=\n");
  RunResult r = run("check /tmp/ph_syn.hott" + kPrelude);
  CAPTURE(r.out);
  CHECK(r.out.find("ph_syn.hott") != std::string::npos);
  CHECK(r.code == 2);
}

TEST_CASE("type errors exit 1") {
  write_file("/tmp/ph_ty.hott", "def bad : Two := star\n");
  RunResult r = run("check /tmp/ph_ty.hott" + kPrelude);
  CHECK(r.code == 1);
}

TEST_CASE("translate prints the witness and is deterministic") {
  write_file("/tmp/ph_tr.hott",
             "def tt1 : (X : U0) (x : X) -> Id X x x -> Id X x x := fun X x p => p\n");
  RunResult a = run("translate /tmp/ph_tr.hott --def tt1 --emit sexpr" + kPrelude);
  RunResult b = run("translate /tmp/ph_tr.hott --def tt1 --emit sexpr" + kPrelude);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("(lam") != std::string::npos);
  // --no-recheck produces the identical term
  RunResult c = run("translate /tmp/ph_tr.hott --def tt1 --emit sexpr --no-recheck" + kPrelude);
  CHECK(c.out == a.out);
}

TEST_CASE("strict trust policy refuses trusted witnesses unless allowed") {
  write_file("/tmp/ph_trust.hott",
             "def uses_circle : S1 -> S1 := fun s => s1rec S1 base1 loop1 s\n");
  RunResult refuse = run("translate /tmp/ph_trust.hott --def uses_circle" + kPrelude);
  CHECK(refuse.code == 1);
  RunResult allow = run(
      "translate /tmp/ph_trust.hott --def uses_circle --allow-trusted s1_ind_rel" + kPrelude);
  CAPTURE(allow.out);
  CHECK(allow.code == 0);
  RunResult permissive =
      run("translate /tmp/ph_trust.hott --def uses_circle --trust-policy permissive" + kPrelude);
  CHECK(permissive.code == 0);
}

TEST_CASE("free derives and prints statement plus proof") {
  write_file("/tmp/ph_free.hott",
             "def sq : (X : U0) (x : X) -> Id X x x -> Id X x x "
             ":= fun X x p => concat X x x x p p\n");
  RunResult r = run("free /tmp/ph_free.hott --def sq --recipe \"loopop 1 1\"" + kPrelude);
  CAPTURE(r.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("sq_free :") != std::string::npos);
  CHECK(r.out.find("loopover_decode1") != std::string::npos);
}

TEST_CASE("normalize runs file directives") {
  write_file("/tmp/ph_norm.hott", "#normalize plus one two\n");
  RunResult r = run("normalize /tmp/ph_norm.hott" + kPrelude);
  CAPTURE(r.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("sup") != std::string::npos);
}

TEST_CASE("check processes several files and reports in input order") {
  write_file("/tmp/ph_a.hott", "def a1 : Two := zero2\n#check a1 : Two\n");
  write_file("/tmp/ph_b.hott", "def b1 : Unit := star\n");
  RunResult r = run("check /tmp/ph_a.hott /tmp/ph_b.hott" + kPrelude);
  CHECK(r.code == 0);
  auto pa = r.out.find("ph_a.hott");
  auto pb = r.out.find("ph_b.hott");
  CHECK(pa != std::string::npos);
  CHECK(pb != std::string::npos);
  CHECK(pa < pb);
}
