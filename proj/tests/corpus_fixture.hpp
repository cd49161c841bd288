#pragma once

#include <string>

#include "hott/prelude.hpp"
#include "hott/surface.hpp"

namespace hott::test {

#ifndef PARAM_HOTT_PRELUDE_DIR
#define PARAM_HOTT_PRELUDE_DIR "prelude"
#endif

// One corpus load per test binary.
struct Corpus {
  Signature sig;
  WitnessTable table;
  LoadResult loaded;

  Corpus() {
    install_term_printer();
    loaded = load_prelude(sig, table, PARAM_HOTT_PRELUDE_DIR);
  }

  static Corpus& get() {
    static Corpus c;
    return c;
  }

  TermPtr t(const std::string& src) const {
    ElabScope sc;
    return elaborate(sig, sc, parse_expr_string("<test>", src));
  }

  bool defeq(const std::string& a, const std::string& b) {
    Ctx ctx;
    return conv_terms(sig, ctx, t(a), t(b));
  }
};

}  // namespace hott::test
