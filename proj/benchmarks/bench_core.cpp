#include <benchmark/benchmark.h>

#include "hott/check.hpp"
#include "hott/prelude.hpp"
#include "hott/surface.hpp"
#include "hott/translate.hpp"

#ifndef PARAM_HOTT_PRELUDE_DIR
#define PARAM_HOTT_PRELUDE_DIR "prelude"
#endif

namespace {

using namespace hott;

struct Fixture {
  Signature sig;
  WitnessTable table;
  LoadResult loaded;
  Fixture() { loaded = load_prelude(sig, table, PARAM_HOTT_PRELUDE_DIR); }
  static Fixture& get() {
    static Fixture f;
    return f;
  }
  TermPtr t(const std::string& s) {
    ElabScope sc;
    return elaborate(sig, sc, parse_expr_string("<bench>", s));
  }
};

void BM_parse_elaborate(benchmark::State& state) {
  Fixture& f = Fixture::get();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        f.t("fun X x p => concat X x x x (inv X x x (concat X x x x p p)) p"));
  }
}
BENCHMARK(BM_parse_elaborate);

void BM_check_fig1E(benchmark::State& state) {
  Fixture& f = Fixture::get();
  const SignatureEntry& e = f.sig.get("fig1E");
  for (auto _ : state) {
    Ctx ctx;
    check(f.sig, ctx, *e.body, e.type_value);
  }
}
BENCHMARK(BM_check_fig1E);

void BM_normalize_plus(benchmark::State& state) {
  Fixture& f = Fixture::get();
  TermPtr term = f.t("plus (plus two two) (plus two one)");
  ValuePtr ty = eval_closed(f.sig, f.t("Nat"));
  for (auto _ : state) {
    Ctx ctx;
    benchmark::DoNotOptimize(normalize_at(f.sig, ctx, term, ty));
  }
}
BENCHMARK(BM_normalize_plus);

void BM_conv_hopf3_l3_vs_cgen(benchmark::State& state) {
  Fixture& f = Fixture::get();
  TermPtr a = f.t("hopf3 l3");
  TermPtr b = f.t("cgen");
  for (auto _ : state) {
    Ctx ctx;
    benchmark::DoNotOptimize(conv_terms(f.sig, ctx, a, b));
  }
}
BENCHMARK(BM_conv_hopf3_l3_vs_cgen);

void BM_translate_concat(benchmark::State& state) {
  Fixture& f = Fixture::get();
  const SignatureEntry& e = f.sig.get("concat");
  for (auto _ : state) {
    Signature sig = f.sig;
    sig.thaw();
    WitnessTable table = f.table;
    Translator tr(sig, table);
    benchmark::DoNotOptimize(tr.translate_term({}, *e.body, e.type));
  }
}
BENCHMARK(BM_translate_concat);

}  // namespace

BENCHMARK_MAIN();
