// param-hott: proof checker and binary-parametricity translator for a small
// homotopy type theory, with the bundled prelude corpus.

#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hott/check.hpp"
#include "hott/free_theorems.hpp"
#include "hott/prelude.hpp"
#include "hott/surface.hpp"
#include "hott/translate.hpp"

namespace {

using namespace hott;

constexpr int kExitOk = 0;
constexpr int kExitTypeError = 1;
constexpr int kExitSyntaxError = 2;
constexpr int kExitIoError = 3;

struct CommonOpts {
  bool no_prelude = false;
  bool no_recheck = false;
  std::string emit = "pretty";  // pretty | sexpr
  int max_level = 4;
  std::string trust_policy;  // "", "strict", "permissive"
  std::vector<std::string> allow_trusted;
  std::string prelude_dir;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_flag("--no-prelude", o.no_prelude, "start from an empty signature");
  cmd->add_flag("--no-recheck", o.no_recheck, "skip re-checking translation outputs");
  cmd->add_option("--emit", o.emit, "output form: pretty or sexpr")
      ->check(CLI::IsMember({"pretty", "sexpr"}));
  cmd->add_option("--max-level", o.max_level, "largest universe index");
  cmd->add_option("--trust-policy", o.trust_policy, "strict or permissive")
      ->check(CLI::IsMember({"strict", "permissive"}));
  cmd->add_option("--allow-trusted", o.allow_trusted,
                  "trusted witness names admitted under --trust-policy strict");
  cmd->add_option("--prelude", o.prelude_dir, "prelude directory override");
}

std::string render(const Signature& sig, const std::string& emit, const TermPtr& t) {
  return emit == "sexpr" ? sexpr_term(t) : print_term_closed(sig, t);
}

struct Session {
  Signature sig;
  WitnessTable table;
  LoadResult loaded;
};

Session open_session(const CommonOpts& o) {
  Session s;
  s.sig.max_level = o.max_level;
  if (!o.no_prelude) {
    std::string dir = o.prelude_dir.empty() ? default_prelude_dir() : o.prelude_dir;
    s.loaded = load_prelude(s.sig, s.table, dir);
  }
  s.sig.freeze();
  return s;
}

TranslateOptions translate_opts(const CommonOpts& o, TrustPolicy default_policy) {
  TranslateOptions t;
  t.recheck = !o.no_recheck;
  t.policy = o.trust_policy.empty()
                 ? default_policy
                 : (o.trust_policy == "strict" ? TrustPolicy::Strict : TrustPolicy::Permissive);
  t.allow_trusted.insert(o.allow_trusted.begin(), o.allow_trusted.end());
  return t;
}

int run_check(const CommonOpts& o, const std::vector<std::string>& files) {
  Session s = open_session(o);
  // files check concurrently against the frozen signature; each gets its own
  // signature extension, outputs are reported in input order
  std::vector<std::future<std::pair<int, std::string>>> futs;
  for (const auto& f : files) {
    futs.push_back(std::async(std::launch::async, [&s, f]() {
      std::ostringstream out;
      int code = kExitOk;
      try {
        Signature local = s.sig;  // value copy; the shared part is immutable
        local.thaw();
        WitnessTable table = s.table;
        LoadResult r = load_file(local, table, f, s.loaded);
        out << f << ": ok (" << r.entries_per_file[f] << " entries)\n";
        // report only this file's directive outputs, not the prelude's
        for (std::size_t i = s.loaded.check_outputs.size(); i < r.check_outputs.size(); ++i)
          out << "  " << r.check_outputs[i] << "\n";
        for (std::size_t i = s.loaded.normalize_outputs.size(); i < r.normalize_outputs.size();
             ++i)
          out << "  normalize: " << r.normalize_outputs[i] << "\n";
      } catch (const ParseError& e) {
        out << f << ": syntax error: " << show_span(e.span) << ": " << e.what() << "\n";
        code = kExitSyntaxError;
      } catch (const IoError& e) {
        out << f << ": io error: " << e.what() << "\n";
        code = kExitIoError;
      } catch (const std::exception& e) {
        out << f << ": error: " << e.what() << "\n";
        code = kExitTypeError;
      }
      return std::make_pair(code, out.str());
    }));
  }
  int code = kExitOk;
  for (auto& fu : futs) {
    auto [c, text] = fu.get();
    (c == kExitOk ? std::cout : std::cerr) << text;
    if (code == kExitOk) code = c;
  }
  return code;
}

int run_normalize(const CommonOpts& o, const std::string& file, const std::string& def) {
  Session s = open_session(o);
  Signature local = s.sig;
  local.thaw();
  WitnessTable table = s.table;
  LoadResult r = load_file(local, table, file, s.loaded);
  if (!def.empty()) {
    const SignatureEntry& e = local.get(def);
    if (!e.body) throw TypeError(TypeErrorKind::Other, "'" + def + "' is an axiom");
    Ctx ctx;
    std::cout << render(local, o.emit, normalize_at(local, ctx, *e.body, e.type_value)) << "\n";
  } else {
    for (std::size_t i = s.loaded.normalize_outputs.size(); i < r.normalize_outputs.size(); ++i)
      std::cout << r.normalize_outputs[i] << "\n";
  }
  return kExitOk;
}

int run_translate(const CommonOpts& o, const std::string& file, const std::string& def) {
  Session s = open_session(o);
  Signature local = s.sig;
  local.thaw();
  WitnessTable table = s.table;
  if (!file.empty()) load_file(local, table, file, s.loaded);
  Translator tr(local, table, translate_opts(o, TrustPolicy::Strict));
  std::string w = tr.materialize(def);
  const SignatureEntry& e = local.get(w);
  std::cout << def << " translates to " << w << "\n";
  if (e.body) std::cout << render(local, o.emit, *e.body) << "\n";
  std::cout << "  : " << render(local, o.emit, e.type) << "\n";
  return kExitOk;
}

int run_free(const CommonOpts& o, const std::string& file, const std::string& def,
             const std::string& recipe_s) {
  Session s = open_session(o);
  Signature local = s.sig;
  local.thaw();
  WitnessTable table = s.table;
  if (!file.empty()) load_file(local, table, file, s.loaded);
  FreeRecipe recipe;
  {
    std::istringstream in(recipe_s);
    std::string kind;
    in >> kind;
    if (kind == "loopop") {
      recipe.kind = FreeRecipe::LoopOp;
      if (!(in >> recipe.n >> recipe.k))
        throw ParseError(SourceSpan{"<recipe>", 0, 0}, "loopop needs two numerals");
    } else if (kind == "contembed") {
      recipe.kind = FreeRecipe::ContEmbed;
      if (!(in >> recipe.base_type))
        throw ParseError(SourceSpan{"<recipe>", 0, 0}, "contembed needs a type name");
    } else {
      throw ParseError(SourceSpan{"<recipe>", 0, 0}, "recipe must be loopop or contembed");
    }
  }
  FreeTheoremResult r = derive_free_theorem(local, table, recipe, def);
  std::cout << r.name << " : " << render(local, o.emit, r.statement) << "\n";
  std::cout << r.name << " := " << render(local, o.emit, r.proof) << "\n";
  return kExitOk;
}

int run_corpus(const CommonOpts& o) {
  Session s = open_session(o);
  CorpusReport rep = verify_all(s.sig, s.table, s.loaded);
  std::cout << "checked " << rep.checked << " entries (" << rep.axioms << " postulates), "
            << "translated " << rep.translated << "\n";
  std::cout << "trusted witnesses used:";
  for (const auto& t : rep.trusted_used) std::cout << " " << t;
  std::cout << "\npostulates:";
  for (const auto& t : rep.postulates) std::cout << " " << t;
  std::cout << "\n";
  for (const auto& f : rep.failures) std::cerr << "FAIL " << f << "\n";
  return rep.ok() ? kExitOk : kExitTypeError;
}

}  // namespace

int main(int argc, char** argv) {
  hott::install_term_printer();
  CLI::App app{"proof checker and parametricity translator for a small HoTT"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::vector<std::string> files;
  std::string def, recipe;

  CLI::App* c_check = app.add_subcommand("check", "type check .hott files");
  c_check->add_option("files", files, "input files")->required();
  add_common(c_check, opts);

  CLI::App* c_norm = app.add_subcommand("normalize", "normalize #normalize commands or a --def");
  c_norm->add_option("file", files, "input file")->expected(1)->required();
  c_norm->add_option("--def", def, "definition to normalize");
  add_common(c_norm, opts);

  CLI::App* c_tr = app.add_subcommand("translate", "emit and re-check a relational witness");
  c_tr->add_option("file", files, "input file (optional)")->expected(0, 1);
  c_tr->add_option("--def", def, "definition to translate")->required();
  add_common(c_tr, opts);

  CLI::App* c_free = app.add_subcommand("free", "derive a free theorem");
  c_free->add_option("file", files, "input file (optional)")->expected(0, 1);
  c_free->add_option("--def", def, "definition the theorem is about")->required();
  c_free->add_option("--recipe", recipe, "loopop N K | contembed TYPE")->required();
  add_common(c_free, opts);

  CLI::App* c_corpus = app.add_subcommand("corpus", "load the prelude and verify everything");
  add_common(c_corpus, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(c_check)) return run_check(opts, files);
    if (app.got_subcommand(c_norm)) return run_normalize(opts, files.at(0), def);
    if (app.got_subcommand(c_tr))
      return run_translate(opts, files.empty() ? "" : files[0], def);
    if (app.got_subcommand(c_free))
      return run_free(opts, files.empty() ? "" : files[0], def, recipe);
    if (app.got_subcommand(c_corpus)) return run_corpus(opts);
  } catch (const hott::ParseError& e) {
    std::cerr << "syntax error: " << hott::show_span(e.span) << ": " << e.what() << "\n";
    return kExitSyntaxError;
  } catch (const hott::TypeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTypeError;
  } catch (const hott::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitTypeError;
  }
  return kExitOk;
}
