#include "hott/prelude.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hott/check.hpp"
#include "hott/errors.hpp"
#include "hott/free_theorems.hpp"
#include "hott/surface.hpp"

#ifndef PARAM_HOTT_DEFAULT_PRELUDE
#define PARAM_HOTT_DEFAULT_PRELUDE "prelude"
#endif

namespace hott {

std::string default_prelude_dir() {
  if (const char* e = std::getenv("PARAM_HOTT_PRELUDE")) {
    if (*e) return e;
  }
  return PARAM_HOTT_DEFAULT_PRELUDE;
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

[[noreturn]] void respan(const TypeError& e, const SpanMap& spans, const SourceSpan& decl_span) {
  TypeError out(e.kind, show_span(decl_span) + ": " + e.what());
  out.span = decl_span;
  if (e.at) {
    auto it = spans.find(static_cast<const Term*>(e.at));
    if (it != spans.end()) {
      out.span = it->second;
      out = TypeError(e.kind, show_span(it->second) + ": " + e.what());
      out.span = it->second;
    }
  }
  throw out;
}

void process_file(Signature& sig, WitnessTable& table, const std::string& display,
                  const std::string& text, LoadResult& res) {
  auto decls = parse_file(display, text);
  std::size_t before = sig.size();
  for (const auto& decl : decls) {
    SpanMap spans;
    try {
      std::visit(
          overloaded{
              [&](const DeclDef& d) {
                ElabScope sc;
                TermPtr ty = elaborate(sig, sc, d.type, &spans);
                TermPtr body = elaborate(sig, sc, d.body, &spans);
                check_decl(sig, d.name, ty, body);
              },
              [&](const DeclAxiom& d) {
                ElabScope sc;
                TermPtr ty = elaborate(sig, sc, d.type, &spans);
                check_decl(sig, d.name, ty, std::nullopt);
                if (d.witness) {
                  if (d.witness->trusted)
                    register_trusted_axiom(sig, table, d.name, d.witness->name);
                  else
                    register_derived_axiom(sig, table, d.name, d.witness->name);
                }
              },
              [&](const DeclCheck& d) {
                ElabScope sc;
                TermPtr ty = elaborate(sig, sc, d.type, &spans);
                TermPtr e = elaborate(sig, sc, d.expr, &spans);
                Ctx ctx;
                check_type(sig, ctx, ty);
                check(sig, ctx, e, eval_closed(sig, ty));
                res.check_outputs.push_back("checked : " + print_term_closed(sig, ty));
              },
              [&](const DeclNormalize& d) {
                ElabScope sc;
                TermPtr e = elaborate(sig, sc, d.expr, &spans);
                Ctx ctx;
                res.normalize_outputs.push_back(print_term_closed(sig, normalize(sig, ctx, e)));
              },
              [&](const DeclTranslate& d) {
                Translator tr(sig, table);
                tr.materialize(d.name);
              },
              [&](const DeclFree& d) { derive_free_theorem(sig, table, d.recipe, d.name); },
              [&](const DeclImport& d) {
                if (!res.entries_per_file.count(d.module))
                  fail(TypeErrorKind::UnboundName,
                       "import '" + d.module + "' names a module that is not loaded");
              },
          },
          decl.node);
    } catch (const TypeError& e) {
      if (e.span) throw;  // already annotated by a nested loader
      respan(e, spans, decl.span);
    }
  }
  for (std::size_t i = before; i < sig.size(); ++i) {
    const std::string& n = sig.entries()[i].name;
    res.corpus_entries.push_back(n);
    res.entry_file[n] = display;
  }
  res.entries_per_file[display] = static_cast<int>(sig.size() - before);
}

}  // namespace

Manifest load_manifest(const std::string& dir) {
  Manifest m;
  std::string text = slurp(dir + "/manifest.txt");
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    if (word == "file") {
      ManifestEntry e;
      ls >> e.file;
      if (!(ls >> e.expected_entries)) e.expected_entries = -1;
      m.files.push_back(e);
    } else if (word == "trusted") {
      std::string n;
      while (ls >> n) m.trusted.insert(n);
    } else {
      throw IoError("manifest: unknown directive '" + word + "'");
    }
  }
  return m;
}

LoadResult load_prelude(Signature& sig, WitnessTable& table, const std::string& dir,
                        const Manifest& manifest) {
  if (sig.size() != 0)
    fail(TypeErrorKind::Other, "load_prelude expects an empty signature");
  LoadResult res;
  for (const auto& mf : manifest.files) {
    std::string text = slurp(dir + "/" + mf.file + ".hott");
    process_file(sig, table, mf.file, text, res);
    register_builtin_witnesses(sig, table);
    // witness axioms synthesized at registration time belong to this file
    for (std::size_t i = res.corpus_entries.size(); i < sig.size(); ++i) {
      const std::string& n = sig.entries()[i].name;
      res.corpus_entries.push_back(n);
      res.entry_file[n] = mf.file;
    }
    int got = 0;
    for (const auto& [entry, file] : res.entry_file)
      if (file == mf.file) ++got;
    res.entries_per_file[mf.file] = got;
    if (mf.expected_entries >= 0 && got != mf.expected_entries)
      fail(TypeErrorKind::Other, "corpus file '" + mf.file + "' declares " +
                                     std::to_string(got) + " entries, manifest expects " +
                                     std::to_string(mf.expected_entries));
  }
  return res;
}

LoadResult load_prelude(Signature& sig, WitnessTable& table, std::string dir) {
  if (dir.empty()) dir = default_prelude_dir();
  return load_prelude(sig, table, dir, load_manifest(dir));
}

LoadResult load_file(Signature& sig, WitnessTable& table, const std::string& path,
                     LoadResult carry) {
  process_file(sig, table, path, slurp(path), carry);
  return carry;
}

CorpusReport verify_all(Signature& sig, WitnessTable& table, const LoadResult& loaded) {
  CorpusReport rep;
  Translator tr(sig, table);
  for (const std::string& name : loaded.corpus_entries) {
    const SignatureEntry entry = sig.get(name);  // copy; materialize appends
    // re-check the body against the type from scratch
    try {
      Ctx ctx;
      check_type(sig, ctx, entry.type);
      if (entry.body) check(sig, ctx, *entry.body, eval_closed(sig, entry.type));
      ++rep.checked;
    } catch (const std::exception& e) {
      rep.failures.push_back(loaded.entry_file.count(name)
                                 ? loaded.entry_file.at(name) + ": " + name + ": " + e.what()
                                 : name + ": " + e.what());
      continue;
    }
    if (!entry.body) {
      ++rep.axioms;
      rep.postulates.insert(name);
      continue;
    }
    // re-derive the Derived witness status where one is registered
    if (entry.witness.kind == WitnessStatus::Derived && sig.has(entry.witness.witness)) {
      try {
        TermPtr expect = tr.translate_type({}, entry.type);
        expect = t_app(t_app(expect, t_const(name)), t_const(name));
        Ctx ctx;
        TermPtr norm = normalize_type(sig, ctx, expect);
        if (!conv_terms(sig, ctx, sig.get(entry.witness.witness).type, norm))
          throw TypeError(TypeErrorKind::TypeMismatch,
                          "witness type drifted from the translated type");
      } catch (const std::exception& e) {
        rep.failures.push_back(name + ": witness re-derivation: " + e.what());
        continue;
      }
    }
    try {
      tr.materialize(name);
      ++rep.translated;
    } catch (const std::exception& e) {
      rep.failures.push_back(name + ": translation: " + e.what());
    }
  }
  rep.trusted_used = tr.trusted_used();
  return rep;
}

}  // namespace hott
