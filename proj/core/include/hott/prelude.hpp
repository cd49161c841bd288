#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hott/signature.hpp"
#include "hott/translate.hpp"

namespace hott {

// The corpus is an ordered list of .hott files with expected entry counts,
// plus the exact set of postulated names.
struct ManifestEntry {
  std::string file;  // base name without extension
  int expected_entries = -1;
};

struct Manifest {
  std::vector<ManifestEntry> files;
  std::set<std::string> trusted;
};

Manifest load_manifest(const std::string& dir);

struct LoadResult {
  std::map<std::string, int> entries_per_file;
  std::vector<std::string> corpus_entries;           // in declaration order
  std::map<std::string, std::string> entry_file;
  std::vector<std::string> normalize_outputs;        // printed #normalize results
  std::vector<std::string> check_outputs;            // printed #check confirmations
};

// Parses, elaborates and checks every manifest file in order; processes
// directives; registers builtin and clause witnesses after each file.
// Errors carry a span inside the offending file.
LoadResult load_prelude(Signature& sig, WitnessTable& table, const std::string& dir,
                        const Manifest& manifest);

// Convenience: manifest + load from a directory (PARAM_HOTT_PRELUDE overrides
// the compiled-in default when `dir` is empty).
LoadResult load_prelude(Signature& sig, WitnessTable& table, std::string dir = "");

std::string default_prelude_dir();

struct CorpusReport {
  int checked = 0;     // corpus entries that re-check
  int translated = 0;  // non-axiom entries whose witness re-derives and re-checks
  int axioms = 0;
  std::set<std::string> trusted_used;  // trusted witnesses hit by translation
  std::set<std::string> postulates;    // entries without a body
  std::vector<std::string> failures;   // human-readable failure lines
  bool ok() const { return failures.empty(); }
};

// Re-checks every entry, re-derives every Derived witness, and runs the
// translation over every non-axiom corpus entry.
CorpusReport verify_all(Signature& sig, WitnessTable& table, const LoadResult& loaded);

// Loads a single user file (after the prelude) into the signature.
LoadResult load_file(Signature& sig, WitnessTable& table, const std::string& path,
                     LoadResult carry = {});

}  // namespace hott
