#pragma once
#include <optional>
#include <string>
#include <vector>

#include "pstab/constructions.hpp"
#include "pstab_cli/report.hpp"

namespace pstab::cli {

// Check names understood by the corpus runner.
const std::vector<std::string>& corpus_checks();

struct Expectation {
  std::string check;
  Json value;
  std::string basis;  // published | derived | trivial
};

struct CorpusEntry {
  std::string name;
  std::optional<Recipe> recipe;
  std::string group_path;  // used when recipe is absent; relative to the suite file
  std::uint64_t p = 0;
  std::vector<Expectation> expected;
};

struct Suite {
  std::string name;
  std::string base_dir;
  std::vector<CorpusEntry> entries;
};

// Suite document, format 1. Throws ParseError on malformed input.
Suite parse_suite(const std::string& text, const std::string& base_dir);
Suite load_suite(const std::string& path);
// "default" names the suite shipped in data/; anything else is a path.
std::string resolve_suite_path(const std::string& name);

Recipe parse_recipe(const Json& j);
// "kind:p=3,q=13" or "classical:family=PSL,n=3,q=4".
Recipe parse_recipe_string(const std::string& s);
Json recipe_json(const Recipe& r);

struct EntryResult {
  Json report;
  bool ok = true;
  bool cap_hit = false;
};
EntryResult run_entry(const Suite& s, const CorpusEntry& e, bool timing);

struct SuiteResult {
  Json report;
  std::size_t failed = 0;
};
// Entries run on `threads` workers; results are placed by entry index.
SuiteResult run_suite(const Suite& s, unsigned threads, bool timing);

}  // namespace pstab::cli
