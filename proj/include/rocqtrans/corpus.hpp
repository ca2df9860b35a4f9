/*
Copyright (c) 2026 the rocqtrans developers. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace rocqtrans {

enum class Split { Valid, Test, Unspecified };

// One corpus entry: the three representations of a theorem statement.
// Statements are stored proof-free; extraction happens at load time.
struct TheoremSources {
  std::string id;
  std::string informal;
  std::string lean_statement;
  std::string isabelle_statement;
  Split split = Split::Unspecified;
};

struct LoadIssue {
  std::string id;
  std::string reason;
};

// Per-id reasons for exclusion. Campaign denominators stay explicit:
// excluded ids are reported, never silently dropped.
struct LoadReport {
  std::vector<LoadIssue> issues;

  // Plain-text list, one `id<TAB>reason` line per excluded id.
  std::string to_text() const;
};

struct Corpus {
  std::vector<TheoremSources> entries;  // lexicographic by id
  std::filesystem::path root;

  std::vector<std::string> ids() const;
  const TheoremSources* find(const std::string& id) const;
};

struct CorpusLoad {
  Corpus corpus;
  LoadReport report;
};

// Loads a corpus from root containing informal/, lean/, isabelle/
// subdirectories, one file per theorem per representation:
//   informal/<id>.txt  lean/<id>.lean  isabelle/<id>.thy
// An optional splits.txt at root carries `id<TAB>valid|test` lines.
// Ids missing a representation, or whose statement extraction fails,
// land in the load report. Throws ConfigError when root is missing.
CorpusLoad load_corpus(const std::filesystem::path& root);

// Returns the Lean declaration (theorem/lemma) with its proof stripped:
// the text is truncated immediately before the top-level `:=`, or before
// a top-level `by`/`sorry` when the proof is introduced without `:=`.
// Comments and attributes preceding the declaration are dropped.
// Throws ExtractionError when no declaration is found or delimiters are
// unbalanced before the proof introduction.
std::string extract_lean_statement(const std::string& source);

// Returns the Isabelle declaration through the end of its shows/statement
// clause, truncated before the first proof keyword (`proof`, `by`,
// `using`, `sorry`, `oops`) occurring outside quoted regions.
// Throws ExtractionError when no declaration is found.
std::string extract_isabelle_statement(const std::string& source);

}  // namespace rocqtrans
