/*
Copyright (c) 2026 the rocqtrans developers. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "rocqtrans/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rocqtrans/errors.hpp"
#include "rocqtrans/util.hpp"

namespace rocqtrans {

namespace {

// Shared lexical state for the Lean scanner. Lean block comments nest;
// `'` is an identifier character (foo'), so it is not treated as a
// character-literal delimiter.
struct LeanScanner {
  const std::string& src;
  std::size_t i = 0;
  int depth = 0;

  explicit LeanScanner(const std::string& s) : src(s) {}

  bool eof() const { return i >= src.size(); }

  // Advances over comments and strings; returns true when the current
  // position holds plain code.
  bool at_code() {
    if (eof()) return false;
    char c = src[i];
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') ++i;
      return false;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '-') {
      int nest = 0;
      while (i < src.size()) {
        if (src[i] == '/' && i + 1 < src.size() && src[i + 1] == '-') {
          ++nest;
          i += 2;
        } else if (src[i] == '-' && i + 1 < src.size() && src[i + 1] == '/') {
          --nest;
          i += 2;
          if (nest == 0) break;
        } else {
          ++i;
        }
      }
      return false;
    }
    if (c == '"') {
      ++i;
      while (i < src.size()) {
        if (src[i] == '\\' && i + 1 < src.size()) {
          i += 2;
        } else if (src[i] == '"') {
          ++i;
          break;
        } else {
          ++i;
        }
      }
      return false;
    }
    return true;
  }

  void track_depth() {
    char c = src[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
  }
};

// Isabelle: (* *) comments nest, double quotes delimit inner syntax.
struct IsabelleScanner {
  const std::string& src;
  std::size_t i = 0;

  explicit IsabelleScanner(const std::string& s) : src(s) {}

  bool eof() const { return i >= src.size(); }

  bool at_code() {
    if (eof()) return false;
    char c = src[i];
    if (c == '(' && i + 1 < src.size() && src[i + 1] == '*') {
      int nest = 0;
      while (i < src.size()) {
        if (src[i] == '(' && i + 1 < src.size() && src[i + 1] == '*') {
          ++nest;
          i += 2;
        } else if (src[i] == '*' && i + 1 < src.size() && src[i + 1] == ')') {
          --nest;
          i += 2;
          if (nest == 0) break;
        } else {
          ++i;
        }
      }
      return false;
    }
    if (c == '"') {
      ++i;
      while (i < src.size() && src[i] != '"') ++i;
      if (i < src.size()) ++i;  // closing quote
      return false;
    }
    return true;
  }
};

}  // namespace

std::string extract_lean_statement(const std::string& source) {
  // Locate the first theorem/lemma keyword at depth 0, outside comments
  // and strings. Everything before it (attributes, comments, other
  // declarations) is dropped.
  LeanScanner find(source);
  std::size_t decl = std::string::npos;
  while (!find.eof()) {
    if (!find.at_code()) continue;
    if (find.depth == 0 && (word_at(source, find.i, "theorem") ||
                            word_at(source, find.i, "lemma"))) {
      decl = find.i;
      break;
    }
    find.track_depth();
    ++find.i;
  }
  if (decl == std::string::npos) {
    throw ExtractionError("no theorem or lemma declaration found");
  }

  LeanScanner scan(source);
  scan.i = decl;
  std::size_t cut = std::string::npos;
  while (!scan.eof()) {
    if (!scan.at_code()) continue;
    if (scan.depth == 0) {
      if (source[scan.i] == ':' && scan.i + 1 < source.size() &&
          source[scan.i + 1] == '=') {
        cut = scan.i;
        break;
      }
      if (scan.i > decl && (word_at(source, scan.i, "by") ||
                            word_at(source, scan.i, "sorry"))) {
        cut = scan.i;
        break;
      }
    }
    if (source[scan.i] == ')' || source[scan.i] == ']' || source[scan.i] == '}') {
      if (scan.depth == 0) {
        throw ExtractionError("unbalanced delimiters before proof introduction");
      }
    }
    scan.track_depth();
    ++scan.i;
  }
  if (cut == std::string::npos) {
    if (scan.depth != 0) {
      throw ExtractionError("unbalanced delimiters before proof introduction");
    }
    cut = source.size();
  }
  return rtrim(std::string_view(source).substr(decl, cut - decl));
}

std::string extract_isabelle_statement(const std::string& source) {
  IsabelleScanner find(source);
  std::size_t decl = std::string::npos;
  while (!find.eof()) {
    if (!find.at_code()) continue;
    if (word_at(source, find.i, "theorem") || word_at(source, find.i, "lemma")) {
      decl = find.i;
      break;
    }
    ++find.i;
  }
  if (decl == std::string::npos) {
    throw ExtractionError("no theorem or lemma declaration found");
  }

  static const char* kProofKeywords[] = {"proof", "by", "using", "sorry", "oops"};
  IsabelleScanner scan(source);
  scan.i = decl;
  std::size_t cut = source.size();
  while (!scan.eof()) {
    if (!scan.at_code()) continue;
    if (scan.i > decl) {
      bool hit = false;
      for (const char* kw : kProofKeywords) {
        if (word_at(source, scan.i, kw)) {
          hit = true;
          break;
        }
      }
      if (hit) {
        cut = scan.i;
        break;
      }
    }
    ++scan.i;
  }
  return rtrim(std::string_view(source).substr(decl, cut - decl));
}

std::string LoadReport::to_text() const {
  std::string out;
  for (const auto& issue : issues) {
    out += issue.id;
    out += '\t';
    out += issue.reason;
    out += '\n';
  }
  return out;
}

std::vector<std::string> Corpus::ids() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.id);
  return out;
}

const TheoremSources* Corpus::find(const std::string& id) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), id,
      [](const TheoremSources& e, const std::string& key) { return e.id < key; });
  if (it == entries.end() || it->id != id) return nullptr;
  return &*it;
}

namespace {

std::set<std::string> stems_with_extension(const std::filesystem::path& dir,
                                           const std::string& ext) {
  std::set<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() == ext) out.insert(entry.path().stem().string());
  }
  return out;
}

std::map<std::string, Split> load_splits(const std::filesystem::path& root) {
  std::map<std::string, Split> out;
  auto path = root / "splits.txt";
  if (!std::filesystem::exists(path)) return out;
  std::string text = read_text_file(path);
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = trim(std::string_view(text).substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    std::string id = line.substr(0, tab);
    std::string tag = trim(line.substr(tab + 1));
    if (tag == "valid") out[id] = Split::Valid;
    if (tag == "test") out[id] = Split::Test;
  }
  return out;
}

}  // namespace

CorpusLoad load_corpus(const std::filesystem::path& root) {
  if (!std::filesystem::is_directory(root)) {
    throw ConfigError("corpus root is not a directory: " + root.string());
  }
  auto informal_dir = root / "informal";
  auto lean_dir = root / "lean";
  auto isabelle_dir = root / "isabelle";
  for (const auto& dir : {informal_dir, lean_dir, isabelle_dir}) {
    if (!std::filesystem::is_directory(dir)) {
      throw ConfigError("corpus root lacks subdirectory: " + dir.string());
    }
  }

  auto informal_ids = stems_with_extension(informal_dir, ".txt");
  auto lean_ids = stems_with_extension(lean_dir, ".lean");
  auto isabelle_ids = stems_with_extension(isabelle_dir, ".thy");
  auto splits = load_splits(root);

  std::set<std::string> all_ids;
  all_ids.insert(informal_ids.begin(), informal_ids.end());
  all_ids.insert(lean_ids.begin(), lean_ids.end());
  all_ids.insert(isabelle_ids.begin(), isabelle_ids.end());

  CorpusLoad result;
  result.corpus.root = root;
  for (const auto& id : all_ids) {
    std::string missing;
    if (!informal_ids.count(id)) missing += "missing-informal,";
    if (!lean_ids.count(id)) missing += "missing-lean,";
    if (!isabelle_ids.count(id)) missing += "missing-isabelle,";
    if (!missing.empty()) {
      missing.pop_back();
      result.report.issues.push_back({id, missing});
      continue;
    }

    TheoremSources sources;
    sources.id = id;
    try {
      sources.informal = read_text_file(informal_dir / (id + ".txt"));
    } catch (const std::exception& e) {
      result.report.issues.push_back({id, std::string("unreadable-informal: ") + e.what()});
      continue;
    }
    if (trim(sources.informal).empty()) {
      result.report.issues.push_back({id, "empty-informal"});
      continue;
    }

    std::string lean_source, isabelle_source;
    try {
      lean_source = read_text_file(lean_dir / (id + ".lean"));
    } catch (const std::exception& e) {
      result.report.issues.push_back({id, std::string("unreadable-lean: ") + e.what()});
      continue;
    }
    try {
      isabelle_source = read_text_file(isabelle_dir / (id + ".thy"));
    } catch (const std::exception& e) {
      result.report.issues.push_back({id, std::string("unreadable-isabelle: ") + e.what()});
      continue;
    }

    try {
      sources.lean_statement = extract_lean_statement(lean_source);
    } catch (const ExtractionError& e) {
      result.report.issues.push_back({id, std::string("lean-extraction: ") + e.what()});
      continue;
    }
    try {
      sources.isabelle_statement = extract_isabelle_statement(isabelle_source);
    } catch (const ExtractionError& e) {
      result.report.issues.push_back({id, std::string("isabelle-extraction: ") + e.what()});
      continue;
    }

    auto split_it = splits.find(id);
    if (split_it != splits.end()) sources.split = split_it->second;
    result.corpus.entries.push_back(std::move(sources));
  }
  return result;
}

}  // namespace rocqtrans
