#include "udproj/morph.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace udproj {

namespace {

constexpr std::array<std::string_view, 17> kUniversalTags = {
    "ADJ",  "ADP",  "ADV",  "AUX",  "CCONJ", "DET",  "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X"};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MorphError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

bool is_universal_tag(std::string_view tag) {
  for (std::string_view t : kUniversalTags)
    if (t == tag) return true;
  return false;
}

TagMap parse_tag_map(std::string_view text) {
  TagMap map;
  std::size_t line_no = 0;
  for (const std::string& line : split(text, '\n')) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 2)
      throw MorphError("tag map line " + std::to_string(line_no) +
                       ": expected 2 tab-separated columns, got " + std::to_string(cols.size()));
    if (!is_universal_tag(cols[1]))
      throw MorphError("tag map line " + std::to_string(line_no) + ": \"" + cols[1] +
                       "\" is not a universal tag");
    map.rules[cols[0]] = cols[1];
  }
  return map;
}

TagMap load_tag_map(const std::string& path) { return parse_tag_map(read_file(path)); }

void MorphLexicon::add(std::string form, Analysis a) {
  entries_[std::move(form)].push_back(std::move(a));
}

const std::vector<Analysis>* MorphLexicon::lookup(const std::string& form) const {
  auto it = entries_.find(form);
  return it == entries_.end() ? nullptr : &it->second;
}

MorphLexicon parse_lexicon(std::string_view text, const TagMap& tag_map,
                           std::vector<std::string>* warnings) {
  MorphLexicon lex;
  std::size_t line_no = 0;
  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back("lexicon line " + std::to_string(line_no) + ": " + msg);
  };
  for (const std::string& line : split(text, '\n')) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 3)
      throw MorphError("lexicon line " + std::to_string(line_no) +
                       ": expected 3 tab-separated columns, got " + std::to_string(cols.size()));
    const std::string& form = cols[0];
    const std::string& lemma = cols[1];
    const std::string& raw_tag = cols[2];
    if (form.empty() || lemma.empty())
      throw MorphError("lexicon line " + std::to_string(line_no) + ": empty form or lemma");
    if (lemma.find('+') != std::string::npos || lemma.find('#') != std::string::npos)
      warn("lemma \"" + lemma + "\" contains an analyzer separator, kept verbatim");
    std::string upos;
    auto it = tag_map.rules.find(raw_tag);
    if (it == tag_map.rules.end()) {
      warn("raw tag \"" + raw_tag + "\" has no universal mapping, using X");
      upos = "X";
    } else {
      upos = it->second;
    }
    lex.add(form, Analysis{lemma, std::move(upos)});
  }
  return lex;
}

MorphLexicon load_lexicon(const std::string& path, const TagMap& tag_map,
                          std::vector<std::string>* warnings) {
  return parse_lexicon(read_file(path), tag_map, warnings);
}

Analysis first_analysis(const MorphLexicon& lex, const std::string& form) {
  if (const auto* list = lex.lookup(form)) return (*list)[0];
  std::string folded = fold_case(form);
  if (folded != form) {
    if (const auto* list = lex.lookup(folded)) return (*list)[0];
  }
  return Analysis{form, "X"};
}

}  // namespace udproj
