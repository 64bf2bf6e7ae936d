#pragma once

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "udproj/util.hpp"

namespace udproj {

class MorphError : public Error {
 public:
  using Error::Error;
};

// One candidate reading of a surface form.
struct Analysis {
  std::string lemma;
  std::string upos;  // universal tag, "X" when unknown

  bool operator==(const Analysis&) const = default;
};

// The 17-tag universal part-of-speech inventory.
bool is_universal_tag(std::string_view tag);

// Raw analyzer tag -> universal tag conversion table, loaded from a
// RAWTAG<TAB>UPOS file.
struct TagMap {
  std::map<std::string, std::string> rules;

  bool operator==(const TagMap&) const = default;
};

TagMap parse_tag_map(std::string_view text);
TagMap load_tag_map(const std::string& path);

// Surface form -> analyses in analyzer-priority order, raw tags already
// mapped to the universal set.
class MorphLexicon {
 public:
  void add(std::string form, Analysis a);
  const std::vector<Analysis>* lookup(const std::string& form) const;
  std::size_t size() const { return entries_.size(); }

  bool operator==(const MorphLexicon&) const = default;

 private:
  std::unordered_map<std::string, std::vector<Analysis>> entries_;
};

// Loads a FORM<TAB>LEMMA<TAB>RAWTAG file. Raw tags missing from the map fall
// back to "X" with a warning; lemmas containing analyzer join separators
// ('+' or '#') are flagged too.
MorphLexicon load_lexicon(const std::string& path, const TagMap& tag_map,
                          std::vector<std::string>* warnings = nullptr);
MorphLexicon parse_lexicon(std::string_view text, const TagMap& tag_map,
                           std::vector<std::string>* warnings = nullptr);

// First analysis of the form; retries case-folded on a miss, and falls back
// to (form, "X") for out-of-vocabulary forms. Never fails.
Analysis first_analysis(const MorphLexicon& lex, const std::string& form);

}  // namespace udproj
