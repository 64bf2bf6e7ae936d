#pragma once

#include <string>
#include <vector>

#include "udproj/conllu.hpp"
#include "udproj/projection.hpp"

namespace udproj {

class AnalysisError : public Error {
 public:
  using Error::Error;
};

// Per-relation correctness counts, keyed by the gold deprel with subtype.
struct RelationRow {
  std::string deprel;
  long long total = 0;
  long long deprel_correct = 0;  // exact string match, subtype included
  long long head_correct = 0;

  bool operator==(const RelationRow&) const = default;
};

struct RelationErrorTable {
  std::vector<RelationRow> rows;  // sorted by total descending, then name
  int total_sentences = 0;
  int excluded_sentences = 0;  // tokenization differs from gold
  long long included_gold_tokens = 0;
  long long wrong_deprel_total = 0;
  long long wrong_deprel_unmatched = 0;  // of those, unmatched-fallback tokens

  double excluded_share() const { return pct(excluded_sentences, total_sentences); }
  double unmatched_deprel_error_share() const {
    return pct(wrong_deprel_unmatched, wrong_deprel_total);
  }

  bool operator==(const RelationErrorTable&) const = default;
};

// Builds the per-relation breakdown. Sentences whose token form sequences
// differ from gold are excluded and counted; within included sentences head
// correctness is positional (identical tokenization makes span alignment and
// positional identity coincide). A token counts as unmatched via the
// provenance flags when given, else via the "_" system deprel marker.
RelationErrorTable relation_table(const Treebank& gold, const Treebank& system,
                                  const std::vector<SentenceProvenance>* provenance = nullptr);

enum class TableFormat { Text, Tsv };

// Throws AnalysisError on an unknown format name.
TableFormat table_format_from_name(std::string_view name);

std::string render_table(const RelationErrorTable& t, TableFormat format);

// Inverse of render_table(t, Tsv).
RelationErrorTable parse_table_tsv(std::string_view text);

}  // namespace udproj
