#pragma once

#include <string>
#include <utility>
#include <vector>

#include "udproj/conllu.hpp"

namespace udproj {

class EvalError : public Error {
 public:
  using Error::Error;
};

// Counts behind one precision/recall/F1 column triple. Percentages are
// derived from the counts so they stay exact rationals until rendering.
struct MetricScore {
  long long correct = 0;
  long long gold_total = 0;
  long long system_total = 0;

  double precision() const { return pct(correct, system_total); }
  double recall() const { return pct(correct, gold_total); }
  // harmonic mean of P and R; equals 2*correct/(gold_total+system_total)
  double f1() const { return pct(2 * correct, gold_total + system_total); }

  bool operator==(const MetricScore&) const = default;
};

struct EvalReport {
  MetricScore words;
  MetricScore lemmas;
  MetricScore upos;
  MetricScore uas;
  MetricScore las;
  int sentences_scored = 0;
  std::vector<int> excluded;  // 1-based ordinals of text-mismatched sentences

  bool operator==(const EvalReport&) const = default;
};

// True when the whitespace-stripped concatenations of the two form sequences
// are equal.
bool texts_match(const Sentence& gold, const Sentence& system);

// Pairs of 0-based token positions whose character spans (over the stripped
// text) coincide. Throws EvalError when the underlying texts differ.
std::vector<std::pair<int, int>> align_words(const Sentence& gold, const Sentence& system);

// Scores system against gold over Words, Lemmas, UPOS, UAS and LAS.
// Text-mismatched sentences are excluded and reported, not silently dropped.
// Throws EvalError on sentence-count mismatch.
EvalReport score(const Treebank& gold, const Treebank& system);

// Edit counts an annotator would face when correcting the system output.
struct EffortReport {
  long long arcs_to_remove = 0;
  long long arcs_to_add = 0;
  long long labels_to_fix = 0;
  long long tags_to_fix = 0;
  long long lemmas_to_fix = 0;

  bool operator==(const EffortReport&) const = default;
};

EffortReport effort_report(const EvalReport& r);

// Human-readable table (two-decimal percentages, half-up).
std::string render_eval_report(const EvalReport& r);
std::string render_effort_report(const EffortReport& e);
// Machine-readable: metric, precision, recall, f1, correct, gold, system.
std::string render_eval_tsv(const EvalReport& r);

}  // namespace udproj
