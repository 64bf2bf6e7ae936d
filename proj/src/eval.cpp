#include "udproj/eval.hpp"

#include <sstream>

namespace udproj {

namespace {

struct Span {
  std::size_t start;
  std::size_t end;
};

// Token spans over the concatenation of whitespace-stripped forms.
std::vector<Span> token_spans(const Sentence& s) {
  std::vector<Span> spans;
  spans.reserve(s.tokens.size());
  std::size_t offset = 0;
  for (const Token& t : s.tokens) {
    std::size_t len = strip_ws(t.form).size();
    spans.push_back({offset, offset + len});
    offset += len;
  }
  return spans;
}

std::string stripped_text(const Sentence& s) {
  std::string out;
  for (const Token& t : s.tokens) out += strip_ws(t.form);
  return out;
}

}  // namespace

bool texts_match(const Sentence& gold, const Sentence& system) {
  return stripped_text(gold) == stripped_text(system);
}

std::vector<std::pair<int, int>> align_words(const Sentence& gold, const Sentence& system) {
  if (!texts_match(gold, system))
    throw EvalError("underlying texts differ, sentence cannot be aligned");
  std::vector<Span> gs = token_spans(gold);
  std::vector<Span> ss = token_spans(system);
  std::vector<std::pair<int, int>> pairs;
  std::size_t i = 0, j = 0;
  while (i < gs.size() && j < ss.size()) {
    if (gs[i].start == ss[j].start && gs[i].end == ss[j].end) {
      pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      ++i;
      ++j;
    } else if (gs[i].end <= ss[j].end) {
      ++i;
    } else {
      ++j;
    }
  }
  return pairs;
}

EvalReport score(const Treebank& gold, const Treebank& system) {
  if (gold.sentences.size() != system.sentences.size())
    throw EvalError("sentence counts differ: " + std::to_string(gold.sentences.size()) +
                    " gold vs " + std::to_string(system.sentences.size()) + " system");

  EvalReport r;
  for (std::size_t k = 0; k < gold.sentences.size(); ++k) {
    const Sentence& g = gold.sentences[k];
    const Sentence& s = system.sentences[k];
    if (!texts_match(g, s)) {
      r.excluded.push_back(static_cast<int>(k) + 1);
      continue;
    }
    ++r.sentences_scored;
    const long long ng = static_cast<long long>(g.tokens.size());
    const long long ns = static_cast<long long>(s.tokens.size());
    for (MetricScore* m : {&r.words, &r.lemmas, &r.upos, &r.uas, &r.las}) {
      m->gold_total += ng;
      m->system_total += ns;
    }

    std::vector<std::pair<int, int>> pairs = align_words(g, s);
    r.words.correct += static_cast<long long>(pairs.size());

    // gold position -> aligned system position
    std::vector<int> sys_of_gold(g.tokens.size(), -1);
    for (auto [gi, si] : pairs) sys_of_gold[gi] = si;

    for (auto [gi, si] : pairs) {
      const Token& gt = g.tokens[gi];
      const Token& st = s.tokens[si];
      if (gt.lemma == st.lemma) ++r.lemmas.correct;
      if (gt.upos == st.upos) ++r.upos.correct;

      bool head_ok = false;
      if (gt.head && st.head) {
        if (*gt.head == 0) {
          head_ok = (*st.head == 0);
        } else if (*st.head != 0) {
          head_ok = (sys_of_gold[*gt.head - 1] == *st.head - 1);
        }
      }
      if (head_ok) {
        ++r.uas.correct;
        if (gt.deprel == st.deprel) ++r.las.correct;
      }
    }
  }
  return r;
}

EffortReport effort_report(const EvalReport& r) {
  EffortReport e;
  e.arcs_to_remove = r.uas.system_total - r.uas.correct;
  e.arcs_to_add = r.uas.gold_total - r.uas.correct;
  e.labels_to_fix = r.uas.correct - r.las.correct;
  e.tags_to_fix = r.words.correct - r.upos.correct;
  e.lemmas_to_fix = r.words.correct - r.lemmas.correct;
  return e;
}

namespace {

void render_metric_row(std::ostringstream& out, std::string_view name, const MetricScore& m) {
  auto pad = [](std::string v, std::size_t w) {
    return v.size() >= w ? v : std::string(w - v.size(), ' ') + v;
  };
  out << name << std::string(10 - name.size(), ' ') << " |"
      << pad(format_pct2(m.correct, m.system_total), 10) << " |"
      << pad(format_pct2(m.correct, m.gold_total), 10) << " |"
      << pad(format_pct2(2 * m.correct, m.gold_total + m.system_total), 10) << "\n";
}

constexpr std::string_view kMetricNames[5] = {"Words", "Lemmas", "UPOS", "UAS", "LAS"};

std::vector<const MetricScore*> metric_list(const EvalReport& r) {
  return {&r.words, &r.lemmas, &r.upos, &r.uas, &r.las};
}

}  // namespace

std::string render_eval_report(const EvalReport& r) {
  std::ostringstream out;
  out << "Metric     | Precision |    Recall |  F1 Score\n";
  out << "-----------+-----------+-----------+----------\n";
  auto metrics = metric_list(r);
  for (std::size_t i = 0; i < metrics.size(); ++i)
    render_metric_row(out, kMetricNames[i], *metrics[i]);
  out << "\n";
  out << "sentences scored: " << r.sentences_scored << "\n";
  out << "sentences excluded (text mismatch): " << r.excluded.size();
  if (!r.excluded.empty()) {
    out << " [";
    for (std::size_t i = 0; i < r.excluded.size(); ++i) out << (i ? ", " : "") << r.excluded[i];
    out << "]";
  }
  out << "\n";
  return out.str();
}

std::string render_effort_report(const EffortReport& e) {
  std::ostringstream out;
  out << "Estimated correction effort:\n";
  out << "  arcs to remove:   " << e.arcs_to_remove << "\n";
  out << "  arcs to add:      " << e.arcs_to_add << "\n";
  out << "  labels to fix:    " << e.labels_to_fix << "\n";
  out << "  UPOS tags to fix: " << e.tags_to_fix << "\n";
  out << "  lemmas to fix:    " << e.lemmas_to_fix << "\n";
  return out.str();
}

std::string render_eval_tsv(const EvalReport& r) {
  std::ostringstream out;
  out << "metric\tprecision\trecall\tf1\tcorrect\tgold_total\tsystem_total\n";
  auto metrics = metric_list(r);
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    const MetricScore& m = *metrics[i];
    out << kMetricNames[i] << "\t" << format_pct2(m.correct, m.system_total) << "\t"
        << format_pct2(m.correct, m.gold_total) << "\t"
        << format_pct2(2 * m.correct, m.gold_total + m.system_total) << "\t" << m.correct << "\t"
        << m.gold_total << "\t" << m.system_total << "\n";
  }
  return out.str();
}

}  // namespace udproj
