#include "udproj/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace udproj {

namespace {

bool same_tokenization(const Sentence& gold, const Sentence& system) {
  if (gold.tokens.size() != system.tokens.size()) return false;
  for (std::size_t i = 0; i < gold.tokens.size(); ++i)
    if (gold.tokens[i].form != system.tokens[i].form) return false;
  return true;
}

}  // namespace

RelationErrorTable relation_table(const Treebank& gold, const Treebank& system,
                                  const std::vector<SentenceProvenance>* provenance) {
  if (gold.sentences.size() != system.sentences.size())
    throw AnalysisError("sentence counts differ: " + std::to_string(gold.sentences.size()) +
                        " gold vs " + std::to_string(system.sentences.size()) + " system");

  std::map<int, const SentenceProvenance*> prov_by_ordinal;
  if (provenance)
    for (const SentenceProvenance& p : *provenance) prov_by_ordinal[p.ordinal] = &p;

  RelationErrorTable out;
  out.total_sentences = static_cast<int>(gold.sentences.size());

  std::map<std::string, RelationRow> rows;
  for (std::size_t k = 0; k < gold.sentences.size(); ++k) {
    const Sentence& g = gold.sentences[k];
    const Sentence& s = system.sentences[k];
    if (!same_tokenization(g, s)) {
      ++out.excluded_sentences;
      continue;
    }
    const SentenceProvenance* prov = nullptr;
    if (auto it = prov_by_ordinal.find(static_cast<int>(k) + 1); it != prov_by_ordinal.end())
      prov = it->second;

    for (std::size_t i = 0; i < g.tokens.size(); ++i) {
      const Token& gt = g.tokens[i];
      const Token& st = s.tokens[i];
      RelationRow& row = rows[gt.deprel];
      row.deprel = gt.deprel;
      ++row.total;
      ++out.included_gold_tokens;
      if (st.deprel == gt.deprel) {
        ++row.deprel_correct;
      } else {
        ++out.wrong_deprel_total;
        bool unmatched = (prov && i < prov->flags.size())
                             ? prov->flags[i] == TokenOrigin::UnmatchedFallback
                             : st.deprel == "_";
        if (unmatched) ++out.wrong_deprel_unmatched;
      }
      if (gt.head && st.head && *gt.head == *st.head) ++row.head_correct;
    }
  }

  long long sum = 0;
  for (auto& [name, row] : rows) {
    sum += row.total;
    out.rows.push_back(std::move(row));
  }
  assert(sum == out.included_gold_tokens);
  std::sort(out.rows.begin(), out.rows.end(), [](const RelationRow& a, const RelationRow& b) {
    if (a.total != b.total) return a.total > b.total;
    return a.deprel < b.deprel;
  });
  return out;
}

TableFormat table_format_from_name(std::string_view name) {
  if (name == "text") return TableFormat::Text;
  if (name == "tsv") return TableFormat::Tsv;
  throw AnalysisError("unknown table format \"" + std::string(name) + "\"");
}

namespace {

std::string render_text(const RelationErrorTable& t) {
  std::size_t name_w = 6;
  for (const RelationRow& r : t.rows) name_w = std::max(name_w, r.deprel.size());
  std::ostringstream out;
  auto pad_left = [](const std::string& v, std::size_t w) {
    return v.size() >= w ? v : std::string(w - v.size(), ' ') + v;
  };
  out << "deprel" << std::string(name_w - 6, ' ') << pad_left("total", 8)
      << pad_left("deprel_ok", 11) << pad_left("head_ok", 9) << "\n";
  for (const RelationRow& r : t.rows) {
    out << r.deprel << std::string(name_w - r.deprel.size(), ' ')
        << pad_left(std::to_string(r.total), 8)
        << pad_left(format_pct0(r.deprel_correct, r.total), 11)
        << pad_left(format_pct0(r.head_correct, r.total), 9) << "\n";
  }
  out << "\n";
  out << "excluded sentences: " << t.excluded_sentences << " of " << t.total_sentences << " ("
      << format_pct2(t.excluded_sentences, t.total_sentences) << "%)\n";
  out << "unmatched-token share of deprel errors: "
      << format_pct2(t.wrong_deprel_unmatched, t.wrong_deprel_total) << "%\n";
  return out.str();
}

std::string render_tsv(const RelationErrorTable& t) {
  std::ostringstream out;
  out << "# total_sentences\t" << t.total_sentences << "\n";
  out << "# excluded_sentences\t" << t.excluded_sentences << "\n";
  out << "# excluded_share\t" << format_pct2(t.excluded_sentences, t.total_sentences) << "\n";
  out << "# included_gold_tokens\t" << t.included_gold_tokens << "\n";
  out << "# wrong_deprel_total\t" << t.wrong_deprel_total << "\n";
  out << "# wrong_deprel_unmatched\t" << t.wrong_deprel_unmatched << "\n";
  out << "# unmatched_deprel_error_share\t"
      << format_pct2(t.wrong_deprel_unmatched, t.wrong_deprel_total) << "\n";
  out << "deprel\ttotal\tdeprel_correct\thead_correct\tdeprel_pct\thead_pct\n";
  for (const RelationRow& r : t.rows) {
    out << r.deprel << "\t" << r.total << "\t" << r.deprel_correct << "\t" << r.head_correct
        << "\t" << format_pct2(r.deprel_correct, r.total) << "\t"
        << format_pct2(r.head_correct, r.total) << "\n";
  }
  return out.str();
}

}  // namespace

std::string render_table(const RelationErrorTable& t, TableFormat format) {
  return format == TableFormat::Text ? render_text(t) : render_tsv(t);
}

RelationErrorTable parse_table_tsv(std::string_view text) {
  RelationErrorTable t;
  bool header_seen = false;
  std::size_t line_no = 0;
  for (const std::string& line : split(text, '\n')) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cols = split(line, '\t');
    if (line[0] == '#') {
      if (cols.size() < 2) continue;
      std::string key = cols[0].substr(2);
      long long v = 0;
      if (key == "total_sentences" && parse_uint(cols[1], v))
        t.total_sentences = static_cast<int>(v);
      else if (key == "excluded_sentences" && parse_uint(cols[1], v))
        t.excluded_sentences = static_cast<int>(v);
      else if (key == "included_gold_tokens" && parse_uint(cols[1], v))
        t.included_gold_tokens = v;
      else if (key == "wrong_deprel_total" && parse_uint(cols[1], v))
        t.wrong_deprel_total = v;
      else if (key == "wrong_deprel_unmatched" && parse_uint(cols[1], v))
        t.wrong_deprel_unmatched = v;
      continue;  // derived shares are recomputed from counts
    }
    if (!header_seen) {
      header_seen = true;  // column header line
      continue;
    }
    if (cols.size() < 4)
      throw AnalysisError("table line " + std::to_string(line_no) + ": expected >= 4 columns");
    RelationRow row;
    row.deprel = cols[0];
    long long total = 0, dc = 0, hc = 0;
    if (!parse_uint(cols[1], total) || !parse_uint(cols[2], dc) || !parse_uint(cols[3], hc))
      throw AnalysisError("table line " + std::to_string(line_no) + ": malformed counts");
    row.total = total;
    row.deprel_correct = dc;
    row.head_correct = hc;
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace udproj
