#include "udproj/projection.hpp"

#include <algorithm>
#include <cstdlib>

namespace udproj {

std::string_view token_origin_name(TokenOrigin o) {
  switch (o) {
    case TokenOrigin::Matched: return "matched";
    case TokenOrigin::UnmatchedFallback: return "unmatched-fallback";
    case TokenOrigin::ForcedRoot: return "forced-root";
  }
  return "matched";
}

std::optional<TokenOrigin> token_origin_from_name(std::string_view name) {
  if (name == "matched") return TokenOrigin::Matched;
  if (name == "unmatched-fallback") return TokenOrigin::UnmatchedFallback;
  if (name == "forced-root") return TokenOrigin::ForcedRoot;
  return std::nullopt;
}

std::optional<ResolutionOrder> resolution_order_from_name(std::string_view name) {
  if (name == "filter-first") return ResolutionOrder::FilterFirst;
  if (name == "root-first") return ResolutionOrder::RootFirst;
  return std::nullopt;
}

std::string_view resolution_order_name(ResolutionOrder o) {
  return o == ResolutionOrder::FilterFirst ? "filter-first" : "root-first";
}

int SentenceProvenance::count(TokenOrigin o) const {
  return static_cast<int>(std::count(flags.begin(), flags.end(), o));
}

namespace {

// 0-based position of the unique root token.
int find_root_position(const Sentence& src) {
  int root_pos = -1;
  int roots = 0;
  for (std::size_t i = 0; i < src.tokens.size(); ++i) {
    const Token& t = src.tokens[i];
    if (!t.head) throw ProjectionError("source sentence is not fully parsed (unset head)");
    if (*t.head == 0) {
      root_pos = static_cast<int>(i);
      ++roots;
    }
  }
  if (roots == 0) throw ProjectionError("source sentence has no root");
  if (roots > 1) throw ProjectionError("source sentence has multiple roots");
  return root_pos;
}

bool tier_eligible(const std::string& tag) { return tag != "PUNCT" && tag != "X"; }

int scan_for_root(const std::string& root_upos, std::span<const std::string> tgt_upos) {
  // Reverse-order scan, one full pass per priority tier.
  for (int t = static_cast<int>(tgt_upos.size()) - 1; t >= 0; --t)
    if (tier_eligible(tgt_upos[t]) && tgt_upos[t] == root_upos) return t;
  for (int t = static_cast<int>(tgt_upos.size()) - 1; t >= 0; --t)
    if (tgt_upos[t] == "VERB") return t;
  for (int t = static_cast<int>(tgt_upos.size()) - 1; t >= 0; --t)
    if (tgt_upos[t] == "NOUN") return t;
  return 0;
}

}  // namespace

RootResolution resolve_root(const Sentence& src, const AlignmentGraph& g,
                            std::span<const std::string> tgt_upos) {
  if (static_cast<int>(tgt_upos.size()) != g.n_tgt)
    throw ProjectionError("target tag list length does not match graph dimension");
  if (g.n_tgt == 0) throw ProjectionError("target sentence is empty");

  const int r = find_root_position(src);

  std::vector<int> root_targets;
  for (auto [s, t] : g.edges)
    if (s == r) root_targets.push_back(t);

  int chosen;
  if (root_targets.size() == 1) {
    chosen = root_targets[0];
  } else if (root_targets.empty()) {
    chosen = scan_for_root(src.tokens[r].upos, tgt_upos);
  } else {
    chosen = root_targets[0];
    for (int t : root_targets)
      if (std::abs(t - r) < std::abs(chosen - r)) chosen = t;  // ties keep the smaller index
  }
  return RootResolution{r, chosen, remove_incident(g, r, chosen)};
}

ProjectionResult project_resolved(const ProjectionInput& in, int root_src, int root_tgt,
                                  const AlignmentGraph& remaining) {
  const int n_tgt = static_cast<int>(in.tgt_forms.size());
  if (static_cast<int>(in.tgt_analyses.size()) != n_tgt)
    throw ProjectionError("analysis list length does not match target token count");
  if (root_src < 0 || root_src >= static_cast<int>(in.src.tokens.size()) || root_tgt < 0 ||
      root_tgt >= n_tgt)
    throw ProjectionError("root pair is out of range");

  Matching m = maximum_matching(remaining);
  m.pairs.emplace_back(root_src, root_tgt);  // endpoints were cleared, no conflict
  std::sort(m.pairs.begin(), m.pairs.end());

  std::vector<int> tgt_of_src(in.src.tokens.size(), -1);
  std::vector<int> src_of_tgt(n_tgt, -1);
  for (auto [s, t] : m.pairs) {
    tgt_of_src[s] = t;
    src_of_tgt[t] = s;
  }

  ProjectionResult out;
  out.sentence.tokens.reserve(n_tgt);
  out.provenance.reserve(n_tgt);
  for (int t = 0; t < n_tgt; ++t) {
    Token tok;
    tok.id = t + 1;
    tok.form = in.tgt_forms[t];
    tok.lemma = in.tgt_analyses[t].lemma;
    tok.deps = "_";
    const int s = src_of_tgt[t];
    if (s >= 0) {
      const Token& src_tok = in.src.tokens[s];
      if (!src_tok.head)
        throw ProjectionError("source sentence is not fully parsed (unset head)");
      tok.upos = src_tok.upos;
      tok.xpos = src_tok.xpos;
      tok.feats = src_tok.feats;
      tok.deprel = src_tok.deprel;
      tok.misc = src_tok.misc;
      const int src_head = *src_tok.head;
      if (src_head == 0) {
        tok.head = 0;
      } else {
        const int h = tgt_of_src[src_head - 1];
        tok.head = (h >= 0) ? h + 1 : root_tgt + 1;
      }
      out.provenance.push_back(t == root_tgt ? TokenOrigin::ForcedRoot : TokenOrigin::Matched);
    } else {
      tok.upos = in.tgt_analyses[t].upos;
      tok.xpos = "_";
      tok.feats = "_";
      tok.misc = "_";
      tok.head = root_tgt + 1;
      tok.deprel = "_";
      out.provenance.push_back(TokenOrigin::UnmatchedFallback);
    }
    out.sentence.tokens.push_back(std::move(tok));
  }

  if (auto id = sent_id_comment(in.src)) out.sentence.comments.push_back(*id);
  out.sentence.comments.push_back("# text = " + join(in.tgt_forms, " "));

  if (!validate_tree(out.sentence).empty())
    throw ProjectionError("internal error: projected sentence is not a tree");
  return out;
}

ProjectionResult project_sentence(const ProjectionInput& in) {
  std::vector<std::string> tgt_upos;
  tgt_upos.reserve(in.tgt_analyses.size());
  for (const Analysis& a : in.tgt_analyses) tgt_upos.push_back(a.upos);
  RootResolution rr = resolve_root(in.src, in.graph, tgt_upos);
  return project_resolved(in, rr.src_pos, rr.tgt_pos, rr.remaining);
}

TreebankProjection project_treebank(const Treebank& src_tb,
                                    const std::vector<std::vector<std::string>>& tgt_sentences,
                                    const std::vector<AlignmentGraph>& alignments,
                                    const MorphLexicon& lexicon,
                                    const ProjectionOptions& options) {
  if (src_tb.sentences.size() != tgt_sentences.size() ||
      src_tb.sentences.size() != alignments.size())
    throw ProjectionError("input counts differ: " + std::to_string(src_tb.sentences.size()) +
                          " source sentences, " + std::to_string(tgt_sentences.size()) +
                          " target sentences, " + std::to_string(alignments.size()) +
                          " alignments");

  TreebankProjection out;
  for (std::size_t i = 0; i < src_tb.sentences.size(); ++i) {
    const Sentence& src = src_tb.sentences[i];
    try {
      ProjectionInput in;
      in.src = src;
      in.tgt_forms = tgt_sentences[i];
      for (const std::string& form : in.tgt_forms)
        in.tgt_analyses.push_back(first_analysis(lexicon, form));

      std::vector<std::string> src_upos, tgt_upos;
      src_upos.reserve(src.tokens.size());
      for (const Token& t : src.tokens) src_upos.push_back(t.upos);
      tgt_upos.reserve(in.tgt_analyses.size());
      for (const Analysis& a : in.tgt_analyses) tgt_upos.push_back(a.upos);

      const AlignmentGraph& g = alignments[i];
      if (g.n_src != static_cast<int>(src.tokens.size()) ||
          g.n_tgt != static_cast<int>(in.tgt_forms.size()))
        throw ProjectionError("alignment dimensions do not match token counts");

      ProjectionResult result;
      if (options.order == ResolutionOrder::FilterFirst) {
        in.graph = filter_by_pos(g, src_upos, tgt_upos);
        result = project_sentence(in);
      } else {
        RootResolution rr = resolve_root(src, g, tgt_upos);
        in.graph = filter_by_pos(rr.remaining, src_upos, tgt_upos);
        result = project_resolved(in, rr.src_pos, rr.tgt_pos, in.graph);
      }
      out.treebank.sentences.push_back(std::move(result.sentence));
      out.provenance.push_back({static_cast<int>(i) + 1, std::move(result.provenance)});
    } catch (const Error& e) {
      out.errors.push_back("sentence " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

std::string render_provenance_tsv(
    const std::vector<SentenceProvenance>& provenance,
    const std::vector<std::pair<std::string, std::string>>& metadata) {
  std::string out;
  for (const auto& [key, value] : metadata) out += "# " + key + "\t" + value + "\n";
  out += "sentence\ttoken\tflag\n";
  for (const SentenceProvenance& p : provenance) {
    for (std::size_t i = 0; i < p.flags.size(); ++i) {
      out += std::to_string(p.ordinal);
      out += '\t';
      out += std::to_string(i + 1);
      out += '\t';
      out += token_origin_name(p.flags[i]);
      out += '\n';
    }
  }
  return out;
}

std::vector<SentenceProvenance> parse_provenance_tsv(std::string_view text) {
  std::vector<SentenceProvenance> out;
  std::size_t line_no = 0;
  bool header_seen = false;
  for (const std::string& line : split(text, '\n')) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    std::vector<std::string> cols = split(line, '\t');
    long long ordinal = 0, token_id = 0;
    std::optional<TokenOrigin> origin;
    if (cols.size() != 3 || !parse_uint(cols[0], ordinal) || !parse_uint(cols[1], token_id) ||
        !(origin = token_origin_from_name(cols[2])))
      throw ProjectionError("provenance line " + std::to_string(line_no) + ": malformed row");
    if (out.empty() || out.back().ordinal != ordinal)
      out.push_back({static_cast<int>(ordinal), {}});
    if (token_id != static_cast<long long>(out.back().flags.size()) + 1)
      throw ProjectionError("provenance line " + std::to_string(line_no) +
                            ": token ids not sequential");
    out.back().flags.push_back(*origin);
  }
  return out;
}

}  // namespace udproj
