#pragma once

#include <span>
#include <string>
#include <vector>

#include "udproj/alignment.hpp"
#include "udproj/conllu.hpp"
#include "udproj/morph.hpp"

namespace udproj {

class ProjectionError : public Error {
 public:
  using Error::Error;
};

// How each projected token got its annotation.
enum class TokenOrigin { Matched, UnmatchedFallback, ForcedRoot };

std::string_view token_origin_name(TokenOrigin o);
std::optional<TokenOrigin> token_origin_from_name(std::string_view name);

struct RootResolution {
  int src_pos = 0;  // 0-based position of the source root
  int tgt_pos = 0;  // target position chosen to carry the root
  AlignmentGraph remaining;  // input graph with the pair's endpoints cleared
};

// Picks the target token that will carry the sentence root and removes its
// endpoints from the graph so the pair can be force-added to the matching:
//  - a single edge at the root decides directly;
//  - an unmatched root triggers a reverse-order scan of the target in four
//    priority tiers (same tag as the source root, VERB, NOUN, position 0);
//    PUNCT and X are skipped in the first three tiers;
//  - several edges keep the one with the smallest position distance to the
//    source root, ties toward the smaller target index.
// Throws ProjectionError when the source has zero or multiple roots or the
// target is empty.
RootResolution resolve_root(const Sentence& src, const AlignmentGraph& g,
                            std::span<const std::string> tgt_upos);

struct ProjectionInput {
  Sentence src;                         // fully parsed source sentence
  std::vector<std::string> tgt_forms;   // tokenized target sentence
  AlignmentGraph graph;                 // post-filtering alignment
  std::vector<Analysis> tgt_analyses;   // one per target form
};

struct ProjectionResult {
  Sentence sentence;  // target, fully annotated, passes validate_tree
  std::vector<TokenOrigin> provenance;  // one flag per target token
};

// Transfers every field except id/form/lemma from matched source tokens,
// remaps heads through the matching, and attaches unmatched target tokens to
// the root with an empty relation.
ProjectionResult project_sentence(const ProjectionInput& in);

// Same, but with the root already resolved (used when filtering runs after
// root resolution). `remaining` must not touch root_src/root_tgt.
ProjectionResult project_resolved(const ProjectionInput& in, int root_src, int root_tgt,
                                  const AlignmentGraph& remaining);

enum class ResolutionOrder { FilterFirst, RootFirst };

std::optional<ResolutionOrder> resolution_order_from_name(std::string_view name);
std::string_view resolution_order_name(ResolutionOrder o);

struct ProjectionOptions {
  ResolutionOrder order = ResolutionOrder::FilterFirst;
};

struct SentenceProvenance {
  int ordinal = 0;  // 1-based input sentence number
  std::vector<TokenOrigin> flags;

  int count(TokenOrigin o) const;
  bool operator==(const SentenceProvenance&) const = default;
};

struct TreebankProjection {
  Treebank treebank;  // projected sentences, input order, failures dropped
  std::vector<SentenceProvenance> provenance;  // parallel to treebank.sentences
  std::vector<std::string> errors;  // "sentence N: ..." for each failure
};

// Per-sentence PoS filtering plus projection over positionally corresponding
// inputs. Sentence-level failures are logged and skipped; processing
// continues.
TreebankProjection project_treebank(const Treebank& src_tb,
                                    const std::vector<std::vector<std::string>>& tgt_sentences,
                                    const std::vector<AlignmentGraph>& alignments,
                                    const MorphLexicon& lexicon,
                                    const ProjectionOptions& options = {});

// Provenance report: one "sentence<TAB>token<TAB>flag" row per token, with
// optional "# key<TAB>value" metadata lines recording run settings.
std::string render_provenance_tsv(
    const std::vector<SentenceProvenance>& provenance,
    const std::vector<std::pair<std::string, std::string>>& metadata = {});
std::vector<SentenceProvenance> parse_provenance_tsv(std::string_view text);

}  // namespace udproj
