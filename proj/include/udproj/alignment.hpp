#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "udproj/util.hpp"

namespace udproj {

class AlignmentError : public Error {
 public:
  using Error::Error;
};

// Many-to-many word alignment as a bipartite graph over 0-based token
// positions. Edges are kept sorted and unique, so iteration order (and with
// it every matching this module produces) is deterministic.
struct AlignmentGraph {
  int n_src = 0;
  int n_tgt = 0;
  std::vector<std::pair<int, int>> edges;

  bool contains(int src_pos, int tgt_pos) const;
  int degree_src(int src_pos) const;

  bool operator==(const AlignmentGraph&) const = default;
};

// Validates positions, sorts and deduplicates.
AlignmentGraph make_graph(int n_src, int n_tgt, std::vector<std::pair<int, int>> edges);

// One Pharaoh line: whitespace-separated "i-j" pairs, 0-based. Duplicates are
// dropped. Throws AlignmentError on malformed pairs or out-of-range indices.
AlignmentGraph parse_pharaoh(std::string_view line, int n_src, int n_tgt);

// Graph with source and target roles exchanged.
AlignmentGraph swapped(const AlignmentGraph& g);

enum class MergeMode { Union, Intersection };

std::optional<MergeMode> merge_mode_from_name(std::string_view name);
std::string_view merge_mode_name(MergeMode m);

// Combines two alignments of the same sentence pair (e.g. the two runs of a
// bidirectional aligner). Dimensions must agree.
AlignmentGraph merge(const AlignmentGraph& a, const AlignmentGraph& b, MergeMode mode);

// For every source position with two or more edges, keeps only edges whose
// endpoints carry equal tags; if none would survive, that position's original
// edges are restored. Positions with at most one edge are untouched.
AlignmentGraph filter_by_pos(const AlignmentGraph& g, std::span<const std::string> src_upos,
                             std::span<const std::string> tgt_upos);

// Drops every edge incident to src_pos or tgt_pos.
AlignmentGraph remove_incident(const AlignmentGraph& g, int src_pos, int tgt_pos);

// An injective partial map between the two sides: no position occurs twice.
struct Matching {
  std::vector<std::pair<int, int>> pairs;  // sorted by source position

  std::optional<int> target_of(int src_pos) const;
  std::optional<int> source_of(int tgt_pos) const;
  std::size_t size() const { return pairs.size(); }

  bool operator==(const Matching&) const = default;
};

// Maximum-cardinality matching via Hopcroft-Karp. Vertices are explored in
// ascending index order, so the result is reproducible across runs.
Matching maximum_matching(const AlignmentGraph& g);

}  // namespace udproj
