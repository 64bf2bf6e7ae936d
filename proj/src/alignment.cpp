#include "udproj/alignment.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

namespace udproj {

bool AlignmentGraph::contains(int src_pos, int tgt_pos) const {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(src_pos, tgt_pos));
}

int AlignmentGraph::degree_src(int src_pos) const {
  auto lo = std::lower_bound(edges.begin(), edges.end(),
                             std::make_pair(src_pos, std::numeric_limits<int>::min()));
  auto hi = std::lower_bound(edges.begin(), edges.end(),
                             std::make_pair(src_pos + 1, std::numeric_limits<int>::min()));
  return static_cast<int>(hi - lo);
}

AlignmentGraph make_graph(int n_src, int n_tgt, std::vector<std::pair<int, int>> edges) {
  for (auto [s, t] : edges) {
    if (s < 0 || s >= n_src)
      throw AlignmentError("source index out of range: " + std::to_string(s) + "-" +
                           std::to_string(t));
    if (t < 0 || t >= n_tgt)
      throw AlignmentError("target index out of range: " + std::to_string(s) + "-" +
                           std::to_string(t));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return AlignmentGraph{n_src, n_tgt, std::move(edges)};
}

AlignmentGraph parse_pharaoh(std::string_view line, int n_src, int n_tgt) {
  std::vector<std::pair<int, int>> edges;
  for (const std::string& tok : split_ws(line)) {
    std::size_t dash = tok.find('-');
    long long s = 0, t = 0;
    if (dash == std::string::npos || !parse_uint(std::string_view(tok).substr(0, dash), s) ||
        !parse_uint(std::string_view(tok).substr(dash + 1), t))
      throw AlignmentError("malformed alignment pair \"" + tok + "\"");
    edges.emplace_back(static_cast<int>(s), static_cast<int>(t));
  }
  return make_graph(n_src, n_tgt, std::move(edges));
}

AlignmentGraph swapped(const AlignmentGraph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size());
  for (auto [s, t] : g.edges) edges.emplace_back(t, s);
  return make_graph(g.n_tgt, g.n_src, std::move(edges));
}

std::optional<MergeMode> merge_mode_from_name(std::string_view name) {
  if (name == "union") return MergeMode::Union;
  if (name == "intersection") return MergeMode::Intersection;
  return std::nullopt;
}

std::string_view merge_mode_name(MergeMode m) {
  return m == MergeMode::Union ? "union" : "intersection";
}

AlignmentGraph merge(const AlignmentGraph& a, const AlignmentGraph& b, MergeMode mode) {
  if (a.n_src != b.n_src || a.n_tgt != b.n_tgt)
    throw AlignmentError("cannot merge alignments with different dimensions");
  std::vector<std::pair<int, int>> edges;
  if (mode == MergeMode::Union) {
    std::set_union(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                   std::back_inserter(edges));
  } else {
    std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                          std::back_inserter(edges));
  }
  return AlignmentGraph{a.n_src, a.n_tgt, std::move(edges)};
}

AlignmentGraph filter_by_pos(const AlignmentGraph& g, std::span<const std::string> src_upos,
                             std::span<const std::string> tgt_upos) {
  if (static_cast<int>(src_upos.size()) != g.n_src)
    throw AlignmentError("source tag list length " + std::to_string(src_upos.size()) +
                         " does not match graph dimension " + std::to_string(g.n_src));
  if (static_cast<int>(tgt_upos.size()) != g.n_tgt)
    throw AlignmentError("target tag list length " + std::to_string(tgt_upos.size()) +
                         " does not match graph dimension " + std::to_string(g.n_tgt));

  std::vector<std::pair<int, int>> kept;
  kept.reserve(g.edges.size());
  std::size_t i = 0;
  while (i < g.edges.size()) {
    std::size_t j = i;
    while (j < g.edges.size() && g.edges[j].first == g.edges[i].first) ++j;
    if (j - i <= 1) {
      for (std::size_t k = i; k < j; ++k) kept.push_back(g.edges[k]);
    } else {
      std::size_t before = kept.size();
      for (std::size_t k = i; k < j; ++k)
        if (src_upos[g.edges[k].first] == tgt_upos[g.edges[k].second]) kept.push_back(g.edges[k]);
      if (kept.size() == before)
        for (std::size_t k = i; k < j; ++k) kept.push_back(g.edges[k]);
    }
    i = j;
  }
  return AlignmentGraph{g.n_src, g.n_tgt, std::move(kept)};
}

AlignmentGraph remove_incident(const AlignmentGraph& g, int src_pos, int tgt_pos) {
  std::vector<std::pair<int, int>> kept;
  kept.reserve(g.edges.size());
  for (auto e : g.edges)
    if (e.first != src_pos && e.second != tgt_pos) kept.push_back(e);
  return AlignmentGraph{g.n_src, g.n_tgt, std::move(kept)};
}

std::optional<int> Matching::target_of(int src_pos) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(),
                             std::make_pair(src_pos, std::numeric_limits<int>::min()));
  if (it != pairs.end() && it->first == src_pos) return it->second;
  return std::nullopt;
}

std::optional<int> Matching::source_of(int tgt_pos) const {
  for (auto [s, t] : pairs)
    if (t == tgt_pos) return s;
  return std::nullopt;
}

Matching maximum_matching(const AlignmentGraph& g) {
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<std::vector<int>> adj(g.n_src);
  for (auto [s, t] : g.edges) adj[s].push_back(t);  // ascending per source

  std::vector<int> match_src(g.n_src, -1), match_tgt(g.n_tgt, -1), dist(g.n_src, kInf);

  auto bfs = [&]() {
    std::queue<int> q;
    for (int u = 0; u < g.n_src; ++u) {
      if (match_src[u] < 0) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool reachable_free_target = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        int w = match_tgt[v];
        if (w < 0) {
          reachable_free_target = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return reachable_free_target;
  };

  std::function<bool(int)> dfs = [&](int u) {
    for (int v : adj[u]) {
      int w = match_tgt[v];
      if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_src[u] = v;
        match_tgt[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs()) {
    for (int u = 0; u < g.n_src; ++u)
      if (match_src[u] < 0) dfs(u);
  }

  Matching m;
  for (int u = 0; u < g.n_src; ++u)
    if (match_src[u] >= 0) m.pairs.emplace_back(u, match_src[u]);
  return m;
}

}  // namespace udproj
