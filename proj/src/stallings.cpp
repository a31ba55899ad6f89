#include "whp/stallings.hpp"

#include "whp/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace whp {

namespace {

struct WorkEdge {
  int source;
  int target;
  int label;
  FreeWord trace;
  bool alive = true;
};

// Identifies `gone` with `keep`. Potentials at `gone` are rewritten through g, the
// trace-word relating the two folded edges, so path expressions stay valid.
void merge_vertices(std::vector<WorkEdge>& edges, int keep, int gone, const FreeWord& g) {
  const FreeWord g_inv = g.inverse();
  for (WorkEdge& e : edges) {
    if (!e.alive) continue;
    if (e.source == gone) {
      e.source = keep;
      e.trace = g * e.trace;
    }
    if (e.target == gone) {
      e.target = keep;
      e.trace = e.trace * g_inv;
    }
  }
}

// Resolves one folding conflict between edges i (seen first) and j that share a
// vertex and a label. `outgoing` says whether they share their source.
void resolve(std::vector<WorkEdge>& edges, std::size_t i, std::size_t j, bool outgoing, int base) {
  WorkEdge& e1 = edges[i];
  WorkEdge& e2 = edges[j];
  const int w1 = outgoing ? e1.target : e1.source;
  const int w2 = outgoing ? e2.target : e2.source;
  if (w1 == w2) {
    e2.alive = false;
    return;
  }
  std::size_t kept = i, dropped = j;
  if (w2 == base) std::swap(kept, dropped);
  const WorkEdge& k = edges[kept];
  const WorkEdge& d = edges[dropped];
  const int keep = outgoing ? k.target : k.source;
  const int gone = outgoing ? d.target : d.source;
  const FreeWord g = outgoing ? k.trace.inverse() * d.trace : k.trace * d.trace.inverse();
  edges[dropped].alive = false;
  merge_vertices(edges, keep, gone, g);
}

}  // namespace

FoldedGraph fold(std::span<const FreeWord> generators, int rank) {
  const int k = static_cast<int>(generators.size());
  std::vector<WorkEdge> edges;
  int next_vertex = 1;
  for (int gi = 0; gi < k; ++gi) {
    const FreeWord& y = generators[static_cast<std::size_t>(gi)];
    if (y.rank() != rank) throw RankError("generator rank does not match ambient rank");
    if (y.is_identity()) continue;
    int from = 0;
    for (std::size_t p = 0; p < y.size(); ++p) {
      const bool last = p + 1 == y.size();
      const int to = last ? 0 : next_vertex++;
      const Letter l = y[p];
      FreeWord trace(k);
      if (last) trace = l > 0 ? FreeWord::generator(gi + 1, k) : FreeWord::generator(-(gi + 1), k);
      if (l > 0)
        edges.push_back({from, to, l, trace});
      else
        edges.push_back({to, from, -l, trace});
      from = to;
    }
  }

  // Fold until no vertex has two edges with the same label and direction.
  while (true) {
    std::map<std::pair<int, int>, std::size_t> seen;
    bool changed = false;
    for (std::size_t j = 0; j < edges.size() && !changed; ++j) {
      const WorkEdge& e = edges[j];
      if (!e.alive) continue;
      auto out_key = std::make_pair(e.source, e.label);
      auto in_key = std::make_pair(e.target, -e.label);
      if (auto it = seen.find(out_key); it != seen.end()) {
        resolve(edges, it->second, j, true, 0);
        changed = true;
      } else if (auto it2 = seen.find(in_key); it2 != seen.end()) {
        resolve(edges, it2->second, j, false, 0);
        changed = true;
      } else {
        seen.emplace(out_key, j);
        seen.emplace(in_key, j);
      }
    }
    if (!changed) break;
  }

  // Core: strip hanging trees, never the base.
  std::erase_if(edges, [](const WorkEdge& e) { return !e.alive; });
  while (true) {
    std::map<int, int> degree;
    for (const WorkEdge& e : edges) {
      ++degree[e.source];
      ++degree[e.target];
    }
    auto before = edges.size();
    std::erase_if(edges, [&](const WorkEdge& e) {
      return (e.source != 0 && degree[e.source] == 1) || (e.target != 0 && degree[e.target] == 1);
    });
    if (edges.size() == before) break;
  }

  // Canonical breadth-first numbering from the base.
  std::map<std::pair<int, int>, std::size_t> adjacency;
  for (std::size_t j = 0; j < edges.size(); ++j) {
    adjacency[{edges[j].source, edges[j].label}] = j;
    adjacency[{edges[j].target, -edges[j].label}] = j;
  }
  std::map<int, int> relabel{{0, 0}};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int l = 1; l <= rank; ++l) {
      for (int signed_label : {l, -l}) {
        auto it = adjacency.find({v, signed_label});
        if (it == adjacency.end()) continue;
        const WorkEdge& e = edges[it->second];
        const int w = signed_label > 0 ? e.target : e.source;
        if (relabel.emplace(w, static_cast<int>(relabel.size())).second) queue.push_back(w);
      }
    }
  }

  FoldedGraph g;
  g.rank_ = rank;
  g.generator_count_ = k;
  g.vertex_count_ = static_cast<int>(relabel.size());
  for (const WorkEdge& e : edges)
    g.edges_.push_back({relabel.at(e.source), relabel.at(e.target), e.label, e.trace});
  std::sort(g.edges_.begin(), g.edges_.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return std::tie(a.source, a.label, a.target) < std::tie(b.source, b.label, b.target);
  });
  return g;
}

std::string FoldedGraph::str() const {
  std::ostringstream os;
  for (const GraphEdge& e : edges_) os << e.source << " -x" << e.label << "-> " << e.target << '\n';
  return os.str();
}

bool operator==(const FoldedGraph& a, const FoldedGraph& b) {
  if (a.rank_ != b.rank_ || a.vertex_count_ != b.vertex_count_ || a.edges_.size() != b.edges_.size())
    return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const GraphEdge& x = a.edges_[i];
    const GraphEdge& y = b.edges_[i];
    if (x.source != y.source || x.target != y.target || x.label != y.label) return false;
  }
  return true;
}

int graph_rank(const FoldedGraph& g) {
  return static_cast<int>(g.edges().size()) - g.vertex_count() + 1;
}

std::optional<FreeWord> express(const FoldedGraph& g, const FreeWord& w) {
  if (w.rank() != g.rank()) throw RankError("word rank does not match graph rank");
  std::map<std::pair<int, int>, const GraphEdge*> adjacency;
  for (const GraphEdge& e : g.edges()) {
    adjacency[{e.source, e.label}] = &e;
    adjacency[{e.target, -e.label}] = &e;
  }
  int v = g.base();
  FreeWord product(g.generator_count());
  for (Letter l : w.letters()) {
    auto it = adjacency.find({v, l});
    if (it == adjacency.end()) return std::nullopt;
    const GraphEdge& e = *it->second;
    if (l > 0) {
      product = product * e.trace;
      v = e.target;
    } else {
      product = product * e.trace.inverse();
      v = e.source;
    }
  }
  if (v != g.base()) return std::nullopt;
  return product;
}

bool membership(const FoldedGraph& g, const FreeWord& w) { return express(g, w).has_value(); }

bool is_injective_endo(std::span<const FreeWord> images, int rank) {
  if (static_cast<int>(images.size()) != rank) throw RankError("expected one image per generator");
  return graph_rank(fold(images, rank)) == rank;
}

bool is_surjective_endo(std::span<const FreeWord> images, int rank) {
  if (static_cast<int>(images.size()) != rank) throw RankError("expected one image per generator");
  FoldedGraph g = fold(images, rank);
  return g.vertex_count() == 1 && static_cast<int>(g.edges().size()) == rank;
}

std::optional<FreeImages> invert_free_automorphism(std::span<const FreeWord> images, int rank) {
  if (static_cast<int>(images.size()) != rank) throw RankError("expected one image per generator");
  FoldedGraph g = fold(images, rank);
  if (g.vertex_count() != 1 || static_cast<int>(g.edges().size()) != rank) return std::nullopt;
  FreeImages inverse;
  for (int i = 1; i <= rank; ++i) inverse.push_back(*express(g, FreeWord::generator(i, rank)));
  return inverse;
}

}  // namespace whp
