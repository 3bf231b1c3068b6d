#include "gcone/model.hpp"

#include <algorithm>
#include <map>

#include "gcone/linalg.hpp"

namespace gcone {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  check(false, "unknown family");
  return '?';
}

Family family_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    case 'E': case 'e': return Family::E;
    case 'F': case 'f': return Family::F;
    case 'G': case 'g': return Family::G;
  }
  check(false, "unknown family letter");
  return Family::A;
}

std::string to_string(const ModelSpec& spec) {
  std::string s(1, family_letter(spec.family));
  s += std::to_string(spec.rank);
  if (spec.frozen_mode == FrozenMode::None) s += " (no frozen)";
  return s;
}

std::vector<Relation> primitive_relations(const ClusterModel& m) {
  std::vector<Relation> out;
  for (const Relation& r : m.relations())
    if (r.primitive()) out.push_back(r);
  return out;
}

namespace {

// Classic Bron–Kerbosch with pivoting on the compatibility-zero graph.
void bron_kerbosch(const std::vector<std::vector<bool>>& adj,
                   std::vector<int>& r, std::vector<int> p,
                   std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Pivot: vertex of P ∪ X with most neighbours in P.
  int pivot = -1;
  size_t best = 0;
  for (const auto* side : {&p, &x}) {
    for (int u : *side) {
      size_t cnt = 0;
      for (int v : p)
        if (adj[u][v]) ++cnt;
      if (pivot < 0 || cnt > best) {
        pivot = u;
        best = cnt;
      }
    }
  }
  std::vector<int> candidates;
  for (int v : p)
    if (pivot < 0 || !adj[pivot][v]) candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> p2, x2;
    for (int u : p)
      if (adj[v][u]) p2.push_back(u);
    for (int u : x)
      if (adj[v][u]) x2.push_back(u);
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_clusters(const ClusterModel& m) {
  const int nc = static_cast<int>(m.num_cluster());
  std::vector<std::vector<bool>> adj(nc, std::vector<bool>(nc, false));
  for (int i = 0; i < nc; ++i)
    for (int j = i + 1; j < nc; ++j) {
      const bool compatible = m.compat(i, j) == 0 && m.compat(j, i) == 0;
      adj[i][j] = adj[j][i] = compatible;
    }
  std::vector<int> all(nc);
  for (int i = 0; i < nc; ++i) all[i] = i;
  std::vector<std::vector<int>> cliques;
  std::vector<int> r;
  bron_kerbosch(adj, r, all, {}, cliques);
  for (auto& c : cliques) {
    std::sort(c.begin(), c.end());
    check(c.size() == m.rank(), "cluster of unexpected size");
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

IMat extended_exchange_matrix(const ClusterModel& m,
                              const std::vector<int>& cluster) {
  // Index the relations by exchange pair for quick lookup.
  std::map<std::pair<int, int>, const Relation*> by_pair;
  for (const Relation& r : m.relations()) {
    by_pair[{std::min(r.x1, r.x2), std::max(r.x1, r.x2)}] = &r;
  }
  IMat cols;
  for (int k : cluster) {
    // The in-cluster exchange at k swaps k for the unique cluster variable
    // compatible with everything in cluster \ {k} and exchangeable with k.
    const Relation* found = nullptr;
    for (size_t j = 0; j < m.num_cluster(); ++j) {
      const int cand = static_cast<int>(j);
      if (!m.exchangeable(k, cand)) continue;
      bool fits = true;
      for (int other : cluster) {
        if (other == k) continue;
        if (m.compat(cand, other) != 0 || m.compat(other, cand) != 0) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      auto it = by_pair.find({std::min(k, cand), std::max(k, cand)});
      check(it != by_pair.end(), "missing relation for exchangeable pair");
      check(found == nullptr, "in-cluster exchange partner not unique");
      found = it->second;
    }
    check(found != nullptr, "no in-cluster exchange partner");
    cols.push_back(sub(found->term1, found->term2));
  }
  // Present as a (num_vars × |cluster|) matrix.
  IMat mat(m.num_vars(), IVec(cluster.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (size_t v = 0; v < m.num_vars(); ++v) mat[v][c] = cols[c][v];
  return mat;
}

}  // namespace gcone
