#include "circulant/oracle.hpp"

#include <algorithm>
#include <bit>

namespace circ {

namespace {

struct Search {
  int n;
  std::vector<uint64_t> a1, a2;
  std::vector<std::vector<uint8_t>> cn1, cn2;  // common-neighbour counts
  std::vector<int> order;
  std::vector<int> map, used;
  uint64_t nodes = 0, budget;
  bool exhausted = false;

  static std::vector<std::vector<uint8_t>> common(const std::vector<uint64_t>& a) {
    int n = static_cast<int>(a.size());
    std::vector<std::vector<uint8_t>> c(n, std::vector<uint8_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c[i][j] = static_cast<uint8_t>(std::popcount(a[i] & a[j]));
    return c;
  }

  bool fits(int v, int w) const {
    for (std::size_t k = 0; k < order.size(); ++k) {
      int u = order[k];
      if (map[u] < 0) break;
      int fu = map[u];
      if (((a1[u] >> v) & 1) != ((a2[fu] >> w) & 1)) return false;
      if (cn1[u][v] != cn2[fu][w]) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    int v = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used[w] || !fits(v, w)) continue;
      if (++nodes > budget) {
        exhausted = true;
        return false;
      }
      map[v] = w;
      used[w] = 1;
      if (extend(depth + 1)) return true;
      map[v] = -1;
      used[w] = 0;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

OracleResult brute_force_isomorphic(const CirculantGraph& g1, const CirculantGraph& g2,
                                    uint64_t budget) {
  if (g1.order() != g2.order()) throw DomainError("graphs differ in order");
  if (g1.order() > kOracleMaxOrder) throw DomainError("oracle limited to n <= 64");
  OracleResult res;
  if (g1.degree() != g2.degree()) return res;

  Search s;
  s.n = static_cast<int>(g1.order());
  s.a1 = g1.adjacency_bits();
  s.a2 = g2.adjacency_bits();
  s.cn1 = Search::common(s.a1);
  s.cn2 = Search::common(s.a2);
  s.budget = budget;

  // Breadth-first from 0, ascending labels within each layer.
  std::vector<int> seen(s.n, 0);
  s.order.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < s.order.size(); ++head) {
    int u = s.order[head];
    for (int w = 0; w < s.n; ++w)
      if (!seen[w] && ((s.a1[u] >> w) & 1)) {
        seen[w] = 1;
        s.order.push_back(w);
      }
  }
  for (int w = 0; w < s.n; ++w)
    if (!seen[w]) s.order.push_back(w);

  s.map.assign(s.n, -1);
  s.used.assign(s.n, 0);
  s.map[0] = 0;
  s.used[0] = 1;
  s.nodes = 1;
  bool found = s.extend(1);
  res.nodes = s.nodes;
  if (found) {
    res.status = OracleStatus::Isomorphic;
    res.witness.permutation.assign(s.map.begin(), s.map.end());
    res.witness.verified = verify_map(g1, g2, res.witness.permutation);
    if (!res.witness.verified) throw std::logic_error("oracle produced an invalid map");
  } else if (s.exhausted) {
    res.status = OracleStatus::BudgetExceeded;
  }
  return res;
}

bool verify_map(const CirculantGraph& g1, const CirculantGraph& g2,
                const std::vector<int64_t>& perm) {
  int64_t n = g1.order();
  if (g2.order() != n || static_cast<int64_t>(perm.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int64_t p : perm) {
    if (p < 0 || p >= n || hit[p]) return false;
    hit[p] = 1;
  }
  if (g1.edge_count() != g2.edge_count()) return false;
  for (int64_t i = 0; i < n; ++i)
    for (int64_t r : g1.jumps().r)
      if (!g2.adjacent(perm[i], perm[mod(i + r, n)])) return false;
  return true;
}

}  // namespace circ
