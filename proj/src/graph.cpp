#include "circulant/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace circ {

bool JumpSet::canonical() const {
  if (n < 3) return false;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 1 || 2 * r[i] > n) return false;
    if (i > 0 && r[i] <= r[i - 1]) return false;
  }
  return true;
}

bool JumpSet::connected() const {
  int64_t g = n;
  for (int64_t x : r) g = gcd(g, x);
  return g == 1;
}

bool JumpSet::contains(int64_t x) const {
  return std::binary_search(r.begin(), r.end(), x);
}

void JumpSet::validate(Connectivity mode) const {
  if (n < 3) throw ValidationError("order must be at least 3");
  if (!canonical())
    throw ValidationError("jump set " + format_set(r) +
                          " is not canonical for order " + std::to_string(n));
  if (mode == Connectivity::Strict && (r.empty() || !connected()))
    throw ValidationError("jump set " + format_set(r) +
                          " gives a disconnected graph of order " +
                          std::to_string(n));
}

std::vector<int64_t> symmetric_closure(int64_t n, const std::vector<int64_t>& r) {
  std::vector<int64_t> out;
  out.reserve(2 * r.size());
  for (int64_t x : r) {
    int64_t v = mod(x, n);
    out.push_back(v);
    out.push_back(mod(n - v, n));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SymmetricResidueSet SymmetricResidueSet::closure(const JumpSet& j) {
  return {j.n, symmetric_closure(j.n, j.r)};
}

JumpSet SymmetricResidueSet::reduce() const {
  return {n, reflexive_reduce(residues, n)};
}

bool CirculantGraph::adjacent(int64_t i, int64_t j) const {
  int64_t n = jumps_.n;
  int64_t d = mod(j - i, n);
  if (d == 0) return false;
  if (2 * d > n) d = n - d;
  return jumps_.contains(d);
}

int64_t CirculantGraph::degree() const {
  int64_t k = static_cast<int64_t>(jumps_.r.size());
  int64_t n = jumps_.n;
  bool half = n % 2 == 0 && jumps_.contains(n / 2);
  return half ? 2 * k - 1 : 2 * k;
}

int64_t CirculantGraph::edge_count(bool double_half) const {
  int64_t n = jumps_.n;
  int64_t k = static_cast<int64_t>(jumps_.r.size());
  bool half = n % 2 == 0 && jumps_.contains(n / 2);
  if (half && !double_half) return n * k - n / 2;
  return n * k;
}

std::vector<uint64_t> CirculantGraph::adjacency_bits() const {
  int64_t n = jumps_.n;
  if (n > 64) throw DomainError("bit adjacency needs n <= 64");
  std::vector<uint64_t> rows(n, 0);
  for (int64_t i = 0; i < n; ++i)
    for (int64_t r : jumps_.r) {
      rows[i] |= uint64_t{1} << mod(i + r, n);
      rows[i] |= uint64_t{1} << mod(i - r, n);
    }
  return rows;
}

std::string CirculantGraph::to_dot() const {
  static const char* palette[] = {"black", "red", "blue", "darkgreen", "orange",
                                  "purple", "brown", "cyan", "magenta", "gray"};
  int64_t n = jumps_.n;
  std::ostringstream os;
  os << "graph C" << n << " {\n";
  for (int64_t i = 0; i < n; ++i) os << "  v" << i << ";\n";
  for (std::size_t c = 0; c < jumps_.r.size(); ++c) {
    int64_t r = jumps_.r[c];
    const char* color = palette[c % std::size(palette)];
    int64_t limit = (2 * r == n) ? n / 2 : n;
    for (int64_t i = 0; i < limit; ++i)
      os << "  v" << i << " -- v" << mod(i + r, n) << " [color=" << color
         << ", label=\"" << r << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

CirculantGraph build(int64_t n, std::vector<int64_t> R, Connectivity mode) {
  JumpSet j{n, std::move(R)};
  j.validate(mode);
  return CirculantGraph(std::move(j));
}

int64_t degree(const CirculantGraph& g) { return g.degree(); }

PeriodicCycleDecomposition periodic_cycles(int64_t n, int64_t r) {
  if (n < 3 || r < 1 || 2 * r > n)
    throw DomainError("period must lie in [1, n/2]");
  PeriodicCycleDecomposition d;
  d.period = r;
  d.cycle_count = gcd(n, r);
  d.cycle_length = n / d.cycle_count;
  for (int64_t j = 0; j < d.cycle_count; ++j) {
    std::vector<int64_t> cyc;
    int64_t v = j;
    do {
      cyc.push_back(v);
      v = mod(v + r, n);
    } while (v != j);
    d.cycles.push_back(std::move(cyc));
  }
  return d;
}

MirrorReport mirror_class_check(int64_t n, int64_t m) {
  if (m <= 1 || n % m != 0) throw DomainError("need m > 1 dividing n");
  MirrorReport rep;
  for (int64_t x = 0; x < n; ++x) {
    ++rep.checked;
    int64_t j = x % m;
    if ((n - 1 - x) % m != m - 1 - j) {
      rep.holds = false;
      rep.counterexample = x;
      break;
    }
  }
  return rep;
}

bool symmetric(const std::vector<int64_t>& s, int64_t n) {
  std::vector<int64_t> a(s.begin(), s.end());
  std::sort(a.begin(), a.end());
  for (int64_t x : a)
    if (!std::binary_search(a.begin(), a.end(), mod(n - x, n))) return false;
  return true;
}

std::vector<int64_t> gcd_signature(int64_t n, const std::vector<int64_t>& R) {
  std::vector<int64_t> g;
  g.reserve(R.size());
  for (int64_t r : R) g.push_back(gcd(n, r));
  std::sort(g.begin(), g.end());
  return g;
}

std::string format_set(const std::vector<int64_t>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

std::vector<int64_t> parse_set(const std::string& text) {
  std::vector<int64_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view tok(text.data() + pos, end - pos);
    int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
      throw ValidationError("malformed jump list '" + text + "'");
    out.push_back(v);
    pos = end + 1;
  }
  if (out.empty()) throw ValidationError("empty jump list");
  return out;
}

}  // namespace circ
