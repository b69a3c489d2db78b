#include "circulant/census.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "circulant/kernels.hpp"
#include "circulant/oracle.hpp"
#include "circulant/type2.hpp"

namespace circ {

namespace {

using Mask = uint64_t;

// Lexicographic order of the ascending element lists.
bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  int d = __builtin_ctzll(a ^ b);
  if ((a >> d) & 1) return (b >> d) != 0;
  return (a >> d) == 0;
}

Mask half_mask(int n) { return kern::full_mask(n / 2 + 1) & ~Mask{1}; }

Mask fold(Mask sym, int n) { return sym & half_mask(n); }

Mask closure(Mask r, int n) { return r | kern::negate(r, n); }

Mask mul_mask(Mask r, int64_t x, int n) {
  Mask out = 0;
  while (r) {
    int64_t v = (x * __builtin_ctzll(r)) % n;
    if (2 * v > n) v = n - v;
    out |= Mask{1} << v;
    r &= r - 1;
  }
  return out;
}

Mask multiples(int n, int m) {
  Mask v = 0;
  for (int x = m; x < n; x += m) v |= Mask{1} << x;
  return v;
}

int64_t mask_gcd(Mask r, int64_t n) {
  int64_t g = n;
  while (r) {
    g = gcd(g, __builtin_ctzll(r));
    r &= r - 1;
  }
  return g;
}

std::vector<Mask> enumerate_masks(int n, const EnumerateOptions& opt) {
  int half = n / 2;
  std::vector<Mask> out;
  for (int k = std::max<int64_t>(opt.min_size, 0); k <= half; ++k) {
    std::vector<Mask> level;
    if (k == 0) {
      level.push_back(0);
    } else {
      // Gosper walk over k-subsets of {0..half-1}, shifted onto {1..half}.
      uint64_t v = (k == 64) ? ~uint64_t{0} : (uint64_t{1} << k) - 1;
      uint64_t limit = uint64_t{1} << half;
      while (v < limit) {
        Mask m = v << 1;
        if (!opt.connected_only || mask_gcd(m, n) == 1) level.push_back(m);
        uint64_t c = v & -v, r = v + c;
        if (r == 0) break;
        v = (((r ^ v) >> 2) / c) | r;
      }
    }
    std::sort(level.begin(), level.end(), lex_less);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

struct MaskPartner {
  int m, t;
  Mask S;
};

struct Record {
  Mask R = 0;
  Mask rep = 0;
  std::vector<MaskPartner> partners;
};

struct Context {
  int n;
  std::vector<int64_t> ms;
  std::vector<kern::SweepPlan> plans;
  std::vector<Mask> mult;
  std::vector<int64_t> unit_half;
  kern::SweepFn sweep;
  int t2_min_size = 3;
};

Record classify_one(const Context& cx, Mask R) {
  Record rec;
  rec.R = R;
  int n = cx.n;
  std::vector<Mask> orbit;
  orbit.reserve(cx.unit_half.size());
  rec.rep = R;
  for (int64_t x : cx.unit_half) {
    Mask y = mul_mask(R, x, n);
    orbit.push_back(y);
    if (lex_less(y, rec.rep)) rec.rep = y;
  }
  if (__builtin_popcountll(R) < cx.t2_min_size) return rec;
  Mask sym = closure(R, n);
  uint64_t images[64];
  uint8_t flags[64];
  for (std::size_t i = 0; i < cx.ms.size(); ++i) {
    if ((R & cx.mult[i]) == 0) continue;
    int m = static_cast<int>(cx.ms[i]);
    int count = n / m - 1;
    cx.sweep(cx.plans[i], sym, 1, count, images, flags);
    for (int k = 0; k < count; ++k) {
      if (!flags[k]) continue;
      Mask S = fold(images[k], n);
      if (S == R || std::find(orbit.begin(), orbit.end(), S) != orbit.end()) continue;
      bool seen = false;
      for (const auto& p : rec.partners)
        if (p.m == m && p.S == S) seen = true;
      if (!seen) rec.partners.push_back({m, k + 1, S});
    }
  }
  return rec;
}

std::vector<Record> classify_all(const Context& cx, const std::vector<Mask>& sets,
                                 int threads) {
  std::vector<Record> out(sets.size());
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (threads == 1 || sets.size() < 1024) {
    for (std::size_t i = 0; i < sets.size(); ++i) out[i] = classify_one(cx, sets[i]);
    return out;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (sets.size() + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    std::size_t lo = w * chunk, hi = std::min(sets.size(), lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) out[i] = classify_one(cx, sets[i]);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

int off_class(Mask R, Mask mult) { return __builtin_popcountll(R & ~mult); }

CensusCounts tally(const Context& cx, const std::vector<Record>& recs) {
  CensusCounts c;
  c.sets = static_cast<int64_t>(recs.size());
  std::set<Mask> reps;
  std::set<std::pair<Mask, Mask>> pairs, shape_pairs;
  std::map<int64_t, std::set<std::pair<Mask, Mask>>> by_m;
  std::set<std::pair<int64_t, std::vector<Mask>>> tuples, shape_tuples;
  for (const auto& r : recs) {
    reps.insert(r.rep);
    std::map<int, std::vector<Mask>> T;
    for (const auto& p : r.partners) {
      auto key = lex_less(r.R, p.S) ? std::make_pair(r.R, p.S) : std::make_pair(p.S, r.R);
      pairs.insert(key);
      by_m[p.m].insert(key);
      std::size_t mi = std::find(cx.ms.begin(), cx.ms.end(), p.m) - cx.ms.begin();
      bool shape = off_class(r.R, cx.mult[mi]) == p.m;
      if (shape) shape_pairs.insert(key);
      T[p.m].push_back(p.S);
    }
    for (auto& [m, v] : T) {
      v.push_back(r.R);
      std::sort(v.begin(), v.end());
      std::size_t mi = std::find(cx.ms.begin(), cx.ms.end(), m) - cx.ms.begin();
      tuples.insert({m, v});
      if (off_class(r.R, cx.mult[mi]) == m) shape_tuples.insert({m, v});
    }
  }
  c.classes = static_cast<int64_t>(reps.size());
  c.pairs = static_cast<int64_t>(pairs.size());
  c.shape_pairs = static_cast<int64_t>(shape_pairs.size());
  for (auto& [m, s] : by_m) c.pairs_by_m[m] = static_cast<int64_t>(s.size());
  for (auto& [m, v] : tuples) ++c.tuples[{m, static_cast<int64_t>(v.size())}];
  for (auto& [m, v] : shape_tuples) ++c.shape_tuples[{m, static_cast<int64_t>(v.size())}];
  return c;
}

Context make_context(int n) {
  Context cx;
  cx.n = n;
  for (int64_t m : cube_divisors(n)) {
    cx.ms.push_back(m);
    cx.plans.push_back(kern::make_plan(n, static_cast<int>(m)));
    cx.mult.push_back(multiples(n, static_cast<int>(m)));
  }
  for (int64_t x = 1; 2 * x <= n; ++x)
    if (gcd(n, x) == 1) cx.unit_half.push_back(x);
  cx.sweep = kern::theta_sweep();
  return cx;
}

std::vector<int64_t> elems(Mask v) { return kern::from_mask(v); }

}  // namespace

std::vector<std::vector<int64_t>> enumerate(int64_t n, const EnumerateOptions& opt) {
  if (n < 3) throw DomainError("order must be at least 3");
  if (n > kern::kMaxOrder) throw DomainError("enumeration limited to n <= 64");
  std::vector<std::vector<int64_t>> out;
  for (Mask m : enumerate_masks(static_cast<int>(n), opt)) out.push_back(elems(m));
  return out;
}

bool CensusReport::same_payload(const CensusReport& o) const {
  return n == o.n && domain == o.domain && ms == o.ms && classes == o.classes &&
         counts == o.counts && relaxed == o.relaxed && spot_checked == o.spot_checked &&
         spot_failed == o.spot_failed;
}

CensusReport run_census(int64_t n, const CensusOptions& opt) {
  if (n < 3) throw DomainError("order must be at least 3");
  if (n > opt.cap || n > kern::kMaxOrder)
    throw DomainError("census refuses order " + std::to_string(n) + " above cap " +
                      std::to_string(std::min<int64_t>(opt.cap, kern::kMaxOrder)));
  auto start = std::chrono::steady_clock::now();
  int ni = static_cast<int>(n);
  Context cx = make_context(ni);

  CensusReport rep;
  rep.n = n;
  rep.domain = opt.domain;
  rep.ms = cx.ms;

  std::vector<Mask> sets = enumerate_masks(ni, opt.domain);
  std::vector<Record> recs = classify_all(cx, sets, opt.threads);
  rep.counts = tally(cx, recs);

  std::map<Mask, std::vector<const Record*>, decltype(&lex_less)> groups(lex_less);
  for (const auto& r : recs) groups[r.rep].push_back(&r);
  for (auto& [rm, members] : groups) {
    CensusClass cls;
    cls.rep = elems(rm);
    std::sort(members.begin(), members.end(),
              [](const Record* a, const Record* b) { return lex_less(a->R, b->R); });
    for (const Record* r : members) {
      MemberEntry e;
      e.set = elems(r->R);
      for (int64_t x : cx.unit_half)
        if (mul_mask(rm, x, ni) == r->R) {
          e.x = x;
          break;
        }
      std::vector<MaskPartner> ps = r->partners;
      std::sort(ps.begin(), ps.end(), [](const MaskPartner& a, const MaskPartner& b) {
        if (a.m != b.m) return a.m < b.m;
        return lex_less(a.S, b.S);
      });
      for (const auto& p : ps) e.partners.push_back({p.m, p.t, elems(p.S)});
      cls.members.push_back(std::move(e));
    }
    rep.classes.push_back(std::move(cls));
  }

  if (opt.dual_count) {
    EnumerateOptions relaxed{false, 2};
    {
      Context rx = cx;
      rx.t2_min_size = 1;
      std::vector<Mask> rs = enumerate_masks(ni, relaxed);
      rep.relaxed = tally(rx, classify_all(rx, rs, opt.threads));
    }
  }

  if (opt.oracle_spot_checks > 0) {
    std::vector<std::pair<std::vector<int64_t>, std::vector<int64_t>>> all;
    for (const auto& cls : rep.classes)
      for (const auto& e : cls.members)
        for (const auto& p : e.partners)
          if (e.set < p.S) all.push_back({e.set, p.S});
    std::size_t want = static_cast<std::size_t>(opt.oracle_spot_checks);
    std::size_t step = all.size() <= want ? 1 : all.size() / want;
    for (std::size_t i = 0; i < all.size() && rep.spot_checked < opt.oracle_spot_checks;
         i += step) {
      ++rep.spot_checked;
      OracleResult o = brute_force_isomorphic(CirculantGraph({n, all[i].first}),
                                              CirculantGraph({n, all[i].second}));
      if (o.status != OracleStatus::Isomorphic) ++rep.spot_failed;
    }
  }

  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

int64_t verify_report(const CensusReport& r) {
  int64_t bad = 0;
  for (const auto& cls : r.classes)
    for (const auto& e : cls.members) {
      if (e.partners.empty()) continue;
      Type1Orbit orb = type1_orbit(r.n, e.set);
      for (const auto& p : e.partners) {
        ThetaImage img = theta_set({r.n, p.m, p.t}, e.set);
        if (!img.circulant || img.S != p.S || orb.contains(p.S) || p.S == e.set) ++bad;
      }
    }
  return bad;
}

namespace {

std::string counts_line(const char* tag, const CensusCounts& c) {
  std::ostringstream os;
  os << tag << " sets=" << c.sets << " classes=" << c.classes << " pairs=" << c.pairs
     << " shape_pairs=" << c.shape_pairs << "\n";
  for (const auto& [m, k] : c.pairs_by_m) os << tag << "_pairs_m " << m << " " << k << "\n";
  for (const auto& [key, k] : c.tuples)
    os << tag << "_tuples " << key.first << " " << key.second << " " << k << "\n";
  for (const auto& [key, k] : c.shape_tuples)
    os << tag << "_shape_tuples " << key.first << " " << key.second << " " << k << "\n";
  return os.str();
}

std::string tuple_field(const std::map<std::pair<int64_t, int64_t>, int64_t>& t) {
  std::string out;
  for (const auto& [key, k] : t) {
    if (!out.empty()) out += ';';
    out += "m" + std::to_string(key.first) + ":" + std::to_string(key.second) + "x" +
           std::to_string(k);
  }
  return out.empty() ? "none" : out;
}

}  // namespace

std::string serialize(const CensusReport& r) {
  std::ostringstream os;
  os << "circulant-census schema=" << kCensusSchema << "\n";
  os << "order " << r.n << "\n";
  os << "domain connected_only=" << (r.domain.connected_only ? 1 : 0)
     << " min_size=" << r.domain.min_size << "\n";
  os << "cube_divisors " << (r.ms.empty() ? "-" : format_set(r.ms)) << "\n";
  for (const auto& cls : r.classes) {
    os << "class " << format_set(cls.rep) << " orbit " << cls.members.size();
    for (const auto& e : cls.members) os << " " << format_set(e.set) << ":" << e.x;
    std::size_t np = 0;
    for (const auto& e : cls.members) np += e.partners.size();
    os << " partners " << np;
    for (const auto& e : cls.members)
      for (const auto& p : e.partners)
        os << " " << format_set(e.set) << ":" << p.m << ":" << p.t << ":" << format_set(p.S);
    os << "\n";
  }
  os << counts_line("strict", r.counts);
  if (r.relaxed) os << counts_line("relaxed", *r.relaxed);
  os << "spot checked=" << r.spot_checked << " failed=" << r.spot_failed << "\n";
  os << "end\n";
  return os.str();
}

std::string summary_row(const CensusReport& r) {
  std::ostringstream os;
  os << r.n << ", pairs=" << r.counts.pairs << ", shape_pairs=" << r.counts.shape_pairs
     << ", tuples=" << tuple_field(r.counts.tuples)
     << ", shape_tuples=" << tuple_field(r.counts.shape_tuples);
  if (r.relaxed) os << ", relaxed_pairs=" << r.relaxed->pairs;
  return os.str();
}

void persist(const CensusReport& r, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir + ": " + ec.message());
  auto write = [](const fs::path& p, const std::string& body) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + p.string() + " for writing");
    f << body;
    if (!f) throw std::runtime_error("write failed for " + p.string());
  };
  std::string n = std::to_string(r.n);
  write(fs::path(dir) / ("census_" + n + ".txt"), serialize(r));
  write(fs::path(dir) / ("summary_" + n + ".csv"),
        "# circulant-census summary schema=" + std::to_string(kCensusSchema) + "\n" +
            summary_row(r) + "\n");
}

namespace {

[[noreturn]] void bad(const std::string& path, int line, const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

std::vector<int64_t> set_or_empty(const std::string& s) {
  if (s == "-") return {};
  return parse_set(s);
}

int64_t num(const std::string& kv, const std::string& key) {
  if (kv.rfind(key + "=", 0) != 0) throw std::runtime_error("expected " + key);
  return std::stoll(kv.substr(key.size() + 1));
}

std::vector<std::string> split(const std::string& s, char c) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, c)) out.push_back(part);
  return out;
}

}  // namespace

CensusReport load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  CensusReport r;
  std::string line;
  int ln = 0;
  bool ended = false;
  auto counts_for = [&](const std::string& tag) -> CensusCounts& {
    if (tag == "strict") return r.counts;
    if (!r.relaxed) r.relaxed = CensusCounts{};
    return *r.relaxed;
  };
  try {
    while (std::getline(f, line)) {
      ++ln;
      std::istringstream is(line);
      std::string head;
      is >> head;
      if (ln == 1) {
        if (line != "circulant-census schema=" + std::to_string(kCensusSchema))
          bad(path, ln, "unsupported schema header");
        continue;
      }
      if (head == "order") {
        is >> r.n;
      } else if (head == "domain") {
        std::string a, b;
        is >> a >> b;
        r.domain.connected_only = num(a, "connected_only") != 0;
        r.domain.min_size = num(b, "min_size");
      } else if (head == "cube_divisors") {
        std::string s;
        is >> s;
        r.ms = set_or_empty(s);
      } else if (head == "class") {
        CensusClass cls;
        std::string rep, word, tok;
        std::size_t k = 0;
        is >> rep >> word >> k;
        if (word != "orbit") bad(path, ln, "expected orbit");
        cls.rep = parse_set(rep);
        for (std::size_t i = 0; i < k; ++i) {
          is >> tok;
          auto parts = split(tok, ':');
          if (parts.size() != 2) bad(path, ln, "bad orbit token");
          cls.members.push_back({parse_set(parts[0]), std::stoll(parts[1]), {}});
        }
        is >> word >> k;
        if (word != "partners") bad(path, ln, "expected partners");
        for (std::size_t i = 0; i < k; ++i) {
          is >> tok;
          auto parts = split(tok, ':');
          if (parts.size() != 4) bad(path, ln, "bad partner token");
          auto owner = parse_set(parts[0]);
          auto it = std::find_if(cls.members.begin(), cls.members.end(),
                                 [&](const MemberEntry& e) { return e.set == owner; });
          if (it == cls.members.end()) bad(path, ln, "partner owner not in orbit");
          it->partners.push_back({std::stoll(parts[1]), std::stoll(parts[2]), parse_set(parts[3])});
        }
        r.classes.push_back(std::move(cls));
      } else if (head == "strict" || head == "relaxed") {
        std::string a, b, c, d;
        is >> a >> b >> c >> d;
        CensusCounts& cc = counts_for(head);
        cc.sets = num(a, "sets");
        cc.classes = num(b, "classes");
        cc.pairs = num(c, "pairs");
        cc.shape_pairs = num(d, "shape_pairs");
      } else if (head.size() > 8 && head.find("_pairs_m") != std::string::npos) {
        int64_t m, k;
        is >> m >> k;
        counts_for(head.substr(0, head.find('_'))).pairs_by_m[m] = k;
      } else if (head.find("_shape_tuples") != std::string::npos) {
        int64_t m, s, k;
        is >> m >> s >> k;
        counts_for(head.substr(0, head.find('_'))).shape_tuples[{m, s}] = k;
      } else if (head.find("_tuples") != std::string::npos) {
        int64_t m, s, k;
        is >> m >> s >> k;
        counts_for(head.substr(0, head.find('_'))).tuples[{m, s}] = k;
      } else if (head == "spot") {
        std::string a, b;
        is >> a >> b;
        r.spot_checked = num(a, "checked");
        r.spot_failed = num(b, "failed");
      } else if (head == "end") {
        ended = true;
      } else {
        bad(path, ln, "unknown record '" + head + "'");
      }
      if (!is && head != "end") bad(path, ln, "truncated record");
    }
  } catch (const std::invalid_argument& e) {
    bad(path, ln, e.what());
  }
  if (!ended) bad(path, ln, "missing end marker");
  return r;
}

}  // namespace circ
