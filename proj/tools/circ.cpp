#include <CLI11.hpp>

#include <iostream>

#include "circulant/census.hpp"
#include "circulant/families.hpp"
#include "circulant/kernels.hpp"
#include "circulant/render.hpp"
#include "circulant/type2.hpp"

namespace {

enum Exit : int {
  kOk = 0,
  kNotIsomorphic = 1,
  kUnknown = 2,
  kDomain = 3,
  kIo = 4,
  kUsage = 64,
};

std::vector<int64_t> jumps(int64_t n, const std::string& text) {
  std::vector<int64_t> r = circ::parse_set(text);
  circ::JumpSet{n, r}.validate(circ::Connectivity::Permissive);
  return r;
}

void print_family(const circ::FamilyPair& f) {
  circ::Classification c = circ::classify_pair(f.order, f.R, f.S);
  std::cout << "order=" << f.order << " R=" << circ::format_set(f.R)
            << " S=" << circ::format_set(f.S) << " t=" << f.expected_t
            << " degenerate=" << f.degenerate << " theta_verified=" << f.theta_verified
            << " verdict=" << c.str() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circulant graph isomorphism toolkit"};
  app.require_subcommand(1);

  int64_t n = 0, m = 0, t = 0, s = 0, npow = 0, t_from = 0, t_to = 0, cap = circ::kCensusCap;
  std::string R, S, p, out, kind;
  int threads = 0;
  bool permissive = false, no_dual = false, scalar = false;
  int64_t min_size = 3, spot = 0;

  auto* classify = app.add_subcommand("classify", "classify a pair of jump sets");
  classify->add_option("n", n)->required();
  classify->add_option("R", R)->required();
  classify->add_option("S", S)->required();

  auto* theta = app.add_subcommand("theta", "image of R under theta_{n,m,t}");
  theta->add_option("n", n)->required();
  theta->add_option("m", m)->required();
  theta->add_option("t", t)->required();
  theta->add_option("R", R)->required();

  auto* vset = app.add_subcommand("vset", "theta images for every t");
  vset->add_option("n", n)->required();
  vset->add_option("m", m)->required();
  vset->add_option("R", R)->required();

  auto* orbit = app.add_subcommand("orbit", "Adam orbit of R");
  orbit->add_option("n", n)->required();
  orbit->add_option("R", R)->required();

  auto* t2set = app.add_subcommand("t2set", "Type-2 set of R w.r.t. m");
  t2set->add_option("n", n)->required();
  t2set->add_option("m", m)->required();
  t2set->add_option("R", R)->required();

  auto* family = app.add_subcommand("family", "build a family pair (kinds: 42, 43, pow2)");
  family->add_option("kind", kind)->required()->check(CLI::IsMember({"42", "43", "pow2"}));
  family->add_option("--n", n);
  family->add_option("--s", s)->required();
  family->add_option("--p", p, "comma-separated p_i for kind 43");
  family->add_option("--npow", npow, "exponent for kind pow2");

  auto* census = app.add_subcommand("census", "exhaustive census of one order");
  census->add_option("n", n)->required();
  census->add_option("--out", out, "directory for census_<n>.txt and summary_<n>.csv");
  census->add_option("--cap", cap, "largest order accepted");
  census->add_option("--threads", threads, "worker threads, 0 = all cores");
  census->add_option("--min-size", min_size);
  census->add_flag("--permissive", permissive, "include disconnected sets");
  census->add_flag("--no-dual", no_dual, "skip the relaxed-domain count");
  census->add_option("--spot", spot, "oracle spot checks on Type-2 pairs");
  census->add_flag("--scalar", scalar, "force the scalar sweep kernel");

  auto* render = app.add_subcommand("render", "write one SVG frame per t");
  render->add_option("n", n)->required();
  render->add_option("m", m)->required();
  render->add_option("R", R)->required();
  render->add_option("--from", t_from);
  render->add_option("--to", t_to);
  render->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) {
      circ::Classification c = circ::classify_pair(n, jumps(n, R), jumps(n, S));
      std::cout << c.str() << "\n";
      if (!c.note.empty()) std::cerr << c.note << "\n";
      if (c.kind == circ::Verdict::NotIsomorphic) return kNotIsomorphic;
      if (c.kind == circ::Verdict::Unknown) return kUnknown;
      return kOk;
    }
    if (*theta) {
      circ::ThetaImage img = circ::theta_set({n, m, t}, jumps(n, R));
      std::cout << (img.circulant ? circ::format_set(img.S) : "not circulant") << "\n";
      return kOk;
    }
    if (*vset) {
      for (const auto& e : circ::v_set(n, m, jumps(n, R)))
        std::cout << "t=" << e.t << " image=" << circ::format_set(e.result.image) << " "
                  << (e.result.circulant ? "circulant=" + circ::format_set(e.result.S)
                                         : std::string("not-circulant"))
                  << "\n";
      return kOk;
    }
    if (*orbit) {
      for (const auto& [set, x] : circ::type1_orbit(n, jumps(n, R)).witness)
        std::cout << circ::format_set(set) << " x=" << x << "\n";
      return kOk;
    }
    if (*t2set) {
      for (const auto& set : circ::type2_set(n, m, jumps(n, R)))
        std::cout << circ::format_set(set) << "\n";
      return kOk;
    }
    if (*family) {
      if (kind == "42") print_family(circ::family_42(n, s));
      else if (kind == "43") print_family(circ::family_43(n, s, circ::parse_set(p)));
      else print_family(circ::corollary_2n(npow, s));
      return kOk;
    }
    if (*census) {
      if (scalar) circ::kern::force_isa(circ::kern::Isa::Scalar);
      circ::CensusOptions opt;
      opt.domain = {!permissive, min_size};
      opt.threads = threads;
      opt.cap = cap;
      opt.dual_count = !no_dual;
      opt.oracle_spot_checks = spot;
      circ::CensusReport rep = circ::run_census(n, opt);
      std::cout << circ::summary_row(rep) << "\n";
      std::cerr << "kernel=" << circ::kern::isa_name(circ::kern::active_isa())
                << " elapsed_ms=" << rep.elapsed_ms << "\n";
      if (!out.empty()) circ::persist(rep, out);
      return kOk;
    }
    if (*render) {
      if (!render->count("--to")) t_to = t_from;
      for (const auto& path : circ::render_frames(n, jumps(n, R), m, t_from, t_to, out))
        std::cout << path << "\n";
      return kOk;
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}
