#include "circulant/render.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

namespace circ {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                          "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

constexpr double kSize = 600, kCenter = 300, kRadius = 240;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::pair<double, double> corner(int64_t c, int64_t n) {
  double a = 2 * std::numbers::pi * static_cast<double>(c) / static_cast<double>(n);
  return {kCenter + kRadius * std::sin(a), kCenter - kRadius * std::cos(a)};
}

}  // namespace

std::vector<int64_t> frame_corners(const FrameSpec& f) {
  ThetaParams p{f.n, f.m, f.t};
  p.validate();
  std::vector<int64_t> out(f.n);
  for (int64_t x = 0; x < f.n; ++x) out[x] = theta_point(p, x);
  return out;
}

std::string frame_caption(const FrameSpec& f) {
  ThetaImage img = theta_set({f.n, f.m, f.t}, f.R);
  return img.circulant ? "circulant: " + format_set(img.S) : "not circulant";
}

std::string render_svg(const FrameSpec& f) {
  JumpSet{f.n, f.R}.validate(Connectivity::Permissive);
  std::vector<int64_t> pos = frame_corners(f);
  std::string caption = frame_caption(f);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\""
     << kSize + 60 << "\" viewBox=\"0 0 " << kSize << " " << kSize + 60 << "\">\n";
  os << "<title>C" << f.n << "(" << format_set(f.R) << ") m=" << f.m << " t=" << f.t
     << "</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g id=\"polygon\" fill=\"none\" stroke=\"#dddddd\">\n<polygon points=\"";
  for (int64_t c = 0; c < f.n; ++c) {
    auto [x, y] = corner(c, f.n);
    os << (c ? " " : "") << fmt(x) << "," << fmt(y);
  }
  os << "\"/>\n</g>\n";
  for (std::size_t k = 0; k < f.R.size(); ++k) {
    int64_t r = f.R[k];
    os << "<g id=\"jump-" << r << "\" stroke=\"" << kPalette[k % std::size(kPalette)]
       << "\" stroke-width=\"1\">\n";
    int64_t limit = 2 * r == f.n ? f.n / 2 : f.n;
    for (int64_t i = 0; i < limit; ++i) {
      auto [x1, y1] = corner(pos[i], f.n);
      auto [x2, y2] = corner(pos[mod(i + r, f.n)], f.n);
      os << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
         << "\" y2=\"" << fmt(y2) << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "<g id=\"vertices\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int64_t v = 0; v < f.n; ++v) {
    auto [x, y] = corner(pos[v], f.n);
    bool fixed = v % f.m == 0;
    os << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"5\" class=\"gamma-"
       << v % f.m << "\" fill=\"" << (fixed ? "black" : "white")
       << "\" stroke=\"black\" data-vertex=\"" << v << "\" data-corner=\"" << pos[v]
       << "\"/>\n";
    auto [lx, ly] = corner(pos[v], f.n);
    double dx = (lx - kCenter) * 0.09, dy = (ly - kCenter) * 0.09;
    os << "<text x=\"" << fmt(lx + dx) << "\" y=\"" << fmt(ly + dy)
       << "\" text-anchor=\"middle\">v" << v << "</text>\n";
  }
  os << "</g>\n";
  os << "<text id=\"caption\" x=\"" << kCenter << "\" y=\"" << kSize + 35
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">" << caption
     << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string frame_filename(int64_t t, int64_t t_max) {
  int width = std::max<int>(3, static_cast<int>(std::to_string(t_max).size()));
  std::string digits = std::to_string(t);
  return "frame_t" + std::string(width - std::min(width, static_cast<int>(digits.size())), '0') + digits +
         ".svg";
}

std::vector<std::string> render_frames(int64_t n, const std::vector<int64_t>& R, int64_t m,
                                       int64_t t_from, int64_t t_to,
                                       const std::string& out_dir) {
  if (t_from > t_to) throw DomainError("empty t range");
  ThetaParams{n, m, t_from}.validate();
  ThetaParams{n, m, t_to}.validate();
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create " + out_dir + ": " + ec.message());
  std::vector<std::string> paths;
  for (int64_t t = t_from; t <= t_to; ++t) {
    fs::path p = fs::path(out_dir) / frame_filename(t, n / m - 1);
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + p.string() + " for writing");
    f << render_svg({n, R, m, t});
    if (!f) throw std::runtime_error("write failed for " + p.string());
    paths.push_back(p.string());
  }
  return paths;
}

}  // namespace circ
