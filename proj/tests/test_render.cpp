#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "circulant/render.hpp"

using namespace circ;

namespace {

std::string slurp(const std::string& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("frame sweep at order 16") {
  auto dir = std::filesystem::temp_directory_path() / "circ_frames16";
  std::filesystem::remove_all(dir);
  auto paths = render_frames(16, {1, 2, 7}, 2, 0, 7, dir.string());
  REQUIRE(paths.size() == 8);
  for (int t = 0; t < 8; ++t) {
    CHECK(std::filesystem::path(paths[t]).filename() == frame_filename(t, 7));
    std::string svg = slurp(paths[t]);
    bool circulant = svg.find(">circulant: ") != std::string::npos;
    CHECK(circulant == (t % 2 == 0));
    if (t == 2 || t == 6) CHECK(svg.find(">circulant: 2,3,5<") != std::string::npos);
    if (t % 2) CHECK(svg.find(">not circulant<") != std::string::npos);
  }
  CHECK(frame_filename(3, 7) == "frame_t003.svg");
  CHECK(frame_filename(12, 3455) == "frame_t0012.svg");
}

TEST_CASE("t = 0 is the unrotated drawing") {
  FrameSpec f{16, {1, 2, 7}, 2, 0};
  auto pos = frame_corners(f);
  for (int64_t x = 0; x < 16; ++x) CHECK(pos[x] == x);
  std::string svg = render_svg(f);
  CHECK(svg.find("data-vertex=\"5\" data-corner=\"5\"") != std::string::npos);
  CHECK(render_svg(f) == svg);
}

TEST_CASE("positions are the theta images and fixed classes stay put") {
  for (int64_t t = 0; t < 12; ++t) {
    FrameSpec f{24, {1, 2, 8, 11}, 2, t};
    std::string svg = render_svg(f);
    std::regex re("data-vertex=\"(\\d+)\" data-corner=\"(\\d+)\"");
    int count = 0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator();
         ++it) {
      int64_t v = std::stoll((*it)[1]), c = std::stoll((*it)[2]);
      CHECK(c == theta_point({24, 2, t}, v));
      if (v % 2 == 0) CHECK(c == v);
      ++count;
    }
    CHECK(count == 24);
  }
  CHECK(frame_caption({24, {1, 2, 8, 11}, 2, 3}) == "circulant: 2,5,7,8");
}

TEST_CASE("errors") {
  CHECK_THROWS(render_frames(16, {1, 2, 7}, 2, 5, 4, "/tmp/x"));
  CHECK_THROWS(render_frames(16, {1, 2, 7}, 2, 0, 8, "/tmp/x"));
  CHECK_THROWS(render_frames(16, {1, 2, 7}, 2, 0, 1, "/proc/forbidden/frames"));
}
