#pragma once

#include <string>

#include "circulant/type2.hpp"

namespace circ {

// n corners on a circle, clockwise from the top; vertex v_x is drawn at
// corner theta_{n,m,t}(x), so multiples of m never move.
struct FrameSpec {
  int64_t n = 0;
  std::vector<int64_t> R;
  int64_t m = 0;
  int64_t t = 0;
};

std::vector<int64_t> frame_corners(const FrameSpec& f);  // vertex -> corner
std::string frame_caption(const FrameSpec& f);
std::string render_svg(const FrameSpec& f);

// One SVG per t in [t_from, t_to]; returns the written paths.
std::vector<std::string> render_frames(int64_t n, const std::vector<int64_t>& R, int64_t m,
                                       int64_t t_from, int64_t t_to,
                                       const std::string& out_dir);

std::string frame_filename(int64_t t, int64_t t_max);

}  // namespace circ
