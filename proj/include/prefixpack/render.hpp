#pragma once

#include <string>
#include <vector>

#include "prefixpack/codes.hpp"
#include "prefixpack/model.hpp"
#include "prefixpack/packer.hpp"

namespace prefixpack {

struct RenderBlock {
  Region region;
  std::string label;
};

struct RenderInput {
  Arities q;
  Region canvas;  // usually the canonical container
  std::vector<RenderBlock> blocks;
  bool log_x = false;
  bool log_y = false;
};

/// One labelled rectangle per block over grid lines at the coarse q-power
/// boundaries; y grows upward as in the packing coordinates. Axes flagged
/// log_* are drawn on a log(1 + v) scale.
std::string render_svg(const RenderInput& input);

/// Canonical-container diagram for a constructed codebook. An axis switches
/// to log scale once its maximum length exceeds 10.
RenderInput render_input_for(const ProblemSpec& spec, const Solution& sol, const Codebook& cb);

/// Pixel rectangle of a region as laid out by render_svg: x, y, w, h.
struct PixelRect {
  double x, y, w, h;
};
PixelRect to_pixels(const RenderInput& input, const Region& r);

}  // namespace prefixpack
