#include "prefixpack/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace prefixpack {

namespace {

constexpr double kPlot = 640.0;
constexpr double kMargin = 16.0;
constexpr int kMaxLinesPerLevel = 64;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

// Maps a coordinate offset in [0, extent] to [0, kPlot].
double scale(const BigInt& offset, const BigInt& extent, bool log_scale) {
  const auto v = offset.convert_to<long double>();
  const auto e = extent.convert_to<long double>();
  if (log_scale) return static_cast<double>(std::log1p(v) / std::log1p(e) * kPlot);
  return static_cast<double>(v / e * kPlot);
}

void grid_lines(std::string& svg, const RenderInput& in, bool vertical) {
  const BigInt& extent = vertical ? in.canvas.w() : in.canvas.h();
  const std::uint32_t q = vertical ? in.q.q1 : in.q.q2;
  const bool log_scale = vertical ? in.log_x : in.log_y;
  BigInt parts = q;
  for (int level = 1; parts <= extent && parts <= kMaxLinesPerLevel; ++level, parts *= q) {
    if (extent % parts != 0) break;
    const BigInt step = extent / parts;
    const std::string width = num(level == 1 ? 1.5 : 0.5);
    for (BigInt k = 1; k < parts; ++k) {
      if (k % q == 0 && level > 1) continue;  // already drawn at a coarser level
      const double p = scale(k * step, extent, log_scale);
      if (vertical) {
        svg += "<line x1=\"" + num(kMargin + p) + "\" y1=\"" + num(kMargin) + "\" x2=\"" +
               num(kMargin + p) + "\" y2=\"" + num(kMargin + kPlot) + "\" stroke=\"#999\" stroke-width=\"" +
               width + "\"/>\n";
      } else {
        const double y = kMargin + kPlot - p;
        svg += "<line x1=\"" + num(kMargin) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(kMargin + kPlot) + "\" y2=\"" + num(y) + "\" stroke=\"#999\" stroke-width=\"" +
               width + "\"/>\n";
      }
    }
  }
}

}  // namespace

PixelRect to_pixels(const RenderInput& in, const Region& r) {
  const BigInt x0 = r.x - in.canvas.x;
  const BigInt y0 = r.y - in.canvas.y;
  const double left = scale(x0, in.canvas.w(), in.log_x);
  const double right = scale(x0 + r.w(), in.canvas.w(), in.log_x);
  const double bottom = scale(y0, in.canvas.h(), in.log_y);
  const double top = scale(y0 + r.h(), in.canvas.h(), in.log_y);
  return PixelRect{kMargin + left, kMargin + kPlot - top, right - left, top - bottom};
}

std::string render_svg(const RenderInput& in) {
  const std::string side = num(kPlot + 2 * kMargin);
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + side +
         "\" height=\"" + side + "\" viewBox=\"0 0 " + side + " " + side + "\">\n";
  svg += "<rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" + num(kPlot) +
         "\" height=\"" + num(kPlot) + "\" fill=\"#fff\" stroke=\"#000\" stroke-width=\"2\"/>\n";
  grid_lines(svg, in, true);
  grid_lines(svg, in, false);

  for (std::size_t k = 0; k < in.blocks.size(); ++k) {
    const auto& b = in.blocks[k];
    const PixelRect px = to_pixels(in, b.region);
    const int hue = static_cast<int>((k * 137) % 360);
    svg += "<g>\n<title>" + escape_xml(b.label + " " + to_string(b.region)) + "</title>\n";
    svg += "<rect x=\"" + num(px.x) + "\" y=\"" + num(px.y) + "\" width=\"" + num(px.w) +
           "\" height=\"" + num(px.h) + "\" fill=\"hsl(" + std::to_string(hue) +
           ",60%,75%)\" fill-opacity=\"0.8\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    const double chars = static_cast<double>(std::max<std::size_t>(b.label.size(), 1));
    const double font = std::clamp(std::min(px.w / (0.62 * chars + 0.5), px.h * 0.6), 2.0, 14.0);
    svg += "<text x=\"" + num(px.x + px.w / 2) + "\" y=\"" + num(px.y + px.h / 2) +
           "\" font-family=\"monospace\" font-size=\"" + num(font) +
           "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + escape_xml(b.label) +
           "</text>\n</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

RenderInput render_input_for(const ProblemSpec& spec, const Solution& sol, const Codebook& cb) {
  const PackingInstance inst = lengths_to_instance(spec);
  RenderInput in;
  in.q = spec.arities;
  in.canvas = inst.container;
  in.log_x = inst.l1_max > 10;
  in.log_y = inst.l2_max > 10;
  for (const auto& p : sol.assignments) {
    const Codeword& cw = cb.at(p.block);
    auto part = [](const std::string& s) { return s.empty() ? std::string("ε") : s; };
    in.blocks.push_back(RenderBlock{
        inst.blocks.at(p.block).placed(p.x, p.y),
        part(format_word(cw.c1, spec.arities.q1)) + "|" + part(format_word(cw.c2, spec.arities.q2))});
  }
  return in;
}

}  // namespace prefixpack
