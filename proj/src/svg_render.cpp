#include "mgp/svg_render.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mgp/errors.h"

namespace mgp {

namespace {

constexpr double kPixelsPerMeter = 24.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

// Traversability ramp: 0 -> red, 1 -> blue, unknown -> gray.
std::string trav_color(double v) {
  if (v < 0.0) return "#b0b0b0";
  const int r = static_cast<int>(std::lround(220.0 + v * (56.0 - 220.0)));
  const int g = static_cast<int>(std::lround(60.0 + v * (120.0 - 60.0)));
  const int b = static_cast<int>(std::lround(50.0 + v * (200.0 - 50.0)));
  char buf[16];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
  return buf;
}

struct Transform {
  double min_x, max_y;
  double px(double x) const { return (x - min_x) * kPixelsPerMeter; }
  double py(double y) const { return (max_y - y) * kPixelsPerMeter; }
};

// Marching squares on the TSDF at level zero; emits one line per crossing
// cell edge pair.
void emit_zero_level_set(std::ostream& os, const TsdfGrid& tsdf, const Transform& tf) {
  const GridHeader& h = tsdf.header;
  auto value = [&](int ix, int iy) {
    return tsdf.values[static_cast<std::size_t>(iy) * h.width + ix];
  };
  auto lerp = [](double a, double b) { return (a == b) ? 0.5 : a / (a - b); };

  os << "<g stroke=\"#202020\" stroke-width=\"1.2\" fill=\"none\">\n";
  for (int iy = 0; iy + 1 < h.height; ++iy) {
    for (int ix = 0; ix + 1 < h.width; ++ix) {
      const double x0 = h.cell_center_x(ix), x1 = h.cell_center_x(ix + 1);
      const double y0 = h.cell_center_y(iy), y1 = h.cell_center_y(iy + 1);
      const double v00 = value(ix, iy), v10 = value(ix + 1, iy);
      const double v01 = value(ix, iy + 1), v11 = value(ix + 1, iy + 1);

      // Crossing points on the four cell edges (parameterized 0..1).
      struct Pt {
        double x, y;
      };
      Pt pts[4];
      int count = 0;
      if ((v00 < 0) != (v10 < 0)) pts[count++] = {x0 + lerp(v00, v10) * (x1 - x0), y0};
      if ((v01 < 0) != (v11 < 0)) pts[count++] = {x0 + lerp(v01, v11) * (x1 - x0), y1};
      if ((v00 < 0) != (v01 < 0)) pts[count++] = {x0, y0 + lerp(v00, v01) * (y1 - y0)};
      if ((v10 < 0) != (v11 < 0)) pts[count++] = {x1, y0 + lerp(v10, v11) * (y1 - y0)};
      if (count >= 2) {
        os << "<line x1=\"" << fmt(tf.px(pts[0].x)) << "\" y1=\"" << fmt(tf.py(pts[0].y))
           << "\" x2=\"" << fmt(tf.px(pts[1].x)) << "\" y2=\"" << fmt(tf.py(pts[1].y))
           << "\"/>\n";
      }
      if (count == 4) {
        os << "<line x1=\"" << fmt(tf.px(pts[2].x)) << "\" y1=\"" << fmt(tf.py(pts[2].y))
           << "\" x2=\"" << fmt(tf.px(pts[3].x)) << "\" y2=\"" << fmt(tf.py(pts[3].y))
           << "\"/>\n";
      }
    }
  }
  os << "</g>\n";
}

}  // namespace

void render_svg(const MapBundle& map, const std::optional<Mission>& mission,
                const std::optional<Plan>& plan, const std::string& out_path) {
  const GridHeader& h = map.header();
  const Transform tf{h.min_x(), h.max_y()};
  const double width_px = (h.max_x() - h.min_x()) * kPixelsPerMeter;
  const double height_px = (h.max_y() - h.min_y()) * kPixelsPerMeter;

  if (plan) {
    for (const SE2State& w : plan->waypoints) {
      if (w.x < h.min_x() || w.x > h.max_x() || w.y < h.min_y() || w.y > h.max_y()) {
        throw InputError("render: plan waypoint outside map bounds");
      }
    }
  }

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width_px)
     << "\" height=\"" << fmt(height_px) << "\" viewBox=\"0 0 " << fmt(width_px) << " "
     << fmt(height_px) << "\">\n";

  // Traversability cells, run-length merged per row.
  os << "<g shape-rendering=\"crispEdges\">\n";
  const double cell_px = h.resolution * kPixelsPerMeter;
  for (int iy = 0; iy < h.height; ++iy) {
    int ix = 0;
    while (ix < h.width) {
      const double v = map.traversability.values[static_cast<std::size_t>(iy) * h.width + ix];
      int run = 1;
      while (ix + run < h.width &&
             map.traversability.values[static_cast<std::size_t>(iy) * h.width + ix + run] == v) {
        ++run;
      }
      const double x_px = tf.px(h.cell_center_x(ix) - 0.5 * h.resolution);
      const double y_px = tf.py(h.cell_center_y(iy) + 0.5 * h.resolution);
      os << "<rect x=\"" << fmt(x_px) << "\" y=\"" << fmt(y_px) << "\" width=\""
         << fmt(run * cell_px) << "\" height=\"" << fmt(cell_px) << "\" fill=\""
         << trav_color(v) << "\"/>\n";
      ix += run;
    }
  }
  os << "</g>\n";

  emit_zero_level_set(os, map.tsdf, tf);

  if (mission) {
    os << "<g>\n";
    for (const Toi& toi : mission->tois) {
      os << "<circle cx=\"" << fmt(tf.px(toi.pose.x)) << "\" cy=\"" << fmt(tf.py(toi.pose.y))
         << "\" r=\"4\" fill=\"#14406e\"/>\n";
      for (const SE2State& p : toi.pois) {
        os << "<circle cx=\"" << fmt(tf.px(p.x)) << "\" cy=\"" << fmt(tf.py(p.y))
           << "\" r=\"2.5\" fill=\"#00c0c0\"/>\n";
      }
    }
    os << "</g>\n";
  }

  if (plan && !plan->waypoints.empty()) {
    os << "<polyline fill=\"none\" stroke=\"#10a010\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < plan->waypoints.size(); ++i) {
      if (i) os << " ";
      os << fmt(tf.px(plan->waypoints[i].x)) << "," << fmt(tf.py(plan->waypoints[i].y));
    }
    os << "\"/>\n";
    const SE2State& s = plan->waypoints.front();
    os << "<circle cx=\"" << fmt(tf.px(s.x)) << "\" cy=\"" << fmt(tf.py(s.y))
       << "\" r=\"5\" fill=\"#ff9000\" stroke=\"#202020\" stroke-width=\"1.5\"/>\n";
  } else if (mission) {
    const SE2State& s = mission->start;
    os << "<circle cx=\"" << fmt(tf.px(s.x)) << "\" cy=\"" << fmt(tf.py(s.y))
       << "\" r=\"5\" fill=\"#ff9000\" stroke=\"#202020\" stroke-width=\"1.5\"/>\n";
  }

  os << "</svg>\n";

  std::ofstream out(out_path);
  if (!out) throw InputError("render: cannot write " + out_path);
  out << os.str();
}

}  // namespace mgp
