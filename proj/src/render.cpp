#include "polydag/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "polydag/arrangement.hpp"

namespace polydag {

namespace {

using P = std::array<double, 2>;

/// Half-plane a . y <= b.
struct Half {
  P a;
  double b;
};

std::vector<P> clip(const std::vector<P>& poly, const Half& h) {
  std::vector<P> out;
  auto val = [&](const P& p) { return h.a[0] * p[0] + h.a[1] * p[1] - h.b; };
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const P& p = poly[k];
    const P& q = poly[(k + 1) % poly.size()];
    double vp = val(p), vq = val(q);
    if (vp <= 0) out.push_back(p);
    if ((vp < 0 && vq > 0) || (vp > 0 && vq < 0)) {
      double t = vp / (vp - vq);
      out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
    }
  }
  return out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

/// Coordinate difference x_i - x_0 in the chart, where x_0 = 0.
P direction_of(int i) { return i == 1 ? P{1, 0} : P{0, 1}; }

}  // namespace

std::string render_arrangement_svg(const TropMatrix& v) {
  if (v.rows() != 3 || v.cols() != 3) throw DimensionMismatch("render needs a 3 x 3 matrix");
  require_doubly_r_astic(v);

  // Offsets that locate apices and lines, used to size the view box.
  std::vector<double> xs, ys;
  for (int j = 0; j < 3; ++j) {
    for (int i = 1; i < 3; ++i) {
      for (int k = 0; k < 3; ++k) {
        if (k == i || v(i, j).is_inf() || v(k, j).is_inf()) continue;
        double off = to_double(v(i, j).value() - v(k, j).value());
        (i == 1 ? xs : ys).push_back(off);
      }
    }
  }
  if (xs.empty()) xs.push_back(0);
  if (ys.empty()) ys.push_back(0);
  double lo_x = *std::min_element(xs.begin(), xs.end()), hi_x = *std::max_element(xs.begin(), xs.end());
  double lo_y = *std::min_element(ys.begin(), ys.end()), hi_y = *std::max_element(ys.begin(), ys.end());
  double margin = std::max({2.0, 0.3 * (hi_x - lo_x), 0.3 * (hi_y - lo_y)});
  lo_x -= margin;
  hi_x += margin;
  lo_y -= margin;
  hi_y += margin;

  const double size = 480;
  const double scale = size / std::max(hi_x - lo_x, hi_y - lo_y);
  auto sx = [&](double x) { return fmt((x - lo_x) * scale); };
  auto sy = [&](double y) { return fmt((hi_y - y) * scale); };
  const std::vector<P> box{{lo_x, lo_y}, {hi_x, lo_y}, {hi_x, hi_y}, {lo_x, hi_y}};

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt((hi_x - lo_x) * scale) << "\" height=\""
      << fmt((hi_y - lo_y) * scale) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (v(0, 0) == TropValue::zero() && v(1, 1) == TropValue::zero() && v(2, 2) == TropValue::zero()) {
    try {
      auto star = kleene_star(v);
      auto poly = box;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if (i == j || star(i, j).is_inf()) continue;
          // x_i - x_j <= c_ij with x_0 = 0.
          P a{0, 0};
          if (i > 0) a = direction_of(i);
          if (j > 0) a = {a[0] - direction_of(j)[0], a[1] - direction_of(j)[1]};
          poly = clip(poly, {a, to_double(star(i, j).value())});
        }
      }
      if (poly.size() >= 3) {
        svg << "<polygon fill=\"#f4c27a\" fill-opacity=\"0.6\" stroke=\"none\" points=\"";
        for (std::size_t k = 0; k < poly.size(); ++k) svg << (k ? " " : "") << sx(poly[k][0]) << "," << sy(poly[k][1]);
        svg << "\"/>\n";
      }
    } catch (const NegativeCycle&) {
    }
  }

  const char* colors[] = {"#1b6ca8", "#b23a48", "#2d8a4e"};
  auto segment = [&](P from, P dir, const char* color) {
    // Ray from `from` along `dir`, cut at the box.
    double t = 1e18;
    for (int c = 0; c < 2; ++c) {
      double lo = c ? lo_y : lo_x, hi = c ? hi_y : hi_x;
      if (dir[c] > 0) t = std::min(t, (hi - from[c]) / dir[c]);
      if (dir[c] < 0) t = std::min(t, (lo - from[c]) / dir[c]);
    }
    P to{from[0] + t * dir[0], from[1] + t * dir[1]};
    svg << "<line x1=\"" << sx(from[0]) << "\" y1=\"" << sy(from[1]) << "\" x2=\"" << sx(to[0]) << "\" y2=\""
        << sy(to[1]) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
  };
  for (int j = 0; j < 3; ++j) {
    std::vector<int> finite;
    for (int i = 0; i < 3; ++i) {
      if (v(i, j).is_finite()) finite.push_back(i);
    }
    const char* color = colors[j];
    if (finite.size() == 3) {
      P apex{to_double(v(1, j).value() - v(0, j).value()), to_double(v(2, j).value() - v(0, j).value())};
      segment(apex, {-1, 0}, color);
      segment(apex, {0, -1}, color);
      segment(apex, {1, 1}, color);
      svg << "<circle cx=\"" << sx(apex[0]) << "\" cy=\"" << sy(apex[1]) << "\" r=\"4\" fill=\"" << color << "\"/>\n";
      svg << "<text x=\"" << sx(apex[0]) << "\" y=\"" << sy(apex[1]) << "\" dx=\"6\" dy=\"-6\" font-family=\"sans-serif\""
          << " font-size=\"14\" fill=\"" << color << "\">v" << j + 1 << "</text>\n";
    } else if (finite.size() == 2) {
      // The two surviving sectors meet along x_p - v_p = x_q - v_q.
      int p = finite[0], q = finite[1];
      double off = to_double(v(q, j).value() - v(p, j).value());
      P base, dir;
      if (p == 0) {
        base = q == 1 ? P{off, 0} : P{0, off};
        dir = q == 1 ? P{0, 1} : P{1, 0};
      } else {
        base = {0, off};
        dir = {1, 1};
      }
      segment(base, dir, color);
      segment(base, {-dir[0], -dir[1]}, color);
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace polydag
