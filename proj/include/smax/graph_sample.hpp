#pragma once

// Nonparametric residual: for a graph z = u(x,y) with |Du| < 1, u > 0,
//
//   Q_t[u] = (1-|Du|^2) Lap u + u_i u_j u_ij - alpha t (1-|Du|^2)/u,
//
// evaluated pointwise from a 2-jet.  t = 1 is the singular maximal surface
// operator, t = 0 the maximal surface operator.

#include <cmath>
#include <functional>
#include <vector>

#include "smax/errors.hpp"

namespace smax {

struct GraphJet {
  double u = 0.0;
  double ux = 0.0, uy = 0.0;
  double uxx = 0.0, uxy = 0.0, uyy = 0.0;
};

struct GraphSample {
  std::function<GraphJet(double, double)> jet;
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  double h = 0.1;  // sample spacing in both axes
};

struct GraphResidualPoint {
  double x, y, value;
};

inline double qt_of_jet(const GraphJet& j, double alpha, double t) {
  const double g2 = j.ux * j.ux + j.uy * j.uy;
  if (!(g2 < 1.0)) throw SpacelikeViolation("graph_Q_residual: |Du| >= 1");
  if (!(j.u > 0.0)) throw PositivityViolation("graph_Q_residual: u <= 0");
  const double s = 1.0 - g2;
  return s * (j.uxx + j.uyy) + j.ux * j.ux * j.uxx + 2.0 * j.ux * j.uy * j.uxy +
         j.uy * j.uy * j.uyy - alpha * t * s / j.u;
}

// Samples Q_t[u] on the rectangle's grid.
inline std::vector<GraphResidualPoint> graph_Q_residual(const GraphSample& g,
                                                        double alpha, double t) {
  std::vector<GraphResidualPoint> out;
  const int nx = int(std::floor((g.x1 - g.x0) / g.h + 0.5)) + 1;
  const int ny = int(std::floor((g.y1 - g.y0) / g.h + 0.5)) + 1;
  out.reserve(std::size_t(nx) * ny);
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const double x = g.x0 + ix * g.h;
      const double y = g.y0 + iy * g.h;
      out.push_back({x, y, qt_of_jet(g.jet(x, y), alpha, t)});
    }
  }
  return out;
}

inline double max_abs_residual(const std::vector<GraphResidualPoint>& pts) {
  double m = 0.0;
  for (const auto& p : pts) m = std::max(m, std::abs(p.value));
  return m;
}

// 2-jet by second-order central differences from a tabulated grid of values;
// usable at interior indices only.
inline GraphSample graph_sample_from_table(double x0, double y0, double h, int nx,
                                           int ny, std::vector<double> values) {
  GraphSample g;
  g.x0 = x0 + h;
  g.x1 = x0 + (nx - 2) * h;
  g.y0 = y0 + h;
  g.y1 = y0 + (ny - 2) * h;
  g.h = h;
  g.jet = [=, v = std::move(values)](double x, double y) {
    const int ix = int(std::lround((x - x0) / h));
    const int iy = int(std::lround((y - y0) / h));
    if (ix < 1 || ix >= nx - 1 || iy < 1 || iy >= ny - 1)
      throw Error("graph_sample_from_table: off-grid evaluation");
    auto at = [&](int i, int j) { return v[std::size_t(j) * nx + i]; };
    GraphJet jet;
    jet.u = at(ix, iy);
    jet.ux = (at(ix + 1, iy) - at(ix - 1, iy)) / (2 * h);
    jet.uy = (at(ix, iy + 1) - at(ix, iy - 1)) / (2 * h);
    jet.uxx = (at(ix + 1, iy) - 2 * jet.u + at(ix - 1, iy)) / (h * h);
    jet.uyy = (at(ix, iy + 1) - 2 * jet.u + at(ix, iy - 1)) / (h * h);
    jet.uxy = (at(ix + 1, iy + 1) - at(ix - 1, iy + 1) - at(ix + 1, iy - 1) +
               at(ix - 1, iy - 1)) /
              (4 * h * h);
    return jet;
  };
  return g;
}

}  // namespace smax
