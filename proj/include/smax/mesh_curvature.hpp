#pragma once

// Discrete mean curvature on spacelike meshes, used as the correctness oracle
// for every surface constructor.  At each vertex the 2-ring is expressed in
// Lorentzian normal coordinates (e1, e2, N) with <e1,e1> = <e2,e2> = 1,
// <N,N> = -1, and a quadric  zeta = d1 xi + d2 eta + (a xi^2 + 2b xi eta +
// c eta^2)/2  is fitted by least squares; H is the nonparametric mean
// curvature of the fitted graph at the origin, signed with respect to the
// future normal.

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "smax/errors.hpp"
#include "smax/lorentz.hpp"
#include "smax/mesh.hpp"

namespace smax {
namespace detail {

// Gaussian elimination with partial pivoting for the small normal systems.
template <int N>
bool solve_dense(std::array<std::array<double, N>, N>& A, std::array<double, N>& b) {
  for (int col = 0; col < N; ++col) {
    int piv = col;
    for (int r = col + 1; r < N; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    if (std::abs(A[piv][col]) < 1e-300) return false;
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (int r = col + 1; r < N; ++r) {
      const double f = A[r][col] / A[col][col];
      for (int c = col; c < N; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int col = N - 1; col >= 0; --col) {
    b[col] /= A[col][col];
    for (int r = 0; r < col; ++r) b[r] -= A[r][col] * b[col];
  }
  return true;
}

// Orthonormal spacelike frame {e1, e2} of the tangent plane of a unit
// timelike N.  e1 is the Lorentz projection of (1,0,0), which always has
// <e1,e1> = 1 + <a,N>^2 >= 1.
inline void tangent_frame(LVec3 n, LVec3& e1, LVec3& e2) {
  const LVec3 a{1.0, 0.0, 0.0};
  const double an = minkowski_dot(a, n);
  LVec3 p = a + an * n;
  const double len = std::sqrt(minkowski_sq(p));
  e1 = (1.0 / len) * p;
  e2 = lorentz_cross(n, e1);
  const double l2 = std::sqrt(minkowski_sq(e2));
  e2 = (1.0 / l2) * e2;
}

}  // namespace detail

namespace detail {

struct JetFit {
  double d1 = 0, d2 = 0;        // fitted tangential gradient
  double fxx = 0, fxy = 0, fyy = 0;
  bool ok = false;
};

template <int NB>
bool fit_basis(const std::vector<std::array<double, 3>>& pts, JetFit& out) {
  static_assert(NB == 10 || NB == 6);
  std::array<std::array<double, NB>, NB> A{};
  std::array<double, NB> rhs{};
  for (const auto& p : pts) {
    double row[NB];
    row[0] = 1.0;
    row[1] = p[0];
    row[2] = p[1];
    row[3] = 0.5 * p[0] * p[0];
    row[4] = p[0] * p[1];
    row[5] = 0.5 * p[1] * p[1];
    if constexpr (NB == 10) {
      row[6] = p[0] * p[0] * p[0];
      row[7] = p[0] * p[0] * p[1];
      row[8] = p[0] * p[1] * p[1];
      row[9] = p[1] * p[1] * p[1];
    }
    for (int r = 0; r < NB; ++r) {
      for (int c = 0; c < NB; ++c) A[r][c] += row[r] * row[c];
      rhs[r] += row[r] * p[2];
    }
  }
  if (!solve_dense<NB>(A, rhs)) return false;
  out.d1 = rhs[1];
  out.d2 = rhs[2];
  out.fxx = rhs[3];
  out.fxy = rhs[4];
  out.fyy = rhs[5];
  out.ok = true;
  return true;
}

// Least-squares jet through the scaled ring offsets.  The curvature is read
// off the quadratic coefficients; the constant and cubic terms are nuisance
// parameters that keep third- and fourth-order surface content from aliasing
// into the curvature on one-sided rings (the diagonal split of the structured
// grids yields such rings along its flip lines).  Falls back to smaller bases
// on rank-deficient stars.
inline JetFit fit_quadric(const std::vector<std::array<double, 3>>& pts) {
  JetFit out;
  if (pts.size() >= 12 && fit_basis<10>(pts, out)) return out;
  if (pts.size() >= 6 && fit_basis<6>(pts, out)) return out;
  if (pts.size() >= 3) {
    std::array<std::array<double, 3>, 3> A{};
    std::array<double, 3> rhs{};
    for (const auto& p : pts) {
      const double row[3] = {p[0], p[1], 0.5 * (p[0] * p[0] + p[1] * p[1])};
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) A[r][c] += row[r] * row[c];
        rhs[r] += row[r] * p[2];
      }
    }
    if (solve_dense<3>(A, rhs)) {
      out.d1 = rhs[0];
      out.d2 = rhs[1];
      out.fxx = out.fyy = rhs[2];
      out.fxy = 0.0;
      out.ok = true;
    }
  }
  return out;
}

}  // namespace detail

// Per-vertex mean curvature by 2-ring quadric fitting.  Requires timelike
// vertex normals (estimate_vertex_normals fills them when the constructor
// did not).  Vertices whose star admits no fit (boundary corners) get NaN;
// an interior vertex without a usable star, or a mesh with no usable vertex
// at all, raises DegenerateStar.
inline std::vector<double> mesh_mean_curvature(const SurfaceMesh& m) {
  if (m.vertex_normals.size() != m.vertices.size())
    throw Error("mesh_mean_curvature: missing vertex normals");
  const auto adj = vertex_adjacency(m);
  const auto bd = boundary_vertices(m);
  std::vector<double> H(m.vertices.size(),
                        std::numeric_limits<double>::quiet_NaN());
  std::size_t fitted = 0;

  std::vector<int> ring;
  std::vector<std::array<double, 3>> pts;
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    if (adj[i].size() < 3) {
      if (!bd[i])
        throw DegenerateStar("mesh_mean_curvature: interior vertex " +
                             std::to_string(i) + " has fewer than 3 neighbors");
      continue;  // boundary corner: no estimate
    }
    // 2-ring (neighbors and their neighbors).
    ring.clear();
    std::set<int> seen;
    seen.insert(int(i));
    for (int j : adj[i]) {
      if (seen.insert(j).second) ring.push_back(j);
      for (int k : adj[j])
        if (seen.insert(k).second) ring.push_back(k);
    }

    LVec3 e1, e2;
    detail::tangent_frame(m.vertex_normals[i], e1, e2);
    const LVec3 p = m.vertices[i];
    const LVec3 n = m.vertex_normals[i];

    // Scale by the mean tangential offset so the normal equations stay
    // well conditioned on fine meshes.
    double scale = 0.0;
    for (int j : ring) {
      const LVec3 w = m.vertices[j] - p;
      const double xi = minkowski_dot(w, e1), eta = minkowski_dot(w, e2);
      scale += std::sqrt(xi * xi + eta * eta);
    }
    scale /= std::max<std::size_t>(1, ring.size());
    if (!(scale > 0.0)) continue;

    pts.clear();
    pts.push_back({0.0, 0.0, 0.0});  // the vertex itself
    for (int j : ring) {
      const LVec3 w = m.vertices[j] - p;
      pts.push_back({minkowski_dot(w, e1) / scale, minkowski_dot(w, e2) / scale,
                     -minkowski_dot(w, n) / scale});
    }
    const detail::JetFit fit = detail::fit_quadric(pts);
    if (!fit.ok) {
      if (!bd[i])
        throw DegenerateStar("mesh_mean_curvature: singular fit at interior vertex " +
                             std::to_string(i));
      continue;
    }
    const double g2 = fit.d1 * fit.d1 + fit.d2 * fit.d2;
    const double s = 1.0 - g2;
    const double fxx = fit.fxx / scale, fxy = fit.fxy / scale, fyy = fit.fyy / scale;
    // Nonparametric mean curvature of zeta = f(xi,eta) at the origin.
    H[i] = (s * (fxx + fyy) + fit.d1 * fit.d1 * fxx + 2.0 * fit.d1 * fit.d2 * fxy +
            fit.d2 * fit.d2 * fyy) /
           (s * std::sqrt(s));
    ++fitted;
  }
  if (fitted == 0)
    throw DegenerateStar("mesh_mean_curvature: no vertex admits a quadric fit");
  return H;
}

// Residual of the singular maximal surface equation,
//   H(p) - alpha <N(p), a> / <p, a>,
// per vertex.  Throws DenominatorZero when <p,a> vanishes at some vertex.
inline std::vector<double> eqL_residual(const SurfaceMesh& m, double alpha,
                                        LVec3 a_vec = {0.0, 0.0, 1.0}) {
  const std::vector<double> H = mesh_mean_curvature(m);
  std::vector<double> res(m.vertices.size());
  const double a_scale = euclid_norm(a_vec);
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    const double den = minkowski_dot(m.vertices[i], a_vec);
    if (std::abs(den) <= 1e-12 * std::max(1.0, euclid_norm(m.vertices[i]) * a_scale))
      throw DenominatorZero("eqL_residual: <p,a> vanishes at vertex " +
                            std::to_string(i));
    res[i] = H[i] - alpha * minkowski_dot(m.vertex_normals[i], a_vec) / den;
  }
  return res;
}

// Max |field| over the deep-interior vertices (full 2-ring support).
inline double max_abs_interior(const SurfaceMesh& m, const std::vector<double>& f) {
  const auto deep = deep_interior_vertices(m);
  double worst = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (deep[i]) worst = std::max(worst, std::abs(f[i]));
  return worst;
}

}  // namespace smax
