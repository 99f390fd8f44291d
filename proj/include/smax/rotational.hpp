#pragma once

// Rotationally symmetric profiles about the timelike axis,
//
//   u''/(1-u'^2) + (n-1) u'/r = alpha/u,   u > 0, u'^2 < 1,
//
// including the singular initial value problem at r = 0 with u(0) = u0,
// u'(0) = 0.  The axis problem is solved by iterating the integral operator
//
//   (T u)(r) = u0 + int_0^r phiinv( (1/s) int_0^s t f(u(t), u'(t)) dt ) ds,
//
// with phi(y) = y/sqrt(1-y^2), phiinv(y) = y/sqrt(1+y^2) and
// f(x,y) = alpha/(x sqrt(1-y^2)); away from the axis the profile is continued
// with the same RK4 machinery as the translation reduction.

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "smax/errors.hpp"
#include "smax/profile.hpp"

namespace smax {

struct PicardConfig {
  double delta = 0.0;           // initial half-width; 0 = 0.1*min(u0,1)
  int quad_points = 256;        // trapezoid panels on [0,delta]
  int max_iters = 200;
  double contraction_tol = 1e-12;  // C1 distance between successive iterates
  int max_delta_halvings = 10;
};

struct PicardDiagnostics {
  double delta_used = 0.0;
  int iterations = 0;
  double final_c1_distance = 0.0;
  double max_ball_radius = 0.0;  // sup |u - u0| + sup |u'| over all iterates
};

namespace detail {

inline double phi_inv(double y) { return y / std::sqrt(1.0 + y * y); }

// One Picard pass on the uniform grid; returns the C1 distance to the input.
// The radial weight is t^(n-1)/s^(n-1); n_dim = 2 is the surface case.
inline double picard_sweep(double alpha, double u0, double h, int n_dim,
                           std::vector<double>& u, std::vector<double>& v) {
  const std::size_t m = u.size();
  std::vector<double> g(m), J(m), vn(m), un(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double s = 1.0 - v[j] * v[j];
    if (!(u[j] > 0.0) || !(s > 0.0)) return std::numeric_limits<double>::infinity();
    g[j] = (j == 0) ? 0.0
                    : std::pow(j * h, n_dim - 1) * alpha / (u[j] * std::sqrt(s));
  }
  J[0] = 0.0;
  for (std::size_t j = 1; j < m; ++j) J[j] = J[j - 1] + 0.5 * h * (g[j] + g[j - 1]);
  vn[0] = 0.0;  // (T u)'(0) = 0 by the L'Hopital limit of the t/s weight
  for (std::size_t j = 1; j < m; ++j)
    vn[j] = phi_inv(J[j] / std::pow(j * h, n_dim - 1));
  un[0] = u0;
  for (std::size_t j = 1; j < m; ++j) un[j] = un[j - 1] + 0.5 * h * (vn[j] + vn[j - 1]);
  double du = 0.0, dv = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    du = std::max(du, std::abs(un[j] - u[j]));
    dv = std::max(dv, std::abs(vn[j] - v[j]));
  }
  u.swap(un);
  v.swap(vn);
  return du + dv;
}

}  // namespace detail

// Solves the axis problem on [0, delta] by Picard iteration.  On failure to
// contract the interval is halved, up to cfg.max_delta_halvings times.
inline ProfileSolution picard_solve(double alpha, double u0,
                                    const PicardConfig& cfg = {},
                                    PicardDiagnostics* diag = nullptr) {
  if (!(u0 > 0.0)) throw InvalidInitial("picard_solve: u0 must be positive");
  double delta = cfg.delta > 0.0 ? cfg.delta : 0.1 * std::min(u0, 1.0);
  std::string last_fail;
  for (int halving = 0; halving <= cfg.max_delta_halvings; ++halving) {
    const std::size_t m = std::size_t(cfg.quad_points) + 1;
    const double h = delta / cfg.quad_points;
    std::vector<double> u(m, u0), v(m, 0.0);
    PicardDiagnostics d;
    d.delta_used = delta;
    double prev3 = std::numeric_limits<double>::infinity();
    std::vector<double> hist;
    bool ok = false;
    for (int it = 0; it < cfg.max_iters; ++it) {
      const double dist = detail::picard_sweep(alpha, u0, h, u, v);
      double ball = 0.0, vmax = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        ball = std::max(ball, std::abs(u[j] - u0));
        vmax = std::max(vmax, std::abs(v[j]));
      }
      d.max_ball_radius = std::max(d.max_ball_radius, ball + vmax);
      d.iterations = it + 1;
      d.final_c1_distance = dist;
      hist.push_back(dist);
      if (!std::isfinite(dist)) {
        last_fail = "iterate left the admissible region";
        break;
      }
      if (dist < cfg.contraction_tol) {
        ok = true;
        break;
      }
      if (hist.size() >= 4) {
        prev3 = hist[hist.size() - 4];
        if (dist >= prev3) {
          last_fail = "C1 distance not shrinking";
          break;
        }
      }
    }
    if (ok) {
      if (diag) *diag = d;
      ProfileSolution sol;
      sol.alpha = alpha;
      sol.axis_kind = AxisKind::rotation_z;
      sol.dim_n = 2;
      sol.grid_h = h;
      sol.samples.resize(m);
      for (std::size_t j = 0; j < m; ++j) sol.samples[j] = {j * h, u[j], v[j]};
      sol.left = {0.0, EndpointTag::axis, u0, 0.0};
      sol.right = {delta, EndpointTag::window, u.back(), v.back()};
      return sol;
    }
    delta *= 0.5;
  }
  throw NoContraction("picard_solve: no contraction after halvings (" +
                      last_fail + ")");
}

// Continues a seed profile to its maximal domain with RK4 on
// u'' = (1-u'^2)(alpha/u - (n-1)u'/r), keeping the seed samples.
inline ProfileSolution extend_rotational(double alpha, const ProfileSolution& seed,
                                         int n_dim = 2,
                                         const ProfileOptions& opts = {}) {
  if (seed.samples.empty())
    throw InvalidInitial("extend_rotational: empty seed");
  const ProfileSample s0 = seed.samples.back();
  detail::RadialRhs rhs{alpha, n_dim};
  detail::DirectionResult right =
      detail::integrate_direction(rhs, {s0.r, s0.u, s0.up}, +1, opts);
  ProfileSolution sol;
  sol.alpha = alpha;
  sol.axis_kind = AxisKind::rotation_z;
  sol.dim_n = n_dim;
  sol.grid_h = opts.h;
  sol.samples = seed.samples;
  for (const auto& s : right.samples) sol.samples.push_back(s);
  sol.left = seed.left;
  sol.right = right.endpoint;
  return sol;
}

// Axis solve + continuation in one call.
inline ProfileSolution solve_rotational_axis(double alpha, double u0,
                                             const PicardConfig& cfg = {},
                                             const ProfileOptions& opts = {}) {
  ProfileSolution seed = picard_solve(alpha, u0, cfg);
  return extend_rotational(alpha, seed, 2, opts);
}

// Bidirectional solve from interior data (r0 > 0).  The left sweep stops at
// the axis guard r = opts.h when no event fires first.
inline ProfileSolution solve_from_interior(double alpha, double r0, double u0,
                                           double up0, int n_dim = 2,
                                           const ProfileOptions& opts = {}) {
  if (!(r0 > 0.0)) throw InvalidInitial("solve_from_interior: r0 must be > 0");
  if (!(u0 > 0.0)) throw InvalidInitial("solve_from_interior: u0 must be > 0");
  if (!(up0 * up0 < 1.0))
    throw InvalidInitial("solve_from_interior: need up0^2 < 1");
  detail::RadialRhs rhs{alpha, n_dim};
  ProfileSolution sol =
      detail::integrate_bidirectional(rhs, r0, u0, up0, opts, opts.h);
  sol.alpha = alpha;
  sol.axis_kind = AxisKind::rotation_z;
  sol.dim_n = n_dim;
  return sol;
}

enum class RotStart { axis_flat, axis_down, axis_up, interior };

enum class RotFeature {
  increasing,
  decreasing,
  global_min,
  global_max,
  hits_zero_at_b,
  hits_zero_at_a,
  unbounded,
};

inline const char* to_string(RotStart s) {
  switch (s) {
    case RotStart::axis_flat: return "axis_flat";
    case RotStart::axis_down: return "axis_down";
    case RotStart::axis_up: return "axis_up";
    case RotStart::interior: return "interior";
  }
  return "?";
}

inline const char* to_string(RotFeature f) {
  switch (f) {
    case RotFeature::increasing: return "increasing";
    case RotFeature::decreasing: return "decreasing";
    case RotFeature::global_min: return "global_min";
    case RotFeature::global_max: return "global_max";
    case RotFeature::hits_zero_at_b: return "hits_zero_at_b";
    case RotFeature::hits_zero_at_a: return "hits_zero_at_a";
    case RotFeature::unbounded: return "unbounded";
  }
  return "?";
}

struct RotClass {
  int alpha_sign = 0;
  RotStart start = RotStart::interior;
  std::set<RotFeature> features;
  // Measured endpoint values backing the feature flags.
  double u_at_b = 0.0, up_at_b = 0.0, u_at_a = 0.0, up_at_a = 0.0;
};

// Assigns start/features and validates them against the admissible cases of
// the rotational classification; an inconsistent combination signals an
// integrator bug and throws ClassificationMismatch.
inline RotClass classify_rotational(const ProfileSolution& sol) {
  RotClass rc;
  rc.alpha_sign = sol.alpha > 0 ? +1 : -1;
  const auto& s = sol.samples;

  rc.u_at_a = sol.left.u_limit;
  rc.up_at_a = sol.left.up_limit;
  rc.u_at_b = sol.right.u_limit;
  rc.up_at_b = sol.right.up_limit;

  const bool meets_axis = sol.left.tag == EndpointTag::axis || sol.r_min() < 1e-6;
  if (meets_axis) {
    const double up0 = s.front().up;
    if (std::abs(up0) < 0.05)
      rc.start = RotStart::axis_flat;
    else if (up0 < 0)
      rc.start = RotStart::axis_down;
    else
      rc.start = RotStart::axis_up;
  } else {
    rc.start = RotStart::interior;
  }

  const detail::SlopeSigns signs = detail::slope_sign_changes(s);
  const bool incr = signs.changes == 0 && s.back().u >= s.front().u;
  const bool decr = signs.changes == 0 && s.back().u < s.front().u;
  if (incr) rc.features.insert(RotFeature::increasing);
  if (decr) rc.features.insert(RotFeature::decreasing);
  if (signs.changes == 1) {
    rc.features.insert(signs.first_sign < 0 ? RotFeature::global_min
                                            : RotFeature::global_max);
  }
  if (sol.right.tag == EndpointTag::infinite)
    rc.features.insert(RotFeature::unbounded);
  if (std::isfinite(sol.right.r) && std::abs(rc.u_at_b) <= 1e-4 &&
      sol.right.tag != EndpointTag::window)
    rc.features.insert(RotFeature::hits_zero_at_b);
  if (rc.start == RotStart::interior && std::abs(rc.u_at_a) <= 1e-4 &&
      (sol.left.tag == EndpointTag::zero_height ||
       sol.left.tag == EndpointTag::lightlike_slope))
    rc.features.insert(RotFeature::hits_zero_at_a);

  // Case table by (sign alpha, start).
  using F = RotFeature;
  auto has = [&](F f) { return rc.features.count(f) > 0; };
  bool ok = false;
  if (rc.alpha_sign > 0) {
    switch (rc.start) {
      case RotStart::axis_flat:
      case RotStart::axis_up:
        ok = has(F::increasing) && has(F::unbounded);
        break;
      case RotStart::axis_down:
        ok = has(F::global_min) && has(F::unbounded);
        break;
      case RotStart::interior:
        ok = false;  // every alpha > 0 solution meets the axis
        break;
    }
  } else {
    switch (rc.start) {
      case RotStart::axis_flat:
      case RotStart::axis_down:
        ok = has(F::decreasing) && has(F::hits_zero_at_b);
        break;
      case RotStart::axis_up:
        ok = has(F::global_max) && has(F::hits_zero_at_b);
        break;
      case RotStart::interior:
        ok = has(F::global_max) && has(F::hits_zero_at_a) && has(F::hits_zero_at_b);
        break;
    }
  }
  if (!ok) {
    std::string msg = "classify_rotational: features {";
    for (auto f : rc.features) msg += std::string(to_string(f)) + ",";
    msg += "} contradict the case table for alpha_sign=" +
           std::to_string(rc.alpha_sign) + " start=" + to_string(rc.start);
    throw ClassificationMismatch(msg);
  }
  return rc;
}

}  // namespace smax
