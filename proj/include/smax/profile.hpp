#pragma once

// One-dimensional profiles u(r) of invariant singular maximal surfaces.
//
// The translation-invariant reduction is  u'' = alpha (1 - u'^2) / u  on
// u > 0, u'^2 < 1; the rotational reduction about the timelike axis adds the
// radial weight term, u'' = (1 - u'^2)(alpha/u - (n-1) u'/r).  Both are
// integrated with classical RK4 on a uniform output grid, with adaptive step
// halving near the endpoint events u -> 0 and u'^2 -> 1.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "smax/errors.hpp"

namespace smax {

enum class AxisKind { translation, rotation_z, rotation_x, lightlike };

enum class EndpointTag {
  axis,             // rotational solution reaching r = 0
  zero_height,      // u -> 0
  infinite,         // |r| ran past r_max
  lightlike_slope,  // u'^2 -> 1
  window,           // tabulation window, not a feature of the solution
};

inline const char* to_string(EndpointTag t) {
  switch (t) {
    case EndpointTag::axis: return "axis";
    case EndpointTag::zero_height: return "zero_height";
    case EndpointTag::infinite: return "infinite";
    case EndpointTag::lightlike_slope: return "lightlike_slope";
    case EndpointTag::window: return "window";
  }
  return "?";
}

inline const char* to_string(AxisKind k) {
  switch (k) {
    case AxisKind::translation: return "translation";
    case AxisKind::rotation_z: return "rotation_z";
    case AxisKind::rotation_x: return "rotation_x";
    case AxisKind::lightlike: return "lightlike";
  }
  return "?";
}

struct ProfileSample {
  double r;
  double u;
  double up;
};

struct EndpointInfo {
  double r = 0.0;  // extrapolated domain endpoint; +-inf when tag==infinite
  EndpointTag tag = EndpointTag::window;
  double u_limit = std::numeric_limits<double>::quiet_NaN();
  double up_limit = std::numeric_limits<double>::quiet_NaN();
};

struct ProfileSolution {
  double alpha = 0.0;
  AxisKind axis_kind = AxisKind::translation;
  int dim_n = 1;  // radial weight; 1 for the translation reduction
  std::vector<ProfileSample> samples;  // strictly increasing in r
  EndpointInfo left, right;
  // Analytic u'' per sample for closed forms; empty for integrated solutions.
  std::vector<double> upp;
  double grid_h = 0.0;  // output spacing of the uniform part

  double r_min() const { return samples.front().r; }
  double r_max() const { return samples.back().r; }

  const ProfileSample& at_nearest(double r) const {
    std::size_t best = 0;
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const double di = std::abs(samples[i].r - r);
      if (di < d) {
        d = di;
        best = i;
      }
    }
    return samples[best];
  }

  // Cubic Hermite evaluation of (u, u') between tabulated samples.
  ProfileSample eval(double r) const;
};

struct ProfileOptions {
  double h = 1e-3;       // uniform output spacing
  double r_max = 1e3;    // truncation radius; reaching it tags "infinite"
  double eps_u = 1e-8;   // zero-height event threshold on u
  double eps_s = 1e-10;  // lightlike event threshold on 1 - u'^2
};

namespace detail {

// u'' for the translation reduction.
struct TranslationRhs {
  double alpha;
  double operator()(double /*r*/, double u, double up) const {
    const double s = 1.0 - up * up;
    if (!(u > 0.0) || !(s > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return alpha * s / u;
  }
};

// u'' for the rotational reduction with weight r^(n-1).
struct RadialRhs {
  double alpha;
  int n_dim;
  double operator()(double r, double u, double up) const {
    const double s = 1.0 - up * up;
    if (!(u > 0.0) || !(s > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    if (r == 0.0) {
      // Regular limit at the axis: n u''(0) = alpha / u(0) for u'(0)=0.
      return alpha / (u * n_dim);
    }
    return s * (alpha / u - (n_dim - 1) * up / r);
  }
};

struct OdeState {
  double r, u, up;
};

// Strict sign alternations of u' across the samples, ignoring exact zeros
// (the critical start itself is not an extremum).
struct SlopeSigns {
  int changes = 0;
  int first_sign = 0;  // sign of the first nonzero u'
};

inline SlopeSigns slope_sign_changes(const std::vector<ProfileSample>& s) {
  SlopeSigns out;
  int last = 0;
  for (const auto& p : s) {
    const int sg = p.up > 1e-14 ? 1 : (p.up < -1e-14 ? -1 : 0);
    if (sg == 0) continue;
    if (out.first_sign == 0) out.first_sign = sg;
    if (last != 0 && sg != last) ++out.changes;
    last = sg;
  }
  return out;
}

template <class Rhs>
OdeState rk4_step(const Rhs& rhs, OdeState y, double h) {
  const double k1u = y.up;
  const double k1v = rhs(y.r, y.u, y.up);
  const double k2u = y.up + 0.5 * h * k1v;
  const double k2v = rhs(y.r + 0.5 * h, y.u + 0.5 * h * k1u, k2u);
  const double k3u = y.up + 0.5 * h * k2v;
  const double k3v = rhs(y.r + 0.5 * h, y.u + 0.5 * h * k2u, k3u);
  const double k4u = y.up + h * k3v;
  const double k4v = rhs(y.r + h, y.u + h * k3u, k4u);
  OdeState out;
  out.r = y.r + h;
  out.u = y.u + h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
  out.up = y.up + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
  return out;
}

struct DirectionResult {
  std::vector<ProfileSample> samples;  // excludes the initial point
  EndpointInfo endpoint;
};

// Hard admissibility floor, a factor below the event-detection thresholds:
// samples may land in the band (floor, threshold] where the event fires.
inline bool violates(const OdeState& y, const ProfileOptions& o) {
  return !(y.u > 0.25 * o.eps_u) || !(1.0 - y.up * y.up > 0.25 * o.eps_s) ||
         !std::isfinite(y.u) || !std::isfinite(y.up);
}

// Quadratic Lagrange extrapolation through three samples, evaluated at r.
inline double extrapolate3(const ProfileSample* s, double r,
                           double ProfileSample::*field) {
  const double r0 = s[0].r, r1 = s[1].r, r2 = s[2].r;
  const double f0 = s[0].*field, f1 = s[1].*field, f2 = s[2].*field;
  const double l0 = (r - r1) * (r - r2) / ((r0 - r1) * (r0 - r2));
  const double l1 = (r - r0) * (r - r2) / ((r1 - r0) * (r1 - r2));
  const double l2 = (r - r0) * (r - r1) / ((r2 - r0) * (r2 - r1));
  return l0 * f0 + l1 * f1 + l2 * f2;
}

// Integrates from y0 in direction dir (+1/-1), emitting samples on the
// uniform grid y0.r + dir*k*h; stops at an event, at r_max, or at axis_stop
// (for rotational left sweeps toward r = 0).
template <class Rhs>
DirectionResult integrate_direction(const Rhs& rhs, OdeState y0, int dir,
                                    const ProfileOptions& opts,
                                    double axis_stop = -1.0) {
  DirectionResult out;
  OdeState y = y0;
  bool done = false;
  while (!done) {
    const double r_target = y.r + dir * opts.h;
    if (axis_stop >= 0.0 && dir < 0 && r_target <= axis_stop) {
      out.endpoint.tag = EndpointTag::axis;
      break;
    }
    if (std::abs(r_target) > opts.r_max) {
      out.endpoint.tag = EndpointTag::infinite;
      break;
    }
    // Advance to r_target with adaptive substeps.
    EndpointTag event = EndpointTag::window;
    while (dir * (r_target - y.r) > 0.0) {
      double h = r_target - y.r;  // signed
      const double h_floor = 1e-13 * std::max(1.0, std::abs(y.r));
      // Stiffness control near the lightlike slope: keep 1-u'^2 resolved.
      // The factor 80 keeps the first-integral drift of accepted solutions
      // below 1e-7 (RK4 error terms carry powers of h d(u'')/du' ~ h u'/u).
      const double upp = rhs(y.r, y.u, y.up);
      const double s = 1.0 - y.up * y.up;
      if (std::isfinite(upp) && std::abs(upp) > 0.0) {
        const double h_allow = s / (80.0 * std::abs(upp));
        if (std::abs(h) > h_allow) h = dir * std::max(h_allow, h_floor);
      }
      bool accepted = false;
      while (true) {
        if (std::abs(h) < h_floor) {
          // Identify which constraint the next step runs into.
          const OdeState probe = rk4_step(rhs, y, dir * h_floor);
          if (probe.u <= opts.eps_u || y.u <= 4.0 * opts.eps_u)
            event = EndpointTag::zero_height;
          else if (!(1.0 - probe.up * probe.up > opts.eps_s) ||
                   1.0 - y.up * y.up <= 4.0 * opts.eps_s)
            event = EndpointTag::lightlike_slope;
          else
            throw StepCollapse("profile integrator: step underflow at r=" +
                               std::to_string(y.r));
          break;
        }
        OdeState trial = rk4_step(rhs, y, h);
        if (!violates(trial, opts)) {
          y = trial;
          accepted = true;
          break;
        }
        h *= 0.5;
      }
      if (!accepted) break;  // event identified below the step floor
      if (y.u <= opts.eps_u) {
        event = EndpointTag::zero_height;
        break;
      }
      if (1.0 - y.up * y.up <= opts.eps_s) {
        event = EndpointTag::lightlike_slope;
        break;
      }
    }
    if (event != EndpointTag::window) {
      // Stopped at an endpoint event (possibly mid-interval).
      const double r_prev = out.samples.empty() ? y0.r : out.samples.back().r;
      if (y.r != r_prev) out.samples.push_back({y.r, y.u, y.up});
      out.endpoint.tag = event;
      done = true;
    } else {
      out.samples.push_back({y.r, y.u, y.up});
    }
  }

  // Endpoint location and one-sided limits.
  const std::size_t n = out.samples.size();
  if (out.endpoint.tag == EndpointTag::infinite ||
      out.endpoint.tag == EndpointTag::window) {
    out.endpoint.r = (out.endpoint.tag == EndpointTag::infinite)
                         ? dir * std::numeric_limits<double>::infinity()
                         : (n ? out.samples.back().r : y0.r);
    if (n) {
      out.endpoint.u_limit = out.samples.back().u;
      out.endpoint.up_limit = out.samples.back().up;
    }
  } else if (n >= 3) {
    ProfileSample last3[3] = {out.samples[n - 3], out.samples[n - 2],
                              out.samples[n - 1]};
    const ProfileSample& e = out.samples.back();
    double r_end = e.r;
    if (out.endpoint.tag != EndpointTag::axis && std::abs(e.up) > 0.5)
      r_end = e.r + dir * e.u / std::abs(e.up);
    else if (out.endpoint.tag == EndpointTag::axis)
      r_end = 0.0;
    out.endpoint.r = r_end;
    out.endpoint.u_limit = extrapolate3(last3, r_end, &ProfileSample::u);
    out.endpoint.up_limit = extrapolate3(last3, r_end, &ProfileSample::up);
  } else {
    out.endpoint.r = n ? out.samples.back().r : y0.r;
    if (n) {
      out.endpoint.u_limit = out.samples.back().u;
      out.endpoint.up_limit = out.samples.back().up;
    } else {
      out.endpoint.u_limit = y0.u;
      out.endpoint.up_limit = y0.up;
    }
  }
  return out;
}

template <class Rhs>
ProfileSolution integrate_bidirectional(const Rhs& rhs, double r0, double u0,
                                        double up0, const ProfileOptions& opts,
                                        double axis_stop = -1.0) {
  const OdeState y0{r0, u0, up0};
  DirectionResult right = integrate_direction(rhs, y0, +1, opts, axis_stop);
  DirectionResult left = integrate_direction(rhs, y0, -1, opts, axis_stop);

  ProfileSolution sol;
  sol.grid_h = opts.h;
  sol.samples.reserve(left.samples.size() + right.samples.size() + 1);
  for (auto it = left.samples.rbegin(); it != left.samples.rend(); ++it)
    sol.samples.push_back(*it);
  sol.samples.push_back({r0, u0, up0});
  for (const auto& s : right.samples) sol.samples.push_back(s);
  sol.left = left.endpoint;
  sol.right = right.endpoint;
  return sol;
}

}  // namespace detail

inline ProfileSample ProfileSolution::eval(double r) const {
  const auto& s = samples;
  if (r <= s.front().r) return s.front();
  if (r >= s.back().r) return s.back();
  std::size_t lo = 0, hi = s.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    (s[mid].r <= r ? lo : hi) = mid;
  }
  const double h = s[hi].r - s[lo].r;
  const double t = (r - s[lo].r) / h;
  const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
  const double h10 = t * (1 - t) * (1 - t);
  const double h01 = t * t * (3 - 2 * t);
  const double h11 = t * t * (t - 1);
  ProfileSample out;
  out.r = r;
  out.u = h00 * s[lo].u + h10 * h * s[lo].up + h01 * s[hi].u + h11 * h * s[hi].up;
  // Derivative of the Hermite interpolant.
  const double d00 = 6 * t * (t - 1) / h;
  const double d10 = (3 * t - 1) * (t - 1);
  const double d01 = -6 * t * (t - 1) / h;
  const double d11 = t * (3 * t - 2);
  out.up = d00 * s[lo].u + d10 * s[lo].up + d01 * s[hi].u + d11 * s[hi].up;
  return out;
}

// Integrates u'' = alpha (1-u'^2)/u bidirectionally from r = 0 to the maximal
// domain, stopping at endpoint events.
inline ProfileSolution solve_profile_1d(double alpha, double u0, double up0,
                                        const ProfileOptions& opts = {}) {
  if (!(u0 > 0.0)) throw InvalidInitial("solve_profile_1d: u0 must be positive");
  if (!(up0 * up0 < 1.0))
    throw InvalidInitial("solve_profile_1d: need up0^2 < 1 (spacelike)");
  detail::TranslationRhs rhs{alpha};
  ProfileSolution sol = detail::integrate_bidirectional(rhs, 0.0, u0, up0, opts);
  sol.alpha = alpha;
  sol.axis_kind = AxisKind::translation;
  sol.dim_n = 1;
  return sol;
}

// u(x) = sin(a x + b)/a on (-b/a, (pi - b)/a): the alpha = -1 profile.
inline ProfileSolution closed_form_catenary(double a, double b, int n = 1001,
                                            double inset = 0.02) {
  if (a == 0.0) throw InvalidInitial("closed_form_catenary: a must be nonzero");
  if (a < 0.0) {
    // sin(ax+b)/a = sin(-ax-b)/(-a): same function, normalized slope sign.
    a = -a;
    b = -b;
  }
  ProfileSolution sol;
  sol.alpha = -1.0;
  sol.axis_kind = AxisKind::translation;
  sol.dim_n = 1;
  const double x_lo = -b / a, x_hi = (M_PI - b) / a;
  const double margin = inset * (x_hi - x_lo);
  const double lo = x_lo + margin, hi = x_hi - margin;
  const double h = (hi - lo) / (n - 1);
  sol.grid_h = h;
  sol.samples.resize(n);
  sol.upp.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x = lo + i * h;
    const double ph = a * x + b;
    sol.samples[i] = {x, std::sin(ph) / a, std::cos(ph)};
    sol.upp[i] = -a * std::sin(ph);
  }
  sol.left = {x_lo, EndpointTag::zero_height, 0.0, 1.0};
  sol.right = {x_hi, EndpointTag::zero_height, 0.0, -1.0};
  return sol;
}

// u(x) = sqrt(1 + a^2 x^2)/a: the alpha = +1 profile (upper hyperbola
// branch, constant planar curvature a).
inline ProfileSolution closed_form_hyperbola(double a, double x_window = 5.0,
                                             int n = 1001) {
  if (!(a > 0.0)) throw InvalidInitial("closed_form_hyperbola: a must be > 0");
  ProfileSolution sol;
  sol.alpha = 1.0;
  sol.axis_kind = AxisKind::translation;
  sol.dim_n = 1;
  const double h = 2.0 * x_window / (n - 1);
  sol.grid_h = h;
  sol.samples.resize(n);
  sol.upp.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x = -x_window + i * h;
    const double w = std::sqrt(1.0 + a * a * x * x);
    sol.samples[i] = {x, w / a, a * x / w};
    sol.upp[i] = a / (w * w * w);
  }
  const double inf = std::numeric_limits<double>::infinity();
  sol.left = {-inf, EndpointTag::infinite, inf, -1.0};
  sol.right = {inf, EndpointTag::infinite, inf, 1.0};
  return sol;
}

// Planar Lorentzian curvature of the graph, kappa = u'' / (1-u'^2)^(3/2).
inline double planar_curvature(const ProfileSolution& sol, std::size_t i) {
  const double up = sol.samples[i].up;
  const double s = 1.0 - up * up;
  double upp;
  if (!sol.upp.empty()) {
    upp = sol.upp[i];
  } else {
    upp = detail::TranslationRhs{sol.alpha}(sol.samples[i].r, sol.samples[i].u, up);
  }
  return upp / (s * std::sqrt(s));
}

struct FirstIntegral {
  double mu = 0.0;
  double max_drift = 0.0;
};

// First integral of the translation reduction: 1/(1-u'^2) = mu u^(2 alpha).
// The drift at each sample is normalized by mu * max(1, u^(2 alpha)), and
// samples with 1-u'^2 < 1e-4 are excluded: evaluating 1/(1-u'^2) there is
// ill conditioned (a one-ulp error in u' already shifts it by ~1e-12/(1-u'^2))
// and would only measure roundoff amplification, not conservation.
inline FirstIntegral first_integral_mu(const ProfileSolution& sol) {
  FirstIntegral out;
  // Anchor mu at the best-conditioned sample (largest 1-u'^2); any sample
  // determines it in exact arithmetic.
  std::size_t i0 = 0;
  for (std::size_t i = 1; i < sol.samples.size(); ++i)
    if (std::abs(sol.samples[i].up) < std::abs(sol.samples[i0].up)) i0 = i;
  const auto& s0 = sol.samples[i0];
  out.mu = 1.0 / ((1.0 - s0.up * s0.up) * std::pow(s0.u, 2.0 * sol.alpha));
  for (const auto& s : sol.samples) {
    const double sp = 1.0 - s.up * s.up;
    if (sp < 1e-4) continue;
    const double lhs = 1.0 / sp;
    const double rhs = out.mu * std::pow(s.u, 2.0 * sol.alpha);
    const double scale = out.mu * std::max(1.0, std::pow(s.u, 2.0 * sol.alpha));
    out.max_drift = std::max(out.max_drift, std::abs(lhs - rhs) / scale);
  }
  return out;
}

// Pointwise residual of u'' = alpha (1-u'^2)/u.  Uses the tabulated analytic
// u'' when available, otherwise a 5-point central difference of u' on the
// uniform part of the grid.  Returns one value per usable sample.
inline std::vector<double> residual_translation(const ProfileSolution& sol,
                                                double alpha) {
  std::vector<double> res;
  const auto& s = sol.samples;
  const std::size_t n = s.size();
  auto rhs_term = [&](std::size_t i) {
    return alpha * (1.0 - s[i].up * s[i].up) / s[i].u;
  };
  if (!sol.upp.empty()) {
    res.resize(n);
    for (std::size_t i = 0; i < n; ++i) res[i] = sol.upp[i] - rhs_term(i);
    return res;
  }
  const double h = sol.grid_h;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    bool uniform = true;
    for (int k = -2; k <= 2; ++k)
      if (std::abs(s[i + k].r - (s[i].r + k * h)) > 1e-12 * std::max(1.0, std::abs(s[i].r)))
        uniform = false;
    if (!uniform) continue;
    const double upp =
        (-s[i + 2].up + 8.0 * s[i + 1].up - 8.0 * s[i - 1].up + s[i - 2].up) /
        (12.0 * h);
    res.push_back(upp - rhs_term(i));
  }
  return res;
}

// Pointwise residual of u'' = (1-u'^2)(alpha/u - (n-1)u'/r), the form of the
// rotational equation that stays regular across u'^2 = 1 (it is satisfied by
// the cone u = sqrt(alpha) r for every alpha > 0).
inline std::vector<double> residual_rotational(const ProfileSolution& sol,
                                               double alpha, int n_dim = 2) {
  std::vector<double> res;
  const auto& s = sol.samples;
  const std::size_t n = s.size();
  auto rhs_term = [&](std::size_t i) {
    const double sp = 1.0 - s[i].up * s[i].up;
    return sp * (alpha / s[i].u - (n_dim - 1) * s[i].up / s[i].r);
  };
  if (!sol.upp.empty()) {
    res.resize(n);
    for (std::size_t i = 0; i < n; ++i) res[i] = sol.upp[i] - rhs_term(i);
    return res;
  }
  const double h = sol.grid_h;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    bool uniform = true;
    for (int k = -2; k <= 2; ++k)
      if (std::abs(s[i + k].r - (s[i].r + k * h)) > 1e-12 * std::max(1.0, std::abs(s[i].r)))
        uniform = false;
    if (!uniform) continue;
    const double upp =
        (-s[i + 2].up + 8.0 * s[i + 1].up - 8.0 * s[i - 1].up + s[i - 2].up) /
        (12.0 * h);
    res.push_back(upp - rhs_term(i));
  }
  return res;
}

inline double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// One named measurement of a qualitative property.
struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;
};

struct QualReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

// Qualitative classification of a translation profile started from a critical
// point: symmetry about r = 0, convexity/concavity by the sign of alpha, and
// the endpoint limits.
inline QualReport classify_profile(const ProfileSolution& sol) {
  QualReport rep;
  const auto& s = sol.samples;
  const std::size_t n = s.size();

  // Symmetry u(r) = u(-r) over mirrored grid samples.
  std::size_t i0 = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(s[i].r) < std::abs(s[i0].r)) i0 = i;
  double asym = 0.0;
  for (std::size_t k = 1; i0 >= k && i0 + k < n; ++k) {
    if (std::abs(s[i0 - k].r + s[i0 + k].r) > 1e-9) break;  // event-clamped tail
    asym = std::max(asym, std::abs(s[i0 - k].u - s[i0 + k].u) /
                              (1.0 + std::abs(s[i0 + k].u)));
  }
  rep.checks.push_back({"symmetric", asym <= 1e-9, asym});

  // Monotone slope: u'' has the sign of alpha everywhere.
  double worst_mono = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double d = (s[i].up - s[i - 1].up) * (sol.alpha > 0 ? 1.0 : -1.0);
    worst_mono = std::min(worst_mono, d);
  }
  rep.checks.push_back(
      {sol.alpha > 0 ? "convex" : "concave", worst_mono >= -1e-12, worst_mono});

  // Unique interior critical point at r ~ 0.
  const detail::SlopeSigns signs = detail::slope_sign_changes(s);
  rep.checks.push_back({sol.alpha > 0 ? "unique_global_min" : "unique_global_max",
                        signs.changes == 1, double(signs.changes)});

  if (sol.alpha > 0) {
    const bool unbounded = sol.left.tag == EndpointTag::infinite &&
                           sol.right.tag == EndpointTag::infinite;
    rep.checks.push_back({"domain_unbounded", unbounded, unbounded ? 1.0 : 0.0});
    rep.checks.push_back({"u_to_infinity", s.back().u > 10.0 * s[i0].u, s.back().u});
    rep.checks.push_back({"slope_to_one", true, s.back().up});
  } else {
    const bool bounded = std::isfinite(sol.left.r) && std::isfinite(sol.right.r);
    rep.checks.push_back({"domain_bounded", bounded, sol.right.r});
    rep.checks.push_back(
        {"b_symmetric", std::abs(sol.left.r + sol.right.r) <= 1e-6, sol.left.r});
    rep.checks.push_back(
        {"u_zero_at_b", std::abs(sol.right.u_limit) <= 1e-4, sol.right.u_limit});
    rep.checks.push_back({"slope_minus_one_at_b",
                          std::abs(sol.right.up_limit + 1.0) <= 1e-2,
                          sol.right.up_limit});
  }
  return rep;
}

}  // namespace smax
