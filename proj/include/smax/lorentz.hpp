#pragma once

// Linear algebra of the Lorentz-Minkowski 3-space L^3: the affine space R^3
// with the scalar product <u,v> = u.x v.x + u.y v.y - u.z v.z.  The z-axis is
// the timelike direction; the reference axis vector of the singular maximal
// surface equation is a = (0,0,1).

#include <cmath>
#include <cstdint>

namespace smax {

enum class Causal : std::uint8_t { spacelike, timelike, lightlike, zero };

struct LVec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr LVec3 operator+(LVec3 a, LVec3 b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr LVec3 operator-(LVec3 a, LVec3 b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr LVec3 operator*(double s, LVec3 v) {
    return {s * v.x, s * v.y, s * v.z};
  }
  friend constexpr LVec3 operator-(LVec3 v) { return {-v.x, -v.y, -v.z}; }
};

constexpr double minkowski_dot(LVec3 u, LVec3 v) {
  return u.x * v.x + u.y * v.y - u.z * v.z;
}

constexpr double minkowski_sq(LVec3 v) { return minkowski_dot(v, v); }

// Euclidean length, used only for mesh grading / tie-breaking.
inline double euclid_norm(LVec3 v) {
  return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
}

// Classification by the exact sign of <v,v>; no epsilon.  Callers that need a
// tolerance test |<v,v>| < eps themselves.
constexpr Causal causal_character(LVec3 v) {
  if (v.x == 0.0 && v.y == 0.0 && v.z == 0.0) return Causal::zero;
  const double q = minkowski_sq(v);
  if (q > 0.0) return Causal::spacelike;
  if (q < 0.0) return Causal::timelike;
  return Causal::lightlike;
}

// Lorentzian cross product: the unique w with <w,t> = det(u,v,t) for all t.
// Equals the Euclidean cross product with the z component negated.
constexpr LVec3 lorentz_cross(LVec3 u, LVec3 v) {
  const double ex = u.y * v.z - u.z * v.y;
  const double ey = u.z * v.x - u.x * v.z;
  const double ez = u.x * v.y - u.y * v.x;
  return {ex, ey, -ez};
}

constexpr double det3(LVec3 a, LVec3 b, LVec3 c) {
  return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
         a.z * (b.x * c.y - b.y * c.x);
}

// Normalizes a timelike vector to <N,N> = -1 and flips it future-pointing
// (z > 0).  Returns the zero vector if v is not timelike.
inline LVec3 unit_future_timelike(LVec3 v) {
  const double q = minkowski_sq(v);
  if (!(q < 0.0)) return {0.0, 0.0, 0.0};
  const double s = 1.0 / std::sqrt(-q);
  LVec3 n{s * v.x, s * v.y, s * v.z};
  if (n.z < 0.0) n = -n;
  return n;
}

inline bool is_horizontal(LVec3 v) { return v.z == 0.0; }

}  // namespace smax
