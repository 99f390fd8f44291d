#include <catch_amalgamated.hpp>

#include <cmath>

#include "smax/rotational.hpp"
#include "oracles.hpp"

using namespace smax;

TEST_CASE("picard fixed point matches the axis expansion for alpha=2") {
  PicardDiagnostics diag;
  const ProfileSolution sol = picard_solve(2.0, 1.0, {}, &diag);
  CHECK(diag.delta_used == Catch::Approx(0.1));
  // u(r) = 1 + r^2/2 + O(r^4) since u''(0) = alpha/(2 u0) = 1.
  CHECK(std::abs(sol.eval(0.01).u - (1.0 + 0.5 * 0.01 * 0.01)) < 1e-8);
  CHECK(sol.samples.front().up == 0.0);

  // Finite-difference u''(0) against alpha/(2 u0).
  const double h = 16.0 * sol.grid_h;
  const double d = 2.0 * (sol.eval(h).u - 1.0) / (h * h);
  CHECK(std::abs(d - 1.0) < 1e-4);
}

TEST_CASE("picard for negative alpha bends down") {
  const ProfileSolution sol = picard_solve(-1.0, 1.0);
  CHECK(sol.samples.back().up < 0.0);
  const double h = 16.0 * sol.grid_h;
  const double d = 2.0 * (sol.eval(h).u - 1.0) / (h * h);
  CHECK(std::abs(d - (-0.5)) < 1e-4);
}

TEST_CASE("picard iterates stay in the contraction ball") {
  for (double alpha : {-2.0, -1.0, 1.0, 2.0}) {
    for (double u0 : {0.5, 1.0, 2.0}) {
      PicardDiagnostics diag;
      picard_solve(alpha, u0, {}, &diag);
      CHECK(diag.max_ball_radius < std::min(u0, 1.0));
    }
  }
}

TEST_CASE("picard rejects bad data and contracts after halvings when stiff") {
  CHECK_THROWS_AS(picard_solve(1.0, -0.5), InvalidInitial);
  // Large |alpha|/u0 contracts only on a smaller interval.
  PicardDiagnostics diag;
  const ProfileSolution sol = picard_solve(-40.0, 0.2, {}, &diag);
  CHECK(diag.delta_used <= 0.1 * 0.2);
  CHECK(sol.samples.front().u == 0.2);
}

TEST_CASE("picard agrees with RK continuation on the overlap") {
  for (double alpha : {4.0, 2.0, -1.0}) {
    const ProfileSolution pic = picard_solve(alpha, 1.0);
    const std::size_t mid = (pic.samples.size() - 1) / 2;
    detail::RadialRhs rhs{alpha, 2};
    detail::OdeState y{pic.samples[mid].r, pic.samples[mid].u, pic.samples[mid].up};
    double worst = 0.0;
    for (std::size_t j = mid + 1; j < pic.samples.size(); ++j) {
      const double target = pic.samples[j].r;
      // 4 substeps per grid interval keeps the RK error far below 1e-8.
      const double hh = (target - y.r) / 4.0;
      for (int k = 0; k < 4; ++k) y = detail::rk4_step(rhs, y, hh);
      worst = std::max(worst, std::abs(y.u - pic.samples[j].u));
    }
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("alpha>0 axis solutions increase without bound") {
  ProfileOptions opts;
  opts.r_max = 60.0;
  const ProfileSolution sol = solve_rotational_axis(2.0, 1.0, {}, opts);
  CHECK(sol.right.tag == EndpointTag::infinite);
  const ProfileSample s50 = sol.eval(50.0);
  CHECK(s50.u > 40.0);
  CHECK(s50.up > 0.0);
  CHECK(s50.up < 1.0);
  const RotClass rc = classify_rotational(sol);
  CHECK(rc.start == RotStart::axis_flat);
  CHECK(rc.features.count(RotFeature::increasing) == 1);
  CHECK(rc.features.count(RotFeature::unbounded) == 1);
}

TEST_CASE("alpha<0 axis solutions hit zero height with lightlike slope") {
  const ProfileSolution sol = solve_rotational_axis(-1.0, 1.0);
  CHECK(std::isfinite(sol.right.r));
  CHECK(std::abs(sol.right.u_limit) <= 1e-4);
  CHECK(std::abs(sol.right.up_limit + 1.0) <= 1e-2);
  const RotClass rc = classify_rotational(sol);
  CHECK(rc.start == RotStart::axis_flat);
  CHECK(rc.features.count(RotFeature::decreasing) == 1);
  CHECK(rc.features.count(RotFeature::hits_zero_at_b) == 1);
}

TEST_CASE("cone profiles satisfy the regular form of the rotational equation") {
  for (double alpha : {1.0, 2.0, 4.0}) {
    const double c = std::sqrt(alpha);
    ProfileSolution cone;
    cone.alpha = alpha;
    cone.axis_kind = AxisKind::rotation_z;
    cone.dim_n = 2;
    const int n = 1000;
    cone.samples.resize(n);
    cone.upp.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
      const double r = 0.1 * std::pow(1000.0, i / double(n - 1));  // [0.1, 100]
      cone.samples[i] = {r, c * r, c};
    }
    const auto res = residual_rotational(cone, alpha, 2);
    CHECK(res.size() == std::size_t(n));
    CHECK(max_abs(res) < 1e-12);
  }
}

TEST_CASE("interior data for alpha<0 gives a two-sided lightlike arc") {
  const ProfileSolution sol = solve_from_interior(-1.0, 1.0, 0.5, 0.0);
  CHECK(sol.left.r > 0.0);
  CHECK(std::abs(sol.left.up_limit - 1.0) <= 1e-2);
  CHECK(std::abs(sol.right.up_limit + 1.0) <= 1e-2);
  CHECK(std::abs(sol.left.u_limit) <= 1e-4);
  CHECK(std::abs(sol.right.u_limit) <= 1e-4);
  const RotClass rc = classify_rotational(sol);
  CHECK(rc.start == RotStart::interior);
  CHECK(rc.features.count(RotFeature::global_max) == 1);
  CHECK(rc.features.count(RotFeature::hits_zero_at_a) == 1);
  CHECK(rc.features.count(RotFeature::hits_zero_at_b) == 1);
}

TEST_CASE("the spacelike cone is reproduced from interior data") {
  ProfileOptions opts;
  opts.r_max = 3.0;
  const ProfileSolution sol = solve_from_interior(0.25, 1.0, 0.5, 0.5, 2, opts);
  CHECK(std::abs(sol.eval(2.0).u - 1.0) < 1e-9);
}

TEST_CASE("interior endpoints match the brute-force oracle") {
  ProfileOptions opts;
  const ProfileSolution sol = solve_from_interior(-2.0, 2.0, 1.0, 0.0, 2, opts);
  auto f = [](double r, double u, double up) {
    return (1.0 - up * up) * (-2.0 / u - up / r);
  };
  const oracle::State yr = oracle::march(f, 2.0, 1.0, 0.0, opts.h / 100.0, +1, 50.0);
  const oracle::State yl = oracle::march(f, 2.0, 1.0, 0.0, opts.h / 100.0, -1, 50.0);
  REQUIRE(yr.stopped);
  REQUIRE(yl.stopped);
  const double width_oracle =
      oracle::endpoint_estimate(yr, +1) - oracle::endpoint_estimate(yl, -1);
  CHECK(std::abs((sol.right.r - sol.left.r) - width_oracle) < 1e-6);
}

TEST_CASE("claim A: zero height at positive radius forces lightlike slope, alpha<0") {
  for (double alpha : {-1.0, -2.0}) {
    const ProfileSolution sol = solve_rotational_axis(alpha, 1.0);
    // find the first sample with u <= 1e-4
    for (const auto& s : sol.samples) {
      if (s.u <= 1e-4) {
        CHECK(s.r > 0.0);
        CHECK(std::abs(s.up * s.up - 1.0) <= 2e-2);
        break;
      }
    }
  }
}

TEST_CASE("axis starts with slope strictly inside (0,1) are not constructible") {
  // The axis problem only accepts u'(0) = 0 (picard_solve), and interior
  // solves require r0 > 0: requesting r0 = 0 is rejected.
  CHECK_THROWS_AS(solve_from_interior(-1.0, 0.0, 1.0, 0.5), InvalidInitial);
  CHECK_THROWS_AS(solve_from_interior(-1.0, 1.0, 1.0, 1.0), InvalidInitial);
}

TEST_CASE("classification mismatch is raised on doctored data") {
  ProfileSolution fake;
  fake.alpha = 2.0;  // positive alpha claiming an interior-only arc
  fake.axis_kind = AxisKind::rotation_z;
  fake.dim_n = 2;
  fake.grid_h = 0.01;
  for (int i = 0; i <= 100; ++i) {
    const double r = 1.0 + 0.01 * i;
    fake.samples.push_back({r, 1.0 + 0.3 * std::sin(M_PI * i / 100.0), 0.0});
  }
  fake.left = {1.0, EndpointTag::lightlike_slope, 0.0, 1.0};
  fake.right = {2.0, EndpointTag::lightlike_slope, 0.0, -1.0};
  CHECK_THROWS_AS(classify_rotational(fake), ClassificationMismatch);
}
