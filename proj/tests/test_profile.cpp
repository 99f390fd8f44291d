#include <catch_amalgamated.hpp>

#include <cmath>

#include "smax/profile.hpp"
#include "oracles.hpp"

using namespace smax;

TEST_CASE("catenary closed form") {
  const ProfileSolution c1 = closed_form_catenary(1.0, 0.0);
  CHECK(std::abs(c1.eval(M_PI / 2).u - 1.0) < 1e-12);
  CHECK(c1.left.tag == EndpointTag::zero_height);
  CHECK(c1.right.tag == EndpointTag::zero_height);

  const ProfileSolution c2 = closed_form_catenary(2.0, 0.0);
  double umax = 0;
  for (const auto& s : c2.samples) umax = std::max(umax, s.u);
  CHECK(std::abs(umax - 0.5) < 1e-6);

  // Substitution check of the reduction at the tabulated samples.
  const auto res = residual_translation(c1, -1.0);
  CHECK(res.size() >= 100);
  CHECK(max_abs(res) < 1e-12);
}

TEST_CASE("hyperbola closed form") {
  const ProfileSolution h1 = closed_form_hyperbola(1.0);
  CHECK(std::abs(h1.eval(0.0).u - 1.0) < 1e-12);
  CHECK(std::abs(h1.eval(0.0).up) < 1e-12);
  const ProfileSolution h2 = closed_form_hyperbola(2.0);
  CHECK(std::abs(h2.eval(0.0).u - 0.5) < 1e-12);

  CHECK(max_abs(residual_translation(h1, 1.0)) < 1e-12);

  // Constant planar curvature kappa = a.
  for (std::size_t i = 0; i < h2.samples.size(); i += 97)
    CHECK(std::abs(planar_curvature(h2, i) - 2.0) < 1e-8);
}

TEST_CASE("alpha=-1 axis-flat solve reproduces cos r") {
  ProfileOptions opts;
  const ProfileSolution sol = solve_profile_1d(-1.0, 1.0, 0.0, opts);
  CHECK(std::abs(sol.right.r - M_PI / 2) < 1e-6);
  CHECK(std::abs(sol.left.r + M_PI / 2) < 1e-6);
  double worst = 0;
  for (const auto& s : sol.samples) worst = std::max(worst, std::abs(s.u - std::cos(s.r)));
  CHECK(worst < 1e-9);
  CHECK(std::abs(sol.right.u_limit) < 1e-6);
  CHECK(std::abs(sol.right.up_limit + 1.0) < 1e-2);
  CHECK(std::abs(sol.left.up_limit - 1.0) < 1e-2);
}

TEST_CASE("alpha=1 axis-flat solve reproduces sqrt(1+r^2)") {
  ProfileOptions opts;
  opts.r_max = 5.0;
  const ProfileSolution sol = solve_profile_1d(1.0, 1.0, 0.0, opts);
  CHECK(std::abs(sol.eval(1.0).u - std::sqrt(2.0)) < 1e-8);
  CHECK(sol.right.tag == EndpointTag::infinite);
  CHECK(sol.left.tag == EndpointTag::infinite);
}

TEST_CASE("alpha=-2 domain endpoint matches the brute-force oracle") {
  ProfileOptions opts;
  const ProfileSolution sol = solve_profile_1d(-2.0, 1.0, 0.0, opts);
  auto f = [](double, double u, double up) { return -2.0 * (1.0 - up * up) / u; };
  const oracle::State y = oracle::march(f, 0.0, 1.0, 0.0, opts.h / 100.0, +1, 10.0);
  REQUIRE(y.stopped);
  const double b_oracle = oracle::endpoint_estimate(y, +1);
  CHECK(std::abs(sol.right.r - b_oracle) < 1e-6);
  CHECK(std::abs(sol.left.r + b_oracle) < 1e-6);
}

TEST_CASE("first integral: mu and drift") {
  const ProfileSolution hyp = closed_form_hyperbola(1.0);
  const FirstIntegral fi_h = first_integral_mu(hyp);
  CHECK(std::abs(fi_h.mu - 1.0) < 1e-12);
  CHECK(fi_h.max_drift < 1e-10);

  const ProfileSolution cat = closed_form_catenary(1.0, M_PI / 2);
  const FirstIntegral fi_c = first_integral_mu(cat);
  CHECK(std::abs(fi_c.mu - 1.0) < 1e-10);
  CHECK(fi_c.max_drift < 1e-10);

  const ProfileSolution num = solve_profile_1d(-2.0, 1.0, 0.0);
  CHECK(first_integral_mu(num).max_drift < 1e-7);
}

TEST_CASE("first-integral drift gate holds across a small sweep") {
  for (double alpha : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) {
    for (double u0 : {0.5, 1.0, 2.0}) {
      ProfileOptions opts;
      opts.r_max = 20.0;
      const ProfileSolution sol = solve_profile_1d(alpha, u0, 0.0, opts);
      CHECK(first_integral_mu(sol).max_drift < 1e-7);
    }
  }
}

TEST_CASE("classification of translation profiles") {
  ProfileOptions opts;
  opts.r_max = 50.0;
  const QualReport pos = classify_profile(solve_profile_1d(1.0, 1.0, 0.0, opts));
  CHECK(pos.all_pass());
  const CheckResult* sym = pos.find("symmetric");
  REQUIRE(sym != nullptr);
  CHECK(sym->measured <= 1e-9);
  const CheckResult* slope = pos.find("slope_to_one");
  REQUIRE(slope != nullptr);
  CHECK(std::abs(slope->measured - 1.0) < 2e-2);

  const QualReport neg = classify_profile(solve_profile_1d(-1.0, 1.0, 0.0));
  CHECK(neg.all_pass());
  CHECK(std::abs(neg.find("u_zero_at_b")->measured) <= 1e-4);
  CHECK(std::abs(neg.find("slope_minus_one_at_b")->measured + 1.0) <= 1e-2);

  const QualReport m3 = classify_profile(solve_profile_1d(-3.0, 2.0, 0.0));
  CHECK(m3.find("unique_global_max")->pass);
}

TEST_CASE("integrator preserves the spacelike band and positivity") {
  for (double alpha : {-2.5, -1.0, 0.7, 1.5}) {
    ProfileOptions opts;
    opts.r_max = 10.0;
    const ProfileSolution sol =
        solve_profile_1d(alpha, oracle::uniform(0.3, 2.0), oracle::uniform(-0.5, 0.5), opts);
    for (const auto& s : sol.samples) {
      CHECK(s.u > 0.0);
      CHECK(s.up * s.up < 1.0);
    }
    for (std::size_t i = 1; i < sol.samples.size(); ++i)
      CHECK(sol.samples[i].r > sol.samples[i - 1].r);
  }
}

TEST_CASE("u''(0) = alpha/u0 at a critical start") {
  for (double alpha : {-2.0, 1.0}) {
    for (double u0 : {0.5, 1.7}) {
      const ProfileSolution sol = solve_profile_1d(alpha, u0, 0.0);
      const double h = sol.grid_h;
      const double upp0 = (sol.eval(h).up - sol.eval(-h).up) / (2 * h);
      CHECK(std::abs(upp0 - alpha / u0) < 1e-5 * std::max(1.0, std::abs(alpha / u0)));
    }
  }
}

TEST_CASE("mirror symmetry for random critical starts") {
  for (int trial = 0; trial < 5; ++trial) {
    const double alpha = oracle::uniform(-2.0, 2.0);
    const double u0 = oracle::uniform(0.4, 2.0);
    if (std::abs(alpha) < 0.1) continue;
    ProfileOptions opts;
    opts.r_max = 10.0;
    const ProfileSolution sol = solve_profile_1d(alpha, u0, 0.0, opts);
    const auto& s = sol.samples;
    std::size_t i0 = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (std::abs(s[i].r) < std::abs(s[i0].r)) i0 = i;
    for (std::size_t k = 1; i0 >= k && i0 + k < s.size(); ++k) {
      if (std::abs(s[i0 - k].r + s[i0 + k].r) > 1e-9) break;
      CHECK(std::abs(s[i0 - k].u - s[i0 + k].u) <= 1e-9 * (1.0 + std::abs(s[i0 + k].u)));
    }
  }
}

TEST_CASE("invalid initial data is rejected") {
  CHECK_THROWS_AS(solve_profile_1d(1.0, -1.0, 0.0), InvalidInitial);
  CHECK_THROWS_AS(solve_profile_1d(1.0, 1.0, 1.0), InvalidInitial);
  CHECK_THROWS_AS(closed_form_catenary(0.0, 0.0), InvalidInitial);
  CHECK_THROWS_AS(closed_form_hyperbola(-2.0), InvalidInitial);
}
