#include <doctest.h>

#include <random>

#include "ogw/signs.hpp"

using namespace ogw;

namespace {

SignContext disk_context(int n, long long mu, int k, int l, int w1 = 0, int w2 = 0) {
  SignContext ctx;
  ctx.n = n;
  ctx.g0 = 0;
  ctx.m = 1;
  ctx.mu_d = mu;
  ctx.w1_da = {w1};
  ctx.k_a = {k};
  ctx.l = l;
  ctx.w2_psi_d = w2;
  ctx.model = Pin::Minus;
  return ctx;
}

SignContext random_context(std::mt19937& rng) {
  std::uniform_int_distribution<int> nd(1, 6), gd(0, 3), md(1, 4), mud(-8, 8), bd(0, 1),
      kd(0, 5), ld(0, 5);
  SignContext ctx;
  ctx.n = nd(rng);
  ctx.g0 = gd(rng);
  ctx.m = md(rng);
  ctx.mu_d = mud(rng);
  for (int a = 0; a < ctx.m; ++a) {
    ctx.w1_da.push_back(bd(rng));
    ctx.k_a.push_back(kd(rng));
  }
  ctx.l = ld(rng);
  ctx.w2_psi_d = bd(rng);
  return ctx;
}

BubbleContext bubble(int n, long long mu, int kpp, int lpp, int kp = 0, int w1_dpb = 0,
                     int w2 = 0, bool z1 = false, Pin model = Pin::Minus) {
  BubbleContext b;
  b.n = n;
  b.mu_dpp = mu;
  b.w1_bdpp = mod2(mu);
  b.w1_dpb = w1_dpb;
  b.k_prime = kp;
  b.k_dprime = kpp;
  b.k_b = kp + kpp;
  b.l_dprime = lpp;
  b.w2_psi_dpp = w2;
  b.z1_bubbles = z1;
  b.model = model;
  return b;
}

}  // namespace

TEST_CASE("expected dimension balance") {
  // degree-1 real-quintic datum: admissible with both sides 0
  auto r = expected_dim_balance(disk_context(3, 0, 0, 0));
  CHECK(r.lhs == 0);
  CHECK(r.rhs == 0);
  CHECK(r.admissible);

  r = expected_dim_balance(disk_context(2, 2, 1, 0));
  CHECK(r.lhs == 1);
  CHECK(r.rhs == 1);
  CHECK(r.admissible);

  r = expected_dim_balance(disk_context(3, 1, 0, 0));
  CHECK(r.lhs == 0);
  CHECK(r.rhs == 1);
  CHECK_FALSE(r.admissible);
}

TEST_CASE("dim Aut table") {
  CHECK(dim_aut(0, 1) == 3);
  CHECK(dim_aut(0, 2) == 1);
  CHECK(dim_aut(0, 3) == 0);
  CHECK(dim_aut(1, 1) == 0);
  CHECK(dim_aut(2, 2) == 0);
}

TEST_CASE("conjugation sign on determinant lines") {
  // disk, mu = 0: 2n mod 2 = 0 for any n
  for (int n = 1; n <= 6; ++n) {
    CHECK(sign_T(0, n, 0, 1, {0}, Pin::Minus) == 0);
  }
  // disk, mu = 2, Pin-: agrees with the disk reduction mu(mu-1)/2 = 1
  CHECK(sign_T(2, 3, 0, 1, {0}, Pin::Minus) == 1);
  CHECK(sign_T(2, 3, 0, 1, {0}, Pin::Minus) == disk_sign_T(2, Pin::Minus));
}

TEST_CASE("disk reduction of the conjugation sign") {
  CHECK(disk_sign_T(0, Pin::Plus) == 0);
  CHECK(disk_sign_T(0, Pin::Minus) == 0);
  CHECK(disk_sign_T(1, Pin::Minus) == 0);
  CHECK(disk_sign_T(1, Pin::Plus) == 1);
  CHECK(disk_sign_T(2, Pin::Minus) == 1);
  CHECK(disk_sign_T(-1, Pin::Plus) == 0);
  CHECK(disk_sign_T(-1, Pin::Minus) == 1);
}

TEST_CASE("the two conjugation signs differ by the total w1") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const SignContext ctx = random_context(rng);
    int w1_total = 0;
    for (int b : ctx.w1_da) w1_total += b;
    const int diff = sign_T(ctx.mu_d, ctx.n, ctx.g0, ctx.m, ctx.w1_da, Pin::Minus) ^
                     sign_T(ctx.mu_d, ctx.n, ctx.g0, ctx.m, ctx.w1_da, Pin::Plus);
    CHECK(diff == mod2(w1_total));
  }
}

TEST_CASE("involution sign on the marked moduli space: disk checks") {
  // n=2, mu=2, k=2, l=0: disk reduction gives 1
  CHECK(sign_phi_L(disk_context(2, 2, 2, 0), Pin::Minus) == 1);
  // n=2, mu=0, k=0, l=0: the (n+1)(k-1)(k-2)/2 term contributes 1
  CHECK(sign_phi_L(disk_context(2, 0, 0, 0), Pin::Minus) == 1);
}

TEST_CASE("phi_L signs differ by the total w1") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const SignContext ctx = random_context(rng);
    int w1_total = 0;
    for (int b : ctx.w1_da) w1_total += b;
    CHECK((sign_phi_L(ctx, Pin::Minus) ^ sign_phi_L(ctx, Pin::Plus)) == mod2(w1_total));
  }
}

TEST_CASE("Upsilon'") {
  CHECK(upsilon_prime(1, 1) == 1);
  for (int k = 0; k <= 6; ++k) CHECK(upsilon_prime(2, k) == 0);
  CHECK(upsilon_prime(1, 0) == 0);
  CHECK(upsilon_prime(-3, 1) == 1);
}

TEST_CASE("Upsilon'' case table") {
  CHECK(upsilon_double_prime(0, 0, 5, 7) == 0);
  CHECK(upsilon_double_prime(1, 1, 3, 0) == 1);
  CHECK(upsilon_double_prime(1, 1, 4, 0) == 0);
  CHECK(upsilon_double_prime(1, 0, 0, 4) == 1);  // k'' - 1 = 3
  CHECK(upsilon_double_prime(0, 1, 2, 2) == 1);  // k'' + k' - 1 = 3
}

TEST_CASE("stratum sign, z1 stays on the parent") {
  CHECK(sign_boundary_no_z1(bubble(3, 2, 0, 1)) == 1);
  CHECK(sign_boundary_no_z1(bubble(2, 2, 2, 0)) == 1);
  CHECK(sign_boundary_no_z1(bubble(3, 0, 0, 0)) == 1);
  CHECK_THROWS_AS(sign_boundary_no_z1(bubble(2, 2, 1, 0, 0, 0, 0, /*z1=*/true)),
                  std::invalid_argument);
}

TEST_CASE("stratum sign, z1 moves to the bubble") {
  // worked example: n=2, mu''=1, w1(d d'')=1, w1(d'_b)=0, k_b=2, k'=1, k''=1
  CHECK(sign_boundary_with_z1(bubble(2, 1, 1, 0, /*kp=*/1, /*w1_dpb=*/0, 0, true)) == 1);
  // n=3, mu''=2, all w1 zero, k''=1: matches the orientable-odd value
  const auto b3 = bubble(3, 2, 1, 0, 0, 0, 0, true);
  CHECK(sign_boundary_with_z1(b3) == 1);
  CHECK_THROWS_AS(sign_boundary_with_z1(bubble(2, 2, 1, 0)), std::invalid_argument);
}

TEST_CASE("orientable odd-dimensional reduction") {
  CHECK(sign_orientable_odd(bubble(3, 2, 1, 0)) == 1);
  CHECK(sign_orientable_odd(bubble(3, 0, 0, 0)) == 1);
  CHECK(sign_orientable_odd(bubble(3, 4, 0, 1, 0, 0, /*w2=*/1)) == 1);
  CHECK_THROWS_AS(sign_orientable_odd(bubble(3, 3, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(sign_orientable_odd(bubble(2, 2, 0, 0)), std::invalid_argument);
}

TEST_CASE("even-mu arithmetic lemma: mu(mu+1)/2 = mu(mu-1)/2 = mu/2 mod 2") {
  for (long long mu = -20; mu <= 20; mu += 2) {
    const int a = mod2(mu * (mu + 1) / 2);
    const int b = mod2(mu * (mu - 1) / 2);
    const int c = mod2(mu / 2);
    CHECK(a == b);
    CHECK(b == c);
  }
}

TEST_CASE("branch formulas reduce to the orientable-odd sign") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> nd(0, 2), mud(-4, 4), kd(1, 5), ld(0, 4), w2d(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 * nd(rng) + 3;  // odd
    const long long mu = 2 * mud(rng);
    const int kpp = kd(rng);
    const int lpp = ld(rng);
    const int w2 = w2d(rng);
    for (Pin model : {Pin::Plus, Pin::Minus}) {
      const auto stay = bubble(n, mu, kpp, lpp, 2, 0, w2, false, model);
      const auto move = bubble(n, mu, kpp, lpp, 2, 0, w2, true, model);
      const int expected = sign_orientable_odd(stay);
      CHECK(sign_boundary_no_z1(stay) == expected);
      CHECK(sign_boundary_with_z1(move) == expected);
    }
  }
}

TEST_CASE("dimension restriction") {
  CHECK(stratum_dimension_restriction(2, 3, 1, 1) == 0);
  CHECK(stratum_dimension_restriction(2, 4, 1, 1) == -1);
  CHECK_FALSE(stratum_dimension_restriction(2, 2, 1, 1).has_value());
  CHECK(stratum_dimension_restriction(3, 6, 1, 1) == 0);
  CHECK_FALSE(stratum_dimension_restriction(3, 5, 1, 1).has_value());
  CHECK_THROWS_AS(stratum_dimension_restriction(4, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("cancellation sweep: n = 2, Pin-") {
  const auto report = verify_cancellation(2, SweepBounds::from_bound(12));
  CHECK(report.verified());
  CHECK(report.failure_count == 0);
  CHECK(report.tuples_checked >= 10000);
  CHECK(report.admissible > 1000);
  CHECK(report.evaluations > report.admissible);
}

TEST_CASE("cancellation sweep: n = 3") {
  const auto report = verify_cancellation(3, SweepBounds::from_bound(12));
  CHECK(report.verified());
  CHECK(report.admissible >= 16);
}

TEST_CASE("cancellation sweep fails when the parity hypothesis is broken") {
  const auto report = verify_cancellation(2, SweepBounds::from_bound(12),
                                          ParityHypothesis::Broken);
  CHECK_FALSE(report.verified());
  CHECK(report.failure_count > 0);
  // only the branch that uses w1(d_b) can break
  for (const auto& f : report.failures) CHECK(f.branch == "with_z1");
}

TEST_CASE("context validation") {
  SignContext bad = disk_context(3, 0, 0, 0);
  bad.w1_da = {0, 1};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  BubbleContext b = bubble(2, 1, 1, 0);
  b.w1_bdpp = 0;  // violates w1 = mu mod 2
  CHECK_THROWS_AS(b.validate(), std::invalid_argument);
  b = bubble(2, 1, 1, 0);
  b.k_b = 5;  // violates k' + k'' = k_b
  CHECK_THROWS_AS(b.validate(), std::invalid_argument);
}

TEST_CASE("parity hypothesis check on demand") {
  SignContext ctx = disk_context(2, 1, 2, 0, /*w1=*/1);
  CHECK(ctx.parity_hypothesis_holds());
  ctx.k_a = {1};
  CHECK_FALSE(ctx.parity_hypothesis_holds());
}
