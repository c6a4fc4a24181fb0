// Acceptance suite: runs every gate with its stated tolerance and prints
// one pass/fail line per criterion. The first argument is the path to the
// CLI binary, used for the end-to-end command checks.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include <json.hpp>

#include "ogw/class_expr.hpp"
#include "ogw/clifford.hpp"
#include "ogw/json_io.hpp"
#include "ogw/maslov.hpp"
#include "ogw/schubert.hpp"
#include "ogw/signs.hpp"
#include "ogw/strata.hpp"
#include "oracle_sym2.hpp"

namespace {

using namespace ogw;
using std::numbers::pi;

std::string g_cli_path;

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& args) {
  CommandResult r;
  const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), pipe)) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct Check {
  std::ostringstream detail;
  bool ok = true;

  template <typename A, typename B>
  void equal(const A& got, const B& expected, const std::string& what) {
    if (!(got == expected)) {
      ok = false;
      detail << " [" << what << ": mismatch]";
    }
  }

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
};

TotallyRealLoop winding_loop(int k, int samples) {
  std::vector<Frame> frames;
  for (int j = 0; j <= samples; ++j) {
    Frame f(1, 1);
    f(0, 0) = std::polar(1.0, k * pi * static_cast<double>(j) / samples);
    frames.push_back(f);
  }
  return TotallyRealLoop::from_samples(std::move(frames));
}

TotallyRealLoop constant_loop(int n) {
  std::vector<Frame> frames(4, Frame::Identity(n, n));
  return TotallyRealLoop::from_samples(std::move(frames));
}

TotallyRealLoop random_loop(std::mt19937& rng, int* expected_mu) {
  std::uniform_int_distribution<int> rankd(1, 3), kd(-3, 3);
  const int rank = rankd(rng);
  int total = kd(rng);
  TotallyRealLoop loop = winding_loop(total, 64);
  for (int r = 1; r < rank; ++r) {
    const int k = kd(rng);
    total += k;
    loop = direct_sum(loop, winding_loop(k, 64));
  }
  *expected_mu = total;
  return loop;
}

// --- criteria ---------------------------------------------------------

Check criterion_quintic_real() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const auto text = run_command("quintic --real");
  c.equal(text.exit_code, 0, "exit code");
  c.equal(text.output, std::string("30\n"), "stdout");
  const auto json_run = run_command("--format json quintic --real");
  const auto j = Json::parse(json_run.output);
  c.equal(j.at("count").get<long long>(), 30, "count");
  c.equal(j.at("euler_coeff").get<long long>(), 15, "factor 15");
  c.equal(j.at("base_integral").get<long long>(), 2, "factor 2");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(secs < 1.0, "runtime under 1 s");
  c.detail << " count=30 trace=15x2";
  return c;
}

Check criterion_quintic_complex() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const auto text = run_command("quintic --complex");
  c.equal(text.exit_code, 0, "exit code");
  c.equal(text.output, std::string("2875\n"), "stdout");
  c.equal(count_complex_lines_quintic(), 2875, "library value");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(secs < 5.0, "runtime under 5 s");
  c.detail << " count=2875";
  return c;
}

Check criterion_sym5_splitting() {
  Check c;
  const auto s = sym_oriented_rank2(5);
  c.equal(s.euler_coeff, 15, "euler coefficient");
  c.equal(s.top_pontryagin(), 225, "top Pontryagin coefficient");
  c.equal(s.weights, (std::vector<long long>{5, 3, 1}), "weights");
  c.detail << " e=15 p_top=225";
  return c;
}

Check criterion_oriented_integral() {
  Check c;
  c.equal(oriented_g25_integrate_e3(), 2, "integral");
  int agreeing = 0;
  for (unsigned seed = 1; seed <= 100; ++seed) {
    if (random_hyperplane_kernel_dim(seed) == 2) ++agreeing;
  }
  c.equal(agreeing, 100, "oracle trials");
  c.detail << " integral=2 oracle=100/100";
  return c;
}

Check criterion_cancellation() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const auto r2 = verify_cancellation(2, SweepBounds::from_bound(12));
  const auto r3 = verify_cancellation(3, SweepBounds::from_bound(12));
  c.require(r2.verified(), "n=2 sweep verified");
  c.require(r3.verified(), "n=3 sweep verified");
  c.require(r2.tuples_checked + r3.tuples_checked >= 10000, "at least 10^4 tuples");
  c.require(r2.admissible > 0 && r3.admissible > 0, "admissible tuples present");
  const auto broken = verify_cancellation(2, SweepBounds::from_bound(12), ParityHypothesis::Broken);
  c.require(broken.failure_count > 0, "broken hypothesis produces failures");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(secs < 10.0, "runtime under 10 s");
  c.detail << " tuples=" << (r2.tuples_checked + r3.tuples_checked)
           << " admissible=" << (r2.admissible + r3.admissible)
           << " broken_failures=" << broken.failure_count;
  return c;
}

Check criterion_clifford() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  for (Pin p : {Pin::Plus, Pin::Minus}) {
    CliffordModel m(p, 3);
    const auto e1 = CliffordElement::generator(m, 1);
    const auto e2 = CliffordElement::generator(m, 2);
    c.require(e1 * e2 == -(e2 * e1), "e1 e2 = -e2 e1");
  }
  c.require(check_conjugation_lift(CliffordElement::blade(CliffordModel(Pin::Minus, 3), {1, 2})),
            "conjugation lift true in Pin-");
  c.require(!check_conjugation_lift(CliffordElement::blade(CliffordModel(Pin::Plus, 3), {1, 2})),
            "conjugation lift false in Pin+");
  for (Pin p : {Pin::Plus, Pin::Minus}) {
    CliffordModel m(p, 3);
    const auto id = SignedPermutation::identity(3);
    const auto r1 = SignedPermutation::reflection(3, 1);
    std::set<std::string> solutions;
    for (std::uint32_t bits = 0; bits < 8; ++bits) {
      std::vector<int> idx;
      for (int b = 0; b < 3; ++b) {
        if (bits & (1u << b)) idx.push_back(b + 1);
      }
      for (int sign : {1, -1}) {
        const auto a = CliffordElement::blade(m, idx, sign);
        const auto cover = covering_map(a);
        if (!(cover == id || cover == r1)) continue;
        if (check_constant_lift(a)) solutions.insert(a.str());
      }
    }
    c.require(solutions == std::set<std::string>{"1", "-1", "e1", "-e1"},
              "constant-lift solutions are exactly {+-1, +-e1}");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(secs < 1.0, "runtime under 1 s");
  c.detail << " pin-=true pin+=false solutions={+-1,+-e1}";
  return c;
}

Check criterion_maslov() {
  Check c;
  for (int k = -5; k <= 5; ++k) {
    const int got = maslov_index(winding_loop(k, 16 * std::abs(k) + 16));
    c.require(got == k, "winding " + std::to_string(k));
  }
  std::mt19937 rng(97);
  std::normal_distribution<double> gauss(0.0, 0.5);
  int gauge_trials = 0;
  while (gauge_trials < 100) {
    int mu = 0;
    const auto loop = random_loop(rng, &mu);
    const int n = loop.rank();
    Eigen::MatrixXd a(n, n), g0(n, n);
    for (int r = 0; r < n; ++r) {
      for (int col = 0; col < n; ++col) {
        a(r, col) = gauss(rng);
        g0(r, col) = gauss(rng);
      }
    }
    g0 += 2.0 * Eigen::MatrixXd::Identity(n, n);
    if (std::abs(g0.determinant()) < 1e-3) continue;
    ++gauge_trials;
    std::vector<Frame> gauged;
    for (int i = 0; i < loop.sample_count(); ++i) {
      const double t = static_cast<double>(i) / (loop.sample_count() - 1);
      gauged.push_back(loop.samples()[i] * (g0 * (t * a).exp()));
    }
    c.require(maslov_index(TotallyRealLoop::from_samples(std::move(gauged))) == mu,
              "gauge invariance");
  }
  for (int trial = 0; trial < 100; ++trial) {
    int mu_a = 0, mu_b = 0;
    const auto la = random_loop(rng, &mu_a);
    const auto lb = random_loop(rng, &mu_b);
    c.require(maslov_index(direct_sum(la, lb)) == mu_a + mu_b, "additivity");
    c.require(maslov_index(conjugate_loop(la)) == -mu_a, "conjugation negation");
  }
  c.detail << " windings[-5,5] gauges=100 pairs=100";
  return c;
}

Check criterion_schubert() {
  Check c;
  const int box = 3;
  for (int a = 0; a <= box; ++a) {
    for (int b = 0; b <= a; ++b) {
      const Partition2 lam{a, b};
      const Partition2 dual{box - b, box - a};
      c.require(integrate(schur_mul(SchurClass::sigma(5, lam), SchurClass::sigma(5, dual))) ==
                    Rational(1),
                "duality " + lam.str());
    }
  }
  const auto s1 = SchurClass::sigma(4, {1, 0});
  c.equal(integrate(schur_mul(schur_mul(schur_mul(s1, s1), s1), s1)), Rational(2),
          "sigma_1^4 on G(2,4)");
  // oracle agreement on all products of degree <= 10, large ambient box
  long long products = 0;
  for (int a1 = 0; a1 <= 10; ++a1) {
    for (int b1 = 0; b1 <= a1; ++b1) {
      if (a1 + b1 > 10) continue;
      for (int a2 = 0; a2 <= 10; ++a2) {
        for (int b2 = 0; b2 <= a2; ++b2) {
          if (a1 + b1 + a2 + b2 > 10) continue;
          const Partition2 lam{a1, b1}, mu{a2, b2};
          const auto got = schur_mul(SchurClass::sigma(12, lam), SchurClass::sigma(12, mu));
          const auto expected =
              oracle::to_schur_class(oracle::schur_poly(lam) * oracle::schur_poly(mu), 12);
          c.require(got == expected, "oracle " + lam.str() + "*" + mu.str());
          ++products;
        }
      }
    }
  }
  c.detail << " duality=10/10 products=" << products;
  return c;
}

Check criterion_sign_relations() {
  Check c;
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> nd(1, 6), gd(0, 3), md(1, 4), mud(-8, 8), bd(0, 1),
      kd(0, 5), ld(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
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
    int w1_total = 0;
    for (int b : ctx.w1_da) w1_total += b;
    c.require((sign_phi_L(ctx, Pin::Minus) ^ sign_phi_L(ctx, Pin::Plus)) == mod2(w1_total),
              "phi_L pair");
    c.require((sign_T(ctx.mu_d, ctx.n, ctx.g0, ctx.m, ctx.w1_da, Pin::Minus) ^
               sign_T(ctx.mu_d, ctx.n, ctx.g0, ctx.m, ctx.w1_da, Pin::Plus)) == mod2(w1_total),
              "T pair");
  }
  std::uniform_int_distribution<int> mud2(-4, 4), kd2(1, 5), ld2(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    BubbleContext b;
    b.n = 2 * (trial % 3) + 3;
    b.mu_dpp = 2 * mud2(rng);
    b.w1_bdpp = 0;
    b.w1_dpb = 0;
    b.k_dprime = kd2(rng);
    b.k_prime = 2;
    b.k_b = b.k_prime + b.k_dprime;
    b.l_dprime = ld2(rng);
    b.w2_psi_dpp = bd(rng);
    b.model = trial % 2 == 0 ? Pin::Minus : Pin::Plus;
    const int expected = sign_orientable_odd(b);
    b.z1_bubbles = false;
    c.require(sign_boundary_no_z1(b) == expected, "no_z1 reduction");
    b.z1_bubbles = true;
    c.require(sign_boundary_with_z1(b) == expected, "with_z1 reduction");
  }
  c.detail << " contexts=200 reductions=200";
  return c;
}

Check criterion_strata_certificate() {
  Check c;
  SignContext quintic;
  quintic.n = 3;
  quintic.m = 1;
  quintic.mu_d = 6;
  quintic.w1_da = {0};
  quintic.k_a = {1};
  quintic.l = 1;
  const auto cert3 = cancellation_certificate(quintic, 12);
  c.require(cert3.certified, "n=3 certificate");
  c.require(cert3.formal_total == Rational(0), "n=3 formal total 0");

  SignContext ctx2;
  ctx2.n = 2;
  ctx2.m = 2;
  ctx2.mu_d = 4;
  ctx2.w1_da = {0, 1};
  ctx2.k_a = {1, 2};
  ctx2.l = 1;
  c.require(ctx2.parity_hypothesis_holds(), "parity hypothesis");
  const auto cert2 = cancellation_certificate(ctx2, 12);
  c.require(cert2.certified, "n=2 certificate");
  c.require(cert2.formal_total == Rational(0), "n=2 formal total 0");

  c.require(multisection_total_weight({{+1, -1}}, true) == Rational(0), "weight {+1,-1}");
  c.require(multisection_total_weight({{+1, -1, +1, -1}}, true) == Rational(0),
            "weight {+1,-1,+1,-1}");
  c.require(multisection_total_weight({{-1, +1, -1, +1, -1, +1}}, true) == Rational(0),
            "weight of six paired branches");
  c.detail << " n3_strata=" << cert3.strata_count << " n2_strata=" << cert2.strata_count;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  g_cli_path = argc > 1 ? argv[1] : "./ogw";

  struct Criterion {
    std::string name;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {"quintic --real outputs 30 with factor trace 15 x 2", criterion_quintic_real},
      {"quintic --complex outputs 2875", criterion_quintic_complex},
      {"Sym^5 splitting: euler 15, top Pontryagin 225", criterion_sym5_splitting},
      {"oriented 2-plane integral is 2 (100 oracle trials)", criterion_oriented_integral},
      {"cancellation sweep at bound 12 (n=2 both branches, n=3)", criterion_cancellation},
      {"Clifford suite: anticommutation, lifts, solution set", criterion_clifford},
      {"Maslov suite: windings, gauges, additivity, conjugation", criterion_maslov},
      {"Schubert suite: duality, sigma_1^4 = 2, oracle products", criterion_schubert},
      {"sign-formula relations and odd-dimensional reduction", criterion_sign_relations},
      {"strata certificates and multisection weights", criterion_strata_certificate},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Check result;
    double secs = 0;
    try {
      const auto start = std::chrono::steady_clock::now();
      result = criteria[i].run();
      secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail << " [exception: " << e.what() << "]";
    }
    if (!result.ok) ++failures;
    std::printf("[%s] %zu. %s:%s (%.3f s)\n", result.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), result.detail.str().c_str(), secs);
  }
  if (failures) {
    std::printf("%d of %zu acceptance criteria FAILED\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu acceptance criteria passed\n", criteria.size());
  return 0;
}
