#include "ogw/signs.hpp"

#include <stdexcept>

namespace ogw {

namespace {

// mu(mu+1)/2 resp. mu(mu-1)/2; the numerator is always even so the
// division is exact, also for negative mu.
long long half_product(long long mu, int plus_minus_one) {
  return mu * (mu + plus_minus_one) / 2;
}

constexpr int kMaxStoredFailures = 100;

}  // namespace

void SignContext::validate() const {
  if (n < 1) throw std::invalid_argument("SignContext: n must be >= 1");
  if (g0 < 0) throw std::invalid_argument("SignContext: g0 must be >= 0");
  if (m < 1) throw std::invalid_argument("SignContext: m must be >= 1");
  if (static_cast<int>(w1_da.size()) != m || static_cast<int>(k_a.size()) != m) {
    throw std::invalid_argument("SignContext: w1_da and k_a must have length m");
  }
  for (int b : w1_da) require_bit(b, "w1_da entry");
  for (int k : k_a) {
    if (k < 0) throw std::invalid_argument("SignContext: k_a entries must be >= 0");
  }
  if (l < 0) throw std::invalid_argument("SignContext: l must be >= 0");
  require_bit(w2_psi_d, "w2_psi_d");
}

long long SignContext::k_total() const {
  long long s = 0;
  for (int k : k_a) s += k;
  return s;
}

bool SignContext::parity_hypothesis_holds() const {
  for (int a = 0; a < m; ++a) {
    if (mod2(k_a[a]) != mod2(w1_da[a] + 1)) return false;
  }
  return true;
}

void BubbleContext::validate() const {
  if (n < 1) throw std::invalid_argument("BubbleContext: n must be >= 1");
  require_bit(w1_bdpp, "w1_bdpp");
  require_bit(w1_dpb, "w1_dpb");
  require_bit(w2_psi_dpp, "w2_psi_dpp");
  if (k_prime < 0 || k_dprime < 0 || l_dprime < 0 || k_b < 0) {
    throw std::invalid_argument("BubbleContext: marked point counts must be >= 0");
  }
  if (k_prime + k_dprime != k_b) {
    throw std::invalid_argument("BubbleContext: k' + k'' must equal k_b");
  }
  if (mod2(mu_dpp) != w1_bdpp) {
    throw std::invalid_argument("BubbleContext: w1(d d'') must equal mu(d'') mod 2");
  }
}

int dim_aut(int g0, int m) {
  if (g0 == 0 && m == 1) return 3;
  if (g0 == 0 && m == 2) return 1;
  return 0;
}

DimBalance expected_dim_balance(const SignContext& ctx) {
  ctx.validate();
  DimBalance r;
  r.lhs = static_cast<long long>(ctx.n - 1) * (ctx.k_total() + 2 * ctx.l);
  const long long g = 2LL * ctx.g0 + ctx.m - 1;
  r.rhs = static_cast<long long>(ctx.n) * (1 - g) + ctx.mu_d - dim_aut(ctx.g0, ctx.m);
  r.admissible = (r.lhs == r.rhs);
  return r;
}

int sign_T(long long mu, int n, int g0, int m, const std::vector<int>& w1_list, Pin model) {
  if (static_cast<int>(w1_list.size()) != m) {
    throw std::invalid_argument("sign_T: w1 list must have length m");
  }
  long long s = half_product(mu, +1) + static_cast<long long>(1 - g0) * n +
                static_cast<long long>(m) * n;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) s += w1_list[a] * w1_list[b];
  }
  if (model == Pin::Minus) {
    for (int a = 0; a < m; ++a) s += w1_list[a];
  }
  return mod2(s);
}

int disk_sign_T(long long mu, Pin model) {
  return mod2(half_product(mu, model == Pin::Plus ? +1 : -1));
}

int sign_phi_L(const SignContext& ctx, Pin model) {
  ctx.validate();
  long long s = half_product(ctx.mu_d, +1) + static_cast<long long>(1 - ctx.g0) * ctx.n +
                static_cast<long long>(ctx.m) * ctx.n + ctx.k_total() + ctx.l + ctx.w2_psi_d;
  for (int a = 0; a < ctx.m; ++a) {
    for (int b = a + 1; b < ctx.m; ++b) s += ctx.w1_da[a] * ctx.w1_da[b];
  }
  for (int a = 0; a < ctx.m; ++a) {
    s += static_cast<long long>(ctx.w1_da[a]) * (ctx.k_a[a] - 1);
    s += static_cast<long long>(ctx.n + 1) *
         (static_cast<long long>(ctx.k_a[a] - 1) * (ctx.k_a[a] - 2) / 2);
  }
  if (model == Pin::Minus) {
    // w1(d d) read as the sum of the per-component classes.
    for (int a = 0; a < ctx.m; ++a) s += ctx.w1_da[a];
  }
  return mod2(s);
}

int upsilon_prime(long long mu_dpp, int k_dprime) { return mod2(mu_dpp * k_dprime); }

int upsilon_double_prime(int w1_dpb, int w1_bdpp, int k_prime, int k_dprime) {
  require_bit(w1_dpb, "w1_dpb");
  require_bit(w1_bdpp, "w1_bdpp");
  if (w1_dpb == 0 && w1_bdpp == 0) return 0;
  if (w1_dpb == 1 && w1_bdpp == 1) return mod2(k_prime);
  if (w1_dpb == 1 && w1_bdpp == 0) return mod2(k_dprime - 1);
  return mod2(k_dprime + k_prime - 1);
}

namespace {

long long bubble_common_terms(const BubbleContext& b) {
  return half_product(b.mu_dpp, b.model == Pin::Plus ? +1 : -1) + b.w2_psi_dpp + b.k_dprime +
         1 + b.l_dprime;
}

}  // namespace

int sign_boundary_no_z1(const BubbleContext& b) {
  b.validate();
  if (b.z1_bubbles) {
    throw std::invalid_argument("sign_boundary_no_z1: context has z1 on the bubble");
  }
  long long s = bubble_common_terms(b) + upsilon_prime(b.mu_dpp, b.k_dprime) +
                static_cast<long long>(b.n + 1) *
                    (static_cast<long long>(b.k_dprime) * (b.k_dprime - 1) / 2);
  return mod2(s);
}

int sign_boundary_with_z1(const BubbleContext& b) {
  b.validate();
  if (!b.z1_bubbles) {
    throw std::invalid_argument("sign_boundary_with_z1: context keeps z1 off the bubble");
  }
  long long s = bubble_common_terms(b) +
                upsilon_double_prime(b.w1_dpb, b.w1_bdpp, b.k_prime, b.k_dprime) +
                static_cast<long long>(b.w1_dpb) * b.w1_bdpp +
                static_cast<long long>(b.n + 1) *
                    (static_cast<long long>(b.k_dprime - 1) * (b.k_dprime - 2) / 2 +
                     static_cast<long long>(b.k_b) * b.k_dprime + b.k_b);
  return mod2(s);
}

int sign_orientable_odd(const BubbleContext& b) {
  b.validate();
  if (b.n % 2 == 0) {
    throw std::invalid_argument("sign_orientable_odd: dim L must be odd");
  }
  if (mod2(b.mu_dpp) != 0) {
    throw std::invalid_argument("sign_orientable_odd: mu(d'') must be even for orientable L");
  }
  return mod2(b.mu_dpp / 2 + b.w2_psi_dpp + b.k_dprime + 1 + b.l_dprime);
}

int boundary_action_sign(const BubbleContext& b) {
  // Conjugation swaps the constraint pair of each of the l'' interior
  // points carried by the bubble; each swap reverses orientation exactly
  // when the ambient involution does, i.e. when n is odd.
  const int ambient = (b.n % 2 == 1) ? mod2(b.l_dprime) : 0;
  int base;
  if (b.n % 2 == 1) {
    base = sign_orientable_odd(b);
  } else {
    base = b.z1_bubbles ? sign_boundary_with_z1(b) : sign_boundary_no_z1(b);
  }
  return base ^ ambient;
}

std::optional<int> stratum_dimension_restriction(int n, long long mu_dpp, int k_dprime,
                                                 int l_dprime) {
  if (n == 2) {
    for (int r : {0, -1}) {
      if (mu_dpp + r == static_cast<long long>(k_dprime) + 2 * l_dprime) return r;
    }
    return std::nullopt;
  }
  if (n == 3) {
    if (mu_dpp == 2LL * k_dprime + 4LL * l_dprime) return 0;
    return std::nullopt;
  }
  throw std::invalid_argument("stratum dimension restriction needs n in {2,3}");
}

std::optional<int> stratum_dimension_restriction(const BubbleContext& b) {
  return stratum_dimension_restriction(b.n, b.mu_dpp, b.k_dprime, b.l_dprime);
}

namespace {

void record_failure(CancellationReport& report, const BubbleContext& ctx,
                    const std::string& branch, int sign) {
  ++report.failure_count;
  if (static_cast<int>(report.failures.size()) < kMaxStoredFailures) {
    report.failures.push_back({ctx, branch, sign});
  }
}

}  // namespace

CancellationReport verify_cancellation(int n, const SweepBounds& bounds, ParityHypothesis hyp) {
  if (n != 2 && n != 3) {
    throw std::invalid_argument("verify_cancellation needs n in {2,3}");
  }
  CancellationReport report;
  report.n = n;
  report.hypothesis = hyp;
  report.notes = "w2(psi(d''))=0 (standard Pin structure); w1(d d'')=mu'' mod 2";

  if (n == 2) {
    for (long long mu = bounds.mu_min; mu <= bounds.mu_max; ++mu) {
      for (int kpp = 0; kpp <= bounds.k_max; ++kpp) {
        for (int kp = 0; kp <= bounds.k_max; ++kp) {
          for (int lpp = 0; lpp <= bounds.l_max; ++lpp) {
            ++report.tuples_checked;
            auto r = stratum_dimension_restriction(2, mu, kpp, lpp);
            if (!r) continue;
            ++report.admissible;
            const int k_b = kp + kpp;
            const int w1_bdpp = mod2(mu);
            const int w1_db = mod2(k_b + (hyp == ParityHypothesis::Standard ? 1 : 0));
            BubbleContext b;
            b.n = 2;
            b.mu_dpp = mu;
            b.w1_bdpp = w1_bdpp;
            b.w1_dpb = w1_db ^ w1_bdpp;
            b.k_b = k_b;
            b.k_prime = kp;
            b.k_dprime = kpp;
            b.l_dprime = lpp;
            b.w2_psi_dpp = 0;
            b.model = Pin::Minus;

            b.z1_bubbles = false;
            ++report.evaluations;
            if (int s = boundary_action_sign(b); s != 1) {
              record_failure(report, b, "no_z1", s);
            }
            if (kpp >= 1) {  // 1 in sigma forces |sigma| >= 1
              b.z1_bubbles = true;
              ++report.evaluations;
              if (int s = boundary_action_sign(b); s != 1) {
                record_failure(report, b, "with_z1", s);
              }
            }
          }
        }
      }
    }
    return report;
  }

  // n = 3: orientable L, all w1 classes vanish and mu'' is even.
  for (long long mu = bounds.mu_min; mu <= bounds.mu_max; ++mu) {
    for (int kpp = 0; kpp <= bounds.k_max; ++kpp) {
      for (int lpp = 0; lpp <= bounds.l_max; ++lpp) {
        ++report.tuples_checked;
        auto r = stratum_dimension_restriction(3, mu, kpp, lpp);
        if (!r) continue;
        ++report.admissible;
        BubbleContext b;
        b.n = 3;
        b.mu_dpp = mu;
        b.w1_bdpp = 0;
        b.w1_dpb = 0;
        b.k_b = kpp;
        b.k_prime = 0;
        b.k_dprime = kpp;
        b.l_dprime = lpp;
        b.w2_psi_dpp = 0;
        b.model = Pin::Minus;
        ++report.evaluations;
        if (int s = boundary_action_sign(b); s != 1) {
          record_failure(report, b, "orientable_odd", s);
        }
      }
    }
  }
  return report;
}

}  // namespace ogw
