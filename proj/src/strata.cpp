#include "ogw/strata.hpp"

#include <map>
#include <stdexcept>

namespace ogw {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BubbleContext to_bubble_context(const StratumDescriptor& s, const SignContext& ctx) {
  BubbleContext b;
  b.n = ctx.n;
  b.mu_dpp = s.mu_dprime;
  b.w1_bdpp = s.w1_bdpp;
  b.w1_dpb = s.w1_dpb;
  b.k_b = ctx.k_a[s.b - 1];
  b.k_dprime = s.k_dprime;
  b.k_prime = b.k_b - s.k_dprime;
  b.l_dprime = s.l_dprime;
  b.w2_psi_dpp = 0;  // standard Pin structure throughout
  b.z1_bubbles = s.z1_in_sigma;
  b.model = ctx.model;
  return b;
}

}  // namespace

std::vector<StratumDescriptor> enumerate_boundary_strata(const SignContext& ctx,
                                                         long long mu_bound,
                                                         const StrataOptions& opts) {
  ctx.validate();
  if (ctx.n != 2 && ctx.n != 3) {
    throw std::invalid_argument("stratum enumeration needs n in {2,3}");
  }
  if (mu_bound < 0) throw std::invalid_argument("mu bound must be nonnegative");

  std::vector<StratumDescriptor> out;
  for (int b = 1; b <= ctx.m; ++b) {
    const int k_b = ctx.k_a[b - 1];
    for (int kpp = 0; kpp <= k_b; ++kpp) {
      for (int z1 = 0; z1 <= 1; ++z1) {
        // The first marked point lives on component 1; it can only move
        // onto a bubble there, and only if the bubble carries points.
        if (z1 == 1 && (b != 1 || kpp < 1 || k_b < 1)) continue;
        for (int lpp = 0; lpp <= ctx.l; ++lpp) {
          for (long long mu = -mu_bound; mu <= mu_bound; ++mu) {
            auto r = stratum_dimension_restriction(ctx.n, mu, kpp, lpp);
            if (!r) continue;
            if (opts.aod_asserted && mu == 0 && kpp == 0 && lpp == 0) continue;
            StratumDescriptor s;
            s.b = b;
            s.k_dprime = kpp;
            s.z1_in_sigma = (z1 == 1);
            s.l_dprime = lpp;
            s.mu_dprime = mu;
            s.mu_dprime_parent = ctx.mu_d - mu;
            s.w1_bdpp = mod2(mu);
            s.w1_dpb = ctx.w1_da[b - 1] ^ s.w1_bdpp;
            s.r = *r;
            s.mu_zero_risk = (mu == 0);
            long long sigma_count;
            if (b == 1 && k_b >= 1) {
              sigma_count = s.z1_in_sigma ? binomial(k_b - 1, kpp - 1) : binomial(k_b - 1, kpp);
            } else {
              sigma_count = binomial(k_b, kpp);
            }
            s.subset_count = sigma_count * binomial(ctx.l, lpp);
            if (s.subset_count == 0) continue;
            s.side = ConjugateSide::Primary;
            out.push_back(s);
            s.side = ConjugateSide::Conjugate;
            out.push_back(s);
          }
        }
      }
    }
  }
  return out;
}

int stratum_sign(const StratumDescriptor& s, const SignContext& ctx) {
  ctx.validate();
  if (s.b < 1 || s.b > ctx.m) throw std::invalid_argument("stratum component out of range");
  if (s.k_dprime > ctx.k_a[s.b - 1]) {
    throw std::invalid_argument("stratum carries more boundary points than the component");
  }
  if (s.l_dprime > ctx.l) {
    throw std::invalid_argument("stratum carries more interior points than available");
  }
  auto r = stratum_dimension_restriction(ctx.n, s.mu_dprime, s.k_dprime, s.l_dprime);
  if (!r || *r != s.r) {
    throw std::invalid_argument("stratum violates the dimension restriction");
  }
  if (ctx.n == 2 && ctx.model != Pin::Minus) {
    throw std::invalid_argument("the n = 2 stratum signs require the Pin- model");
  }
  return boundary_action_sign(to_bubble_context(s, ctx));
}

InvolutionPairing involution_pairing(const std::vector<StratumDescriptor>& strata) {
  InvolutionPairing result;
  std::map<decltype(std::declval<StratumDescriptor>().pair_key()), std::vector<std::size_t>>
      open_partners;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const StratumDescriptor& s = strata[i];
    if (s.self_conjugate) {
      result.fixed.push_back(i);
      continue;
    }
    auto& bucket = open_partners[s.pair_key()];
    bool matched = false;
    for (auto it = bucket.begin(); it != bucket.end(); ++it) {
      if (strata[*it].side != s.side) {
        result.pairs.emplace_back(*it, i);
        bucket.erase(it);
        matched = true;
        break;
      }
    }
    if (!matched) bucket.push_back(i);
  }
  for (const auto& [key, bucket] : open_partners) {
    if (!bucket.empty()) {
      throw std::invalid_argument("stratum list contains an unpaired non-fixed descriptor");
    }
  }
  return result;
}

Rational multisection_total_weight(const MultisectionPoint& p, bool at_fixed_point) {
  const int ell = p.multiplicity();
  if (ell < 1) throw std::invalid_argument("multisection needs at least one branch");
  int plus = 0, minus = 0;
  for (int s : p.branch_signs) {
    if (s == 1) {
      ++plus;
    } else if (s == -1) {
      ++minus;
    } else {
      throw std::invalid_argument("branch signs must be +1 or -1");
    }
  }
  if (at_fixed_point && plus != minus) {
    throw std::invalid_argument("fixed-point branches must cancel in opposite-sign pairs");
  }
  return Rational(plus - minus, ell);
}

CancellationCertificate cancellation_certificate(const SignContext& ctx, long long mu_bound,
                                                 const StrataOptions& opts,
                                                 const std::vector<FixedStratum>& injected) {
  CancellationCertificate cert;
  std::vector<StratumDescriptor> strata = enumerate_boundary_strata(ctx, mu_bound, opts);
  for (const FixedStratum& f : injected) {
    StratumDescriptor s = f.descriptor;
    s.self_conjugate = true;
    strata.push_back(s);
  }
  cert.strata_count = static_cast<long long>(strata.size());

  for (std::size_t i = 0; i < strata.size(); ++i) {
    if (stratum_sign(strata[i], ctx) != 1) cert.sign_failures.push_back(i);
  }

  InvolutionPairing pairing = involution_pairing(strata);
  cert.pair_count = static_cast<long long>(pairing.pairs.size());
  cert.fixed_count = static_cast<long long>(pairing.fixed.size());

  // Paired components cancel when the action reverses orientation; a pair
  // where it does not contributes twice.
  Rational total(0);
  for (const auto& [i, j] : pairing.pairs) {
    (void)j;
    if (stratum_sign(strata[i], ctx) != 1) total += Rational(2);
  }
  std::size_t injected_index = 0;
  for (std::size_t idx : pairing.fixed) {
    (void)idx;
    if (injected_index < injected.size()) {
      Rational w =
          multisection_total_weight(injected[injected_index].perturbation, /*at_fixed_point=*/true);
      if (!w.is_zero()) ++cert.weight_failures;
      total += w;
      ++injected_index;
    }
  }
  cert.formal_total = total;
  cert.certified =
      cert.sign_failures.empty() && cert.weight_failures == 0 && cert.formal_total.is_zero();
  cert.strata = std::move(strata);
  cert.notes = "w2(psi(d''))=0 (standard Pin structure)";
  return cert;
}

}  // namespace ogw
