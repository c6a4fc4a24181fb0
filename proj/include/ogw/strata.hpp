#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ogw/rational.hpp"
#include "ogw/signs.hpp"

namespace ogw {

// Which member of a conjugate pair of boundary components a descriptor
// shadows. The conjugation involution exchanges Primary and Conjugate.
enum class ConjugateSide { Primary, Conjugate };

// Combinatorial shadow of a codimension-1 boundary stratum: a disk bubble
// of class d'' on boundary component b carrying k'' of the boundary marked
// points (sigma classes counted by size and whether the first point moved)
// and l'' of the interior points. Classes are represented by their
// (mu, w1) data only.
struct StratumDescriptor {
  int b = 1;
  int k_dprime = 0;
  bool z1_in_sigma = false;
  int l_dprime = 0;
  long long mu_dprime = 0;         // mu(d'')
  long long mu_dprime_parent = 0;  // mu(d') = mu(d) - mu(d'')
  int w1_dpb = 0;                  // w1(d'_b)
  int w1_bdpp = 0;                 // w1(d d'')
  int r = 0;                       // dimension-restriction slack
  long long subset_count = 1;      // raw (sigma, rho) subsets in this class
  ConjugateSide side = ConjugateSide::Primary;
  bool self_conjugate = false;     // phi-invariant bubble class, set by hand
  bool mu_zero_risk = false;       // bubble of Maslov index 0

  // Everything except the side, for conjugate matching.
  auto pair_key() const {
    return std::make_tuple(b, k_dprime, z1_in_sigma, l_dprime, mu_dprime, w1_dpb, w1_bdpp, r);
  }
};

struct StrataOptions {
  // Caller's assertion that the class avoids sphere-on-constant-disk
  // degenerations; excludes the (mu'', k'', l'') = (0, 0, 0) stratum.
  bool aod_asserted = false;
};

// All stratum shadows with |mu(d'')| <= mu_bound satisfying the dimension
// restriction for ctx.n in {2,3}. Conjugate components are emitted in
// pairs. Throws for other n.
std::vector<StratumDescriptor> enumerate_boundary_strata(const SignContext& ctx,
                                                         long long mu_bound,
                                                         const StrataOptions& opts = {});

// Conjugation sign of the stratum: the n = 2 Pin- branch formulas or the
// n = 3 orientable-odd formula, including the interior-constraint term.
// Throws when the descriptor is inconsistent with the context.
int stratum_sign(const StratumDescriptor& s, const SignContext& ctx);

struct InvolutionPairing {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> fixed;
};

// Match strata exchanged by conjugation; self-conjugate descriptors land
// in `fixed`. Throws when a non-self-conjugate descriptor has no partner.
InvolutionPairing involution_pairing(const std::vector<StratumDescriptor>& strata);

// Perturbation data at one point of a stratum: the signs of the branches
// of a multisection, with multiplicity the branch count.
struct MultisectionPoint {
  std::vector<int> branch_signs;  // entries in {-1, +1}

  int multiplicity() const { return static_cast<int>(branch_signs.size()); }
};

// Weighted branch count (sum of signs) / multiplicity. At a fixed point
// the branches must cancel in opposite-sign pairs and the weight is 0.
Rational multisection_total_weight(const MultisectionPoint& p, bool at_fixed_point);

struct FixedStratum {
  StratumDescriptor descriptor;
  MultisectionPoint perturbation;
};

struct CancellationCertificate {
  long long strata_count = 0;
  std::vector<StratumDescriptor> strata;
  std::vector<std::size_t> sign_failures;  // indices into strata
  long long pair_count = 0;
  long long fixed_count = 0;
  long long weight_failures = 0;
  Rational formal_total = 0;
  bool certified = false;
  std::string notes;
};

// Certify that the formal boundary count vanishes: every stratum has sign
// 1 (the conjugation reverses orientation), strata cancel in conjugate
// pairs, and injected self-conjugate strata carry total weight zero.
CancellationCertificate cancellation_certificate(const SignContext& ctx, long long mu_bound,
                                                 const StrataOptions& opts = {},
                                                 const std::vector<FixedStratum>& injected = {});

}  // namespace ogw
