#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ogw/pin.hpp"

namespace ogw {

// Topological data of a bordered-surface class d = (d, d_1..d_m) with k_a
// boundary and l interior marked points: everything the sign formulas
// consume. w2_psi_d is the caller-supplied pairing w2(V)(psi(d)).
struct SignContext {
  int n = 1;   // dim L
  int g0 = 0;  // genus of Sigma/dSigma
  int m = 1;   // boundary components
  long long mu_d = 0;
  std::vector<int> w1_da;  // per-component w1 bits, length m
  std::vector<int> k_a;    // per-component boundary marked points, length m
  int l = 0;
  int w2_psi_d = 0;
  Pin model = Pin::Minus;

  void validate() const;
  long long k_total() const;
  // Theorem hypothesis in the non-orientable even-dimensional case:
  // k_a == w1(d_a) + 1 mod 2 for every component.
  bool parity_hypothesis_holds() const;
};

// Data of a disk-bubble boundary stratum: the bubble class d'' attached to
// boundary component b, with k'' of the k_b boundary points and l''
// interior points moving onto the bubble.
struct BubbleContext {
  int n = 2;
  long long mu_dpp = 0;  // mu(d'')
  int w1_bdpp = 0;       // w1(d d'') -- the bubble boundary loop
  int w1_dpb = 0;        // w1(d'_b)  -- what remains on component b
  int k_b = 0;
  int k_prime = 0;
  int k_dprime = 0;
  int l_dprime = 0;
  int w2_psi_dpp = 0;
  bool z1_bubbles = false;  // whether 1 is in sigma
  Pin model = Pin::Minus;

  void validate() const;
};

struct DimBalance {
  long long lhs = 0;
  long long rhs = 0;
  bool admissible = false;
};

// Expected-dimension balance (n-1)(|k|+2l) = n(1-g) + mu(d) - dim Aut(Sigma)
// with g = 2 g0 + m - 1. The invariant vanishes when the two sides differ.
DimBalance expected_dim_balance(const SignContext& ctx);

// dim Aut: 3 for the disk, 1 for the annulus, 0 otherwise.
int dim_aut(int g0, int m);

// Sign of conjugation on the determinant line of a boundary value problem
// with total index mu over a surface with m boundary components:
//   s+ = mu(mu+1)/2 + (1-g0) n + m n + sum_{a<b} w1^a w1^b
//   s- = s+ + sum_a w1^a
int sign_T(long long mu, int n, int g0, int m, const std::vector<int>& w1_list, Pin model);

// Disk reduction: mu(mu+1)/2 for Pin+, mu(mu-1)/2 for Pin-.
int disk_sign_T(long long mu, Pin model);

// Sign of the involution phi'_L on the marked moduli space.
int sign_phi_L(const SignContext& ctx, Pin model);
inline int sign_phi_L(const SignContext& ctx) { return sign_phi_L(ctx, ctx.model); }

// Upsilon' = mu(d'') k''.
int upsilon_prime(long long mu_dpp, int k_dprime);

// Upsilon'' case table on (w1(d'_b), w1(d d'')):
//   (0,0) -> 0, (1,1) -> k', (1,0) -> k''-1, (0,1) -> k''+k'-1.
int upsilon_double_prime(int w1_dpb, int w1_bdpp, int k_prime, int k_dprime);

// Stratum signs for the two bubbling branches (z1 stays / z1 bubbles).
int sign_boundary_no_z1(const BubbleContext& b);
int sign_boundary_with_z1(const BubbleContext& b);

// Reduction for orientable L of odd dimension (mu(d'') even):
//   mu''/2 + w2(psi(d'')) + k'' + 1 + l''.
int sign_orientable_odd(const BubbleContext& b);

// Sign of the conjugation action on the full boundary stratum of the
// invariance cobordism, i.e. including the conjugation of the l'' interior
// point constraints (which reverses orientation once per constraint when
// the ambient dimension 2n has n odd).
int boundary_action_sign(const BubbleContext& b);

// Dimension restriction for a stratum to be nonempty:
//   n = 2: r in {0,-1} with mu'' + r = k'' + 2 l''
//   n = 3: mu'' = 2 k'' + 4 l''  (returns r = 0)
// Throws for n outside {2,3}.
std::optional<int> stratum_dimension_restriction(int n, long long mu_dpp, int k_dprime,
                                                 int l_dprime);
std::optional<int> stratum_dimension_restriction(const BubbleContext& b);

struct SweepBounds {
  long long mu_min = -4;
  long long mu_max = 12;
  int k_max = 12;
  int l_max = 6;

  static SweepBounds from_bound(long long bound) {
    return SweepBounds{-4, bound, static_cast<int>(bound), static_cast<int>(bound / 2)};
  }
};

enum class ParityHypothesis {
  Standard,  // w1(d_b) == k_b + 1 mod 2
  Broken,    // w1(d_b) == k_b mod 2 (deliberately wrong)
};

struct CancellationFailure {
  BubbleContext ctx;
  std::string branch;
  int sign = 0;
};

struct CancellationReport {
  int n = 0;
  ParityHypothesis hypothesis = ParityHypothesis::Standard;
  long long tuples_checked = 0;
  long long admissible = 0;
  long long evaluations = 0;
  std::vector<CancellationFailure> failures;
  long long failure_count = 0;  // failures beyond the stored cap included
  std::string notes;

  bool verified() const { return failure_count == 0; }
};

// Exhaustive check that every admissible stratum sign equals 1 over the
// grid mu'' in [mu_min, mu_max], k'', k' in [0, k_max], l'' in [0, l_max],
// with w1 bits fixed by consistency (w1(d d'') = mu'' mod 2, w1(d_b) by the
// parity hypothesis, w1(d'_b) their XOR) and w2(psi(d'')) = 0.
CancellationReport verify_cancellation(int n, const SweepBounds& bounds,
                                       ParityHypothesis hyp = ParityHypothesis::Standard);

}  // namespace ogw
