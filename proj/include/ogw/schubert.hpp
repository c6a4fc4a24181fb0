#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ogw/rational.hpp"

namespace ogw {

// Two-row partition (a >= b >= 0) indexing a Schubert class on G(2,n).
struct Partition2 {
  int a = 0;
  int b = 0;

  Partition2() = default;
  Partition2(int a_, int b_) : a(a_), b(b_) {
    if (b < 0 || a < b) throw std::invalid_argument("partition needs a >= b >= 0");
  }

  int size() const { return a + b; }
  auto operator<=>(const Partition2&) const = default;

  std::string str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
};

// Cohomology class of the complex Grassmannian G(2,n) in the Schubert
// basis. Partitions outside the 2 x (n-2) box vanish and are never stored.
class SchurClass {
 public:
  explicit SchurClass(int ambient_n);

  static SchurClass zero(int ambient_n) { return SchurClass(ambient_n); }
  static SchurClass one(int ambient_n) { return sigma(ambient_n, {0, 0}); }
  static SchurClass sigma(int ambient_n, Partition2 p, const Rational& c = 1);

  int ambient() const { return ambient_n_; }
  int box() const { return ambient_n_ - 2; }
  const std::map<Partition2, Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(Partition2 p) const;

  SchurClass& add(Partition2 p, const Rational& c);

  friend SchurClass operator+(const SchurClass& u, const SchurClass& v);
  friend SchurClass operator-(const SchurClass& u, const SchurClass& v);
  SchurClass operator*(const Rational& c) const;

  friend bool operator==(const SchurClass& u, const SchurClass& v) {
    return u.ambient_n_ == v.ambient_n_ && u.coeffs_ == v.coeffs_;
  }

  std::string str() const;

 private:
  int ambient_n_;
  std::map<Partition2, Rational> coeffs_;
};

// Littlewood-Richardson product for two-row partitions: Giambelli on the
// second factor, iterated Pieri on the first, truncated to the box.
SchurClass schur_mul(const SchurClass& u, const SchurClass& v);

// Pieri step: multiply by the complete symmetric class h_k = sigma_(k,0).
SchurClass pieri_h(const SchurClass& u, int k);

// Evaluation against the fundamental class: coefficient of the full-box
// partition (n-2, n-2). Zero for anything below top degree.
Rational integrate(const SchurClass& u);

// Integer linear form c1*x1 + c2*x2 in the Chern roots of the tautological
// dual bundle.
struct LinearForm {
  long long c1 = 0;
  long long c2 = 0;
};

// Formal bundle given by its Chern roots. Rank = number of roots.
struct RootBundle {
  std::vector<LinearForm> roots;

  int rank() const { return static_cast<int>(roots.size()); }

  static RootBundle taut_dual() { return RootBundle{{{1, 0}, {0, 1}}}; }
  static RootBundle taut_sub() { return RootBundle{{{-1, 0}, {0, -1}}}; }
  // Symmetric power: roots are all sums of k-element multisets of roots.
  static RootBundle sym(int k, const RootBundle& base);
};

// k-th Chern class of a root bundle, expanded into the Schubert basis of
// G(2,n). The root multiset must be symmetric under x1 <-> x2.
SchurClass chern_class(int ambient_n, const RootBundle& bundle, int k);

// k-th Pontryagin class of the underlying real bundle:
// p_k = (-1)^k c_{2k}(B + conj(B)).
SchurClass pontryagin_class(int ambient_n, const RootBundle& bundle, int k);

// Top Chern class of Sym^k(S*) on G(2,n) via the roots {i x1 + (k-i) x2}.
SchurClass chern_top_sym_dual_taut(int k, int ambient_n);

// The classical count of lines on a quintic threefold:
// integral over G(2,5) of c6(Sym^5 S*). Exact.
long long count_complex_lines_quintic();

// Splitting data of Sym^k of an oriented 2-plane bundle with Euler symbol
// x, for odd k: weights {k, k-2, ..., 1}, Euler coefficient k(k-2)...1, and
// the Pontryagin polynomial prod_i (1 + w_i^2 p1) as coefficients in p1.
struct SymSplit {
  std::vector<long long> weights;
  long long euler_coeff = 1;
  std::vector<long long> pontryagin;  // pontryagin[j] = coefficient of p1^j

  long long top_pontryagin() const { return pontryagin.back(); }
};

SymSplit sym_oriented_rank2(int k);

// Integral of e(tau^+3) over the oriented real Grassmannian of 2-planes in
// R^5: orientation-cover factor 2 times the single transverse plane cut
// out by three generic hyperplanes.
int oriented_g25_integrate_e3();

// Test oracle hooks for the oriented integral.
// Nullity of a random integer 3x5 matrix, computed exactly; resamples on
// rank-deficient draws. Generic value is 2 (one 2-plane, counted once).
int random_hyperplane_kernel_dim(unsigned seed);
// Degree in t of q(a + t b) for the standard quadric q and random rational
// a, b: the degree of the plane-section quadric, generically 2.
int quadric_model_degree(unsigned seed);

struct RealLineCount {
  long long count = 0;
  long long euler_coeff = 0;
  long long base_integral = 0;
};

// The count of oriented real lines on the quintic: 15 x 2 = 30.
RealLineCount count_real_lines_quintic();

enum class AdjunctionConvention { PaperVerbatim, GenusFormula };

// Total double-point count of a rational degree-d curve from its
// self-intersection and c1 pairing. GenusFormula uses (d.d - c1 + 2)/2;
// PaperVerbatim keeps the printed (d.d - c1 - 2)/2.
Rational double_point_count(long long self_intersection, long long c1_pairing,
                            AdjunctionConvention convention);

// The invariant is twice the Welschinger count; odd input is an error.
long long welschinger_from_invariant(long long n);

// Lower bound for the real count: sum of the invariants, halved when the
// doubled surface is self-conjugate.
Rational real_count_lower_bound(const std::vector<long long>& ns, bool self_conjugate);

}  // namespace ogw
