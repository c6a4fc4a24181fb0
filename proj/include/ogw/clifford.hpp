#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ogw/pin.hpp"
#include "ogw/rational.hpp"

namespace ogw {

// Clifford algebra model: the Pin sign convention together with the
// number of generators e_1..e_n.
struct CliffordModel {
  Pin sign_model = Pin::Minus;
  int dimension = 1;

  CliffordModel() = default;
  CliffordModel(Pin p, int n) : sign_model(p), dimension(n) {
    if (n < 1 || n > 30) throw std::invalid_argument("Clifford dimension must be in [1,30]");
  }

  friend bool operator==(const CliffordModel& a, const CliffordModel& b) {
    return a.sign_model == b.sign_model && a.dimension == b.dimension;
  }
};

// A signed permutation matrix: exactly one entry of {-1,+1} per row and
// column. Column j is sent to sign_of[j] * (basis vector row_of[j]).
struct SignedPermutation {
  std::vector<int> row_of;
  std::vector<int> sign_of;

  int size() const { return static_cast<int>(row_of.size()); }

  static SignedPermutation identity(int n);
  // The coordinate reflection r_axis negating coordinate `axis` (1-based).
  static SignedPermutation reflection(int n, int axis);

  // Matrix composition this o other (apply `other` first).
  SignedPermutation compose(const SignedPermutation& other) const;

  int entry(int row, int col) const {
    return row_of[col] == row ? sign_of[col] : 0;
  }

  bool is_identity() const;

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.row_of == b.row_of && a.sign_of == b.sign_of;
  }

  std::string str() const;
};

// Element of the Clifford algebra Cl(n) under the chosen sign model:
// a finite rational combination of basis blades. Blades are bit sets over
// {1..n}; bit i-1 set means generator e_i is a factor. Zero coefficients
// are never stored.
class CliffordElement {
 public:
  using BladeMask = std::uint32_t;

  explicit CliffordElement(CliffordModel model) : model_(model) {}

  static CliffordElement zero(CliffordModel model) { return CliffordElement(model); }
  static CliffordElement scalar(CliffordModel model, const Rational& c);
  // Product of generators e_{indices[0]} ... e_{indices[k-1]} in the given
  // order (indices 1-based, repetition allowed) scaled by coeff.
  static CliffordElement blade(CliffordModel model, const std::vector<int>& indices,
                               const Rational& coeff = 1);
  static CliffordElement generator(CliffordModel model, int i) {
    return blade(model, {i});
  }

  const CliffordModel& model() const { return model_; }
  const std::map<BladeMask, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // Nonzero scalar multiple of a single basis blade.
  bool is_blade_multiple() const { return terms_.size() == 1; }

  CliffordElement operator-() const;
  friend CliffordElement operator+(const CliffordElement& a, const CliffordElement& b);
  friend CliffordElement operator-(const CliffordElement& a, const CliffordElement& b);
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
  CliffordElement operator*(const Rational& c) const;

  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.model_ == b.model_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  void add_term(BladeMask blade, const Rational& c);
  static void require_same_model(const CliffordElement& a, const CliffordElement& b);

  CliffordModel model_;
  std::map<BladeMask, Rational> terms_;
};

// Image of a blade multiple under the covering map Pin(n) -> O(n): the
// composition of the coordinate reflections named by the blade. The scalar
// factor is discarded. Throws std::invalid_argument on non-blade input.
SignedPermutation covering_map(const CliffordElement& a);

// Obstruction to a Pin structure: p+ = w2, p- = w2 + w1^2 (all mod 2).
// Returns 0 when a structure exists.
int pin_obstruction(int w1_squared, int w2, const CliffordModel& model);

// Constant-path case of the lifting condition: e1 * a == a * e1.
// Requires a blade multiple.
bool check_constant_lift(const CliffordElement& a);

// Conjugation lifting condition a == e1 * a * e1 for a blade multiple
// covering r1 r2. Throws if the covering map is not r1 r2.
bool check_conjugation_lift(const CliffordElement& a);

}  // namespace ogw
