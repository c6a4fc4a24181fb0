#include "ogw/clifford.hpp"

#include <bit>
#include <sstream>

namespace ogw {

namespace {

// Transpositions needed to merge the word e_A e_B into canonical order:
// for each generator in B, the number of generators in A above it.
int reorder_swaps(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return swaps;
}

}  // namespace

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation p;
  p.row_of.resize(n);
  p.sign_of.assign(n, 1);
  for (int i = 0; i < n; ++i) p.row_of[i] = i;
  return p;
}

SignedPermutation SignedPermutation::reflection(int n, int axis) {
  if (axis < 1 || axis > n) throw std::invalid_argument("reflection axis out of range");
  SignedPermutation p = identity(n);
  p.sign_of[axis - 1] = -1;
  return p;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  if (size() != other.size()) {
    throw std::invalid_argument("signed permutation size mismatch");
  }
  SignedPermutation r;
  r.row_of.resize(size());
  r.sign_of.resize(size());
  for (int j = 0; j < size(); ++j) {
    int mid = other.row_of[j];
    r.row_of[j] = row_of[mid];
    r.sign_of[j] = sign_of[mid] * other.sign_of[j];
  }
  return r;
}

bool SignedPermutation::is_identity() const {
  for (int j = 0; j < size(); ++j) {
    if (row_of[j] != j || sign_of[j] != 1) return false;
  }
  return true;
}

std::string SignedPermutation::str() const {
  std::ostringstream os;
  os << "[";
  for (int j = 0; j < size(); ++j) {
    if (j) os << ", ";
    os << (sign_of[j] < 0 ? "-" : "+") << "e" << (row_of[j] + 1);
  }
  os << "]";
  return os.str();
}

CliffordElement CliffordElement::scalar(CliffordModel model, const Rational& c) {
  CliffordElement e(model);
  e.add_term(0, c);
  return e;
}

CliffordElement CliffordElement::blade(CliffordModel model, const std::vector<int>& indices,
                                       const Rational& coeff) {
  CliffordElement e = scalar(model, coeff);
  for (int i : indices) {
    if (i < 1 || i > model.dimension) {
      throw std::invalid_argument("generator index out of range: e" + std::to_string(i));
    }
    CliffordElement gen(model);
    gen.add_term(BladeMask{1} << (i - 1), 1);
    e = e * gen;
  }
  return e;
}

void CliffordElement::add_term(BladeMask blade, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(blade);
  if (it == terms_.end()) {
    terms_.emplace(blade, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void CliffordElement::require_same_model(const CliffordElement& a, const CliffordElement& b) {
  if (!(a.model_ == b.model_)) {
    throw std::invalid_argument("Clifford model mismatch");
  }
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement r(model_);
  for (const auto& [blade, c] : terms_) r.terms_.emplace(blade, -c);
  return r;
}

CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
  CliffordElement::require_same_model(a, b);
  CliffordElement r = a;
  for (const auto& [blade, c] : b.terms_) r.add_term(blade, c);
  return r;
}

CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
  return a + (-b);
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  CliffordElement::require_same_model(a, b);
  const int square_sign = a.model_.sign_model == Pin::Plus ? 1 : -1;
  CliffordElement r(a.model_);
  for (const auto& [ba, ca] : a.terms_) {
    for (const auto& [bb, cb] : b.terms_) {
      int sign = (reorder_swaps(ba, bb) % 2 == 0) ? 1 : -1;
      if (square_sign < 0 && (std::popcount(ba & bb) % 2 != 0)) sign = -sign;
      r.add_term(ba ^ bb, ca * cb * sign);
    }
  }
  return r;
}

CliffordElement CliffordElement::operator*(const Rational& c) const {
  CliffordElement r(model_);
  if (c.is_zero()) return r;
  for (const auto& [blade, coeff] : terms_) r.terms_.emplace(blade, coeff * c);
  return r;
}

std::string CliffordElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [blade, c] : terms_) {
    Rational coeff = c;
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    std::string blade_str;
    for (int i = 0; i < 30; ++i) {
      if (blade & (BladeMask{1} << i)) blade_str += "e" + std::to_string(i + 1);
    }
    if (blade_str.empty()) {
      os << coeff.str();
    } else {
      if (!(coeff == Rational(1))) os << coeff.str() << " ";
      os << blade_str;
    }
  }
  return os.str();
}

SignedPermutation covering_map(const CliffordElement& a) {
  if (!a.is_blade_multiple()) {
    throw std::invalid_argument("covering map needs a nonzero blade multiple");
  }
  const int n = a.model().dimension;
  auto blade = a.terms().begin()->first;
  SignedPermutation p = SignedPermutation::identity(n);
  for (int i = 0; i < n; ++i) {
    if (blade & (CliffordElement::BladeMask{1} << i)) {
      p = p.compose(SignedPermutation::reflection(n, i + 1));
    }
  }
  return p;
}

int pin_obstruction(int w1_squared, int w2, const CliffordModel& model) {
  require_bit(w1_squared, "w1^2");
  require_bit(w2, "w2");
  return model.sign_model == Pin::Plus ? w2 : (w2 ^ w1_squared);
}

bool check_constant_lift(const CliffordElement& a) {
  if (!a.is_blade_multiple()) {
    throw std::invalid_argument("lifting check needs a nonzero blade multiple");
  }
  CliffordElement e1 = CliffordElement::generator(a.model(), 1);
  return e1 * a == a * e1;
}

bool check_conjugation_lift(const CliffordElement& a) {
  if (!a.is_blade_multiple()) {
    throw std::invalid_argument("lifting check needs a nonzero blade multiple");
  }
  const int n = a.model().dimension;
  if (n < 2) throw std::invalid_argument("conjugation lift needs dimension >= 2");
  SignedPermutation r1r2 =
      SignedPermutation::reflection(n, 1).compose(SignedPermutation::reflection(n, 2));
  if (!(covering_map(a) == r1r2)) {
    throw std::invalid_argument("conjugation lift requires covering map r1 r2");
  }
  CliffordElement e1 = CliffordElement::generator(a.model(), 1);
  return a == e1 * a * e1;
}

}  // namespace ogw
