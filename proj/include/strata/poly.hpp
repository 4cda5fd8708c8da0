#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace strata {

// Univariate polynomial in p with rational coefficients, c[i] is the p^i coefficient.
class PolyP {
 public:
  PolyP() = default;
  PolyP(long c);
  PolyP(const mpq_class& c);
  explicit PolyP(std::vector<mpq_class> coeffs);

  static PolyP monomial(const mpq_class& c, int deg);
  static PolyP p() { return monomial(1, 1); }
  // 1 + p + ... + p^hi, empty sum for hi < 0
  static PolyP geometric(int hi);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int i) const;
  const mpq_class& lead() const { return c_.back(); }

  PolyP operator-() const;
  PolyP& operator+=(const PolyP& o);
  PolyP& operator-=(const PolyP& o);
  PolyP& operator*=(const PolyP& o);
  friend PolyP operator+(PolyP a, const PolyP& b) { return a += b; }
  friend PolyP operator-(PolyP a, const PolyP& b) { return a -= b; }
  friend PolyP operator*(PolyP a, const PolyP& b) { return a *= b; }
  friend bool operator==(const PolyP& a, const PolyP& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolyP& a, const PolyP& b) { return !(a == b); }

  // Euclidean division, throws on zero divisor.
  void divmod(const PolyP& d, PolyP& q, PolyP& r) const;
  PolyP monic() const;
  PolyP pow(int e) const;
  mpq_class eval(const mpq_class& x) const;
  bool has_integer_coeffs() const;

  std::string str() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

PolyP gcd(PolyP a, PolyP b);
std::ostream& operator<<(std::ostream& os, const PolyP& f);

// Reduced fraction num/den with monic denominator.
class RatP {
 public:
  RatP() : num_(0), den_(1) {}
  RatP(long c) : num_(c), den_(1) {}
  RatP(const mpq_class& c) : num_(c), den_(1) {}
  RatP(const PolyP& f) : num_(f), den_(1) {}
  RatP(PolyP num, PolyP den);

  const PolyP& num() const { return num_; }
  const PolyP& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.degree() == 0; }
  // Throws unless the denominator is constant.
  PolyP as_poly() const;

  RatP operator-() const;
  RatP& operator+=(const RatP& o);
  RatP& operator-=(const RatP& o);
  RatP& operator*=(const RatP& o);
  RatP& operator/=(const RatP& o);
  friend RatP operator+(RatP a, const RatP& b) { return a += b; }
  friend RatP operator-(RatP a, const RatP& b) { return a -= b; }
  friend RatP operator*(RatP a, const RatP& b) { return a *= b; }
  friend RatP operator/(RatP a, const RatP& b) { return a /= b; }
  friend bool operator==(const RatP& a, const RatP& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatP& a, const RatP& b) { return !(a == b); }

  std::string str() const;

 private:
  void normalize();
  PolyP num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RatP& f);

// "num/den" rendering used by the JSON output, always with a denominator.
std::string rational_string(const mpq_class& q);

}  // namespace strata
