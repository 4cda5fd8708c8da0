#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace strata {

// F_{p^r}; an element is its coefficient vector in base p, digit i being the
// coefficient of x^i modulo the defining polynomial.
class FqField {
 public:
  using Elem = std::uint32_t;

  FqField(int p, int r);

  int p() const { return p_; }
  int r() const { return r_; }
  int q() const { return q_; }
  // c_0..c_{r−1} of the monic defining polynomial
  const std::vector<int>& modulus() const { return mod_; }

  Elem from_int(long a) const;
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long e) const;
  Elem frob(Elem a) const { return frob_[a]; }
  bool in_prime_field(Elem a) const { return a < static_cast<Elem>(p_); }
  // representative in [0, p) of a prime-field element
  int to_int(Elem a) const;
  Elem generator() const { return exp_[1 % (q_ - 1)]; }
  std::string str(Elem a) const;

 private:
  int p_, r_, q_;
  std::vector<int> mod_;
  std::vector<Elem> exp_, frob_;
  std::vector<int> log_;
  std::vector<int> digits(Elem a) const;
  Elem pack(const std::vector<int>& d) const;
  Elem slow_mul(Elem a, Elem b) const;
};

// Lexicographically smallest monic irreducible of degree r over F_p, reading
// coefficients from x^{r−1} down to x^0.
std::vector<int> smallest_irreducible(int p, int r);

}  // namespace strata
