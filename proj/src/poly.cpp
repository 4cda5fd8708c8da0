#include "strata/poly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace strata {

PolyP::PolyP(long c) {
  if (c != 0) c_.push_back(mpq_class(c));
}

PolyP::PolyP(const mpq_class& c) {
  if (c != 0) c_.push_back(c);
}

PolyP::PolyP(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

PolyP PolyP::monomial(const mpq_class& c, int deg) {
  if (c == 0) return PolyP();
  std::vector<mpq_class> v(deg + 1);
  v[deg] = c;
  return PolyP(std::move(v));
}

PolyP PolyP::geometric(int hi) {
  if (hi < 0) return PolyP();
  return PolyP(std::vector<mpq_class>(hi + 1, mpq_class(1)));
}

void PolyP::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class PolyP::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

PolyP PolyP::operator-() const {
  PolyP r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

PolyP& PolyP::operator+=(const PolyP& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyP& PolyP::operator-=(const PolyP& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyP& PolyP::operator*=(const PolyP& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

void PolyP::divmod(const PolyP& d, PolyP& q, PolyP& r) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  r = *this;
  q = PolyP();
  int dd = d.degree();
  if (r.degree() < dd) return;
  std::vector<mpq_class> qc(r.degree() - dd + 1);
  mpq_class inv = 1 / d.lead();
  while (!r.is_zero() && r.degree() >= dd) {
    int s = r.degree() - dd;
    mpq_class t = r.lead() * inv;
    qc[s] = t;
    for (int i = 0; i <= dd; ++i) r.c_[s + i] -= t * d.c_[i];
    r.trim();
  }
  q = PolyP(std::move(qc));
}

PolyP PolyP::monic() const {
  if (is_zero()) return *this;
  PolyP r(*this);
  mpq_class l = lead();
  for (auto& x : r.c_) x /= l;
  return r;
}

PolyP PolyP::pow(int e) const {
  PolyP r(1), b(*this);
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

mpq_class PolyP::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

bool PolyP::has_integer_coeffs() const {
  for (const auto& x : c_)
    if (x.get_den() != 1) return false;
  return true;
}

std::string PolyP::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& a = c_[i];
    if (a == 0) continue;
    mpq_class mag = abs(a);
    os << (a < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str() << (i ? "*" : "");
    if (i == 1) os << "p";
    if (i > 1) os << "p^" << i;
  }
  return os.str();
}

PolyP gcd(PolyP a, PolyP b) {
  while (!b.is_zero()) {
    PolyP q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::ostream& operator<<(std::ostream& os, const PolyP& f) { return os << f.str(); }

RatP::RatP(PolyP num, PolyP den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

void RatP::normalize() {
  if (num_.is_zero()) {
    den_ = PolyP(1);
    return;
  }
  if (den_.degree() > 0) {
    PolyP g = gcd(num_, den_);
    if (g.degree() > 0) {
      PolyP q, r;
      num_.divmod(g, q, r);
      num_ = q;
      den_.divmod(g, q, r);
      den_ = q;
    }
  }
  mpq_class l = den_.lead();
  if (l != 1) {
    num_ *= PolyP(1 / l);
    den_ *= PolyP(1 / l);
  }
}

PolyP RatP::as_poly() const {
  if (!is_poly()) throw std::domain_error("not a polynomial: " + str());
  return num_;
}

RatP RatP::operator-() const {
  RatP r(*this);
  r.num_ = -r.num_;
  return r;
}

RatP& RatP::operator+=(const RatP& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatP& RatP::operator-=(const RatP& o) { return *this += -o; }

RatP& RatP::operator*=(const RatP& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatP& RatP::operator/=(const RatP& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string RatP::str() const {
  if (is_poly()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatP& f) { return os << f.str(); }

std::string rational_string(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace strata
