#include "strata/fq.hpp"

#include <stdexcept>

namespace strata {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// remainder of a by monic b over F_p, coefficients ascending
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    int t = a[i] % p;
    if (!t) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - t * b[j]) % p + p) % p;
  }
  a.resize(std::min<size_t>(a.size(), db));
  return a;
}

bool irreducible(const std::vector<int>& f, int p) {
  const int r = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= r / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      std::vector<int> g(d + 1);
      int c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      auto rem = poly_rem(f, g, p);
      bool zero = true;
      for (int x : rem) zero = zero && x == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<int> smallest_irreducible(int p, int r) {
  if (r == 1) return {0};
  int count = 1;
  for (int i = 0; i < r; ++i) count *= p;
  for (int code = 0; code < count; ++code) {
    // code digits from most significant are c_{r−1}, …, c_0
    std::vector<int> f(r + 1);
    int c = code;
    for (int i = 0; i < r; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[r] = 1;
    if (irreducible(f, p)) return std::vector<int>(f.begin(), f.begin() + r);
  }
  throw std::logic_error("no irreducible polynomial found");
}

FqField::FqField(int p, int r) : p_(p), r_(r) {
  if (!is_prime(p) || p == 2 || p > 13) throw std::invalid_argument("p must be an odd prime <= 13");
  if (r < 1 || r > 4) throw std::invalid_argument("extension degree must be 1..4");
  q_ = 1;
  for (int i = 0; i < r; ++i) q_ *= p;
  mod_ = smallest_irreducible(p, r);
  // find a primitive element, then tabulate
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, -1);
  for (Elem g = 1; g < static_cast<Elem>(q_); ++g) {
    Elem x = 1;
    int ord = 0;
    do {
      x = slow_mul(x, g);
      ++ord;
    } while (x != 1 && ord < q_);
    if (ord != q_ - 1) continue;
    x = 1;
    for (int i = 0; i < q_ - 1; ++i) {
      exp_[i] = x;
      log_[x] = i;
      x = slow_mul(x, g);
    }
    break;
  }
  frob_.resize(q_);
  for (Elem a = 0; a < static_cast<Elem>(q_); ++a) frob_[a] = pow(a, p_);
}

std::vector<int> FqField::digits(Elem a) const {
  std::vector<int> d(r_);
  for (int i = 0; i < r_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

FqField::Elem FqField::pack(const std::vector<int>& d) const {
  Elem a = 0;
  for (int i = r_ - 1; i >= 0; --i) a = a * p_ + static_cast<Elem>(((d[i] % p_) + p_) % p_);
  return a;
}

FqField::Elem FqField::slow_mul(Elem a, Elem b) const {
  auto da = digits(a), db = digits(b);
  std::vector<int> prod(2 * r_ - 1, 0);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  std::vector<int> monic(mod_);
  monic.push_back(1);
  auto rem = poly_rem(prod, monic, p_);
  rem.resize(r_, 0);
  return pack(rem);
}

FqField::Elem FqField::from_int(long a) const { return static_cast<Elem>(((a % p_) + p_) % p_); }

FqField::Elem FqField::add(Elem a, Elem b) const {
  Elem out = 0, scale = 1;
  for (int i = 0; i < r_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FqField::Elem FqField::neg(Elem a) const {
  Elem out = 0, scale = 1;
  for (int i = 0; i < r_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FqField::Elem FqField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FqField::Elem FqField::mul(Elem a, Elem b) const {
  if (!a || !b) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FqField::Elem FqField::inv(Elem a) const {
  if (!a) throw std::domain_error("inverse of zero in F_q");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FqField::Elem FqField::pow(Elem a, long e) const {
  if (e == 0) return 1;
  if (!a) return 0;
  long l = (static_cast<long>(log_[a]) * (e % (q_ - 1)) % (q_ - 1) + (q_ - 1)) % (q_ - 1);
  return exp_[l];
}

int FqField::to_int(Elem a) const {
  if (!in_prime_field(a)) throw std::domain_error("element not in the prime field");
  return static_cast<int>(a);
}

std::string FqField::str(Elem a) const {
  if (r_ == 1) return std::to_string(a);
  auto d = digits(a);
  std::string s;
  for (int i = r_ - 1; i >= 0; --i) {
    if (!d[i]) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || d[i] != 1) s += std::to_string(d[i]);
    if (i >= 1) s += "x";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace strata
