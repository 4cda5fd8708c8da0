#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace strata {

enum class Kind { B, C, D, Dprime };

struct Family {
  Kind kind = Kind::B;
  int m = 1;

  int n() const { return kind == Kind::B ? 2 * m + 1 : 2 * m; }
  // σ(i) > m is read as −ε_{mirror−σ(i)}
  int mirror() const { return kind == Kind::B ? 2 * m + 2 : 2 * m + 1; }
  bool even() const { return kind != Kind::B; }
  std::string tag() const;  // "B", "C", "D", "D'"
  friend bool operator==(const Family& a, const Family& b) {
    return a.kind == b.kind && a.m == b.m;
  }
};

Family family_B(int m);
Family family_D(int m);
Family family_Dprime(int m);

struct Root {
  enum Type { E, Plus, Minus };
  Type type = E;
  int i = 1, j = 0;  // j unused for E

  static Root e(int i) { return {E, i, 0}; }
  static Root plus(int i, int j) { return {Plus, i, j}; }
  static Root minus(int i, int j) { return {Minus, i, j}; }
  std::vector<int> vec(int m) const;
  int norm2() const { return type == E ? 1 : 2; }
  std::string str() const;  // "e1", "e1+e3", "e1-e3"
  friend bool operator==(const Root& a, const Root& b) {
    return a.type == b.type && a.i == b.i && (a.type == E || a.j == b.j);
  }
};

Root parse_root(const std::string& s);
// Positive roots of the family: short roots (B only), then ε_i+ε_j, ε_i−ε_j.
std::vector<Root> positive_roots(const Family& f);

using WeightVec = std::vector<long>;

class WeylElement {
 public:
  // Validates; throws std::invalid_argument.
  static WeylElement from_window(Family f, std::vector<int> a);
  static WeylElement identity(Family f);
  // s_1..s_m; in the even families s_m = (m−1,m+1)(m,m+2).
  static WeylElement simple(Family f, int i);
  // s′_m = (m,m+1); lives in D′ (and C).
  static WeylElement flip(Family f);

  const Family& family() const { return fam_; }
  int m() const { return fam_.m; }
  int n() const { return fam_.n(); }
  const std::vector<int>& window() const { return win_; }
  // σ(i) for 1 ≤ i ≤ n
  int operator()(int i) const;
  std::vector<int> full() const;
  // Number of window entries above m; even for W^D.
  int big_entries() const;

  std::string str() const;  // "B2:[5,2]"

  // D and D′ share the ambient group, so the tag is ignored here.
  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.fam_.m == b.fam_.m && a.fam_.even() == b.fam_.even() && a.win_ == b.win_;
  }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.win_ < b.win_; }

 private:
  WeylElement(Family f, std::vector<int> a) : fam_(f), win_(std::move(a)) {}
  Family fam_;
  std::vector<int> win_;
  friend WeylElement compose(const WeylElement&, const WeylElement&);
  friend WeylElement inverse(const WeylElement&);
  friend WeylElement unchecked_element(Family, std::vector<int>);
};

struct WeylHash {
  size_t operator()(const WeylElement& w) const {
    size_t h = 0;
    for (int a : w.window()) h = h * 131 + static_cast<size_t>(a);
    return h;
  }
};

WeylElement parse_element(const std::string& text);

// (u∘v)(i) = u(v(i)). D and D′ mix to D′.
WeylElement compose(const WeylElement& u, const WeylElement& v);
WeylElement inverse(const WeylElement& w);
WeylElement word_element(const Family& f, const std::vector<int>& word);  // letter 0 is s′_m

// Family-specific inversion count; D and D′ use ℓ_D.
int length(const WeylElement& w);
// Signature of the full permutation of S_n.
int disc(const WeylElement& w);

template <class T>
std::vector<T> act_on_weight(const WeylElement& w, const std::vector<T>& x) {
  const int m = w.m(), mir = w.family().mirror();
  std::vector<T> y(m, T(0));
  for (int i = 0; i < m; ++i) {
    int a = w.window()[i];
    if (a <= m)
      y[a - 1] += x[i];
    else
      y[mir - a - 1] -= x[i];
  }
  return y;
}

WeylElement reflection_in_root(const Family& f, const Root& alpha);

// ⟨α∨, x⟩ with α∨ = 2α/(α,α).
template <class T>
T coroot_pairing(const Root& a, const std::vector<T>& x) {
  switch (a.type) {
    case Root::E: return T(2) * x[a.i - 1];
    case Root::Plus: return x[a.i - 1] + x[a.j - 1];
    default: return x[a.i - 1] - x[a.j - 1];
  }
}

enum class EmptyVariant { TypeSwap, Antidiagonal };
// Element of the ambient group (B, or D′ for the even families).
WeylElement w_empty(const Family& f, EmptyVariant v);

// All elements of the group; D′ gives the full W^C_m. Only sensible for small m.
std::vector<WeylElement> all_elements(const Family& f);

// W^B_m → W^C_m, w ↦ σwσ^{-1} where σ collapses the middle of S_{2m+1}.
WeylElement b_to_c(const WeylElement& w);
WeylElement c_to_b(const WeylElement& w);

}  // namespace strata
