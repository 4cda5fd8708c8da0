#include "strata/weyl.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace strata {

std::string Family::tag() const {
  switch (kind) {
    case Kind::B: return "B";
    case Kind::C: return "C";
    case Kind::D: return "D";
    default: return "D'";
  }
}

Family family_B(int m) { return {Kind::B, m}; }
Family family_D(int m) { return {Kind::D, m}; }
Family family_Dprime(int m) { return {Kind::Dprime, m}; }

std::vector<int> Root::vec(int m) const {
  std::vector<int> v(m, 0);
  v[i - 1] = 1;
  if (type == Plus) v[j - 1] = 1;
  if (type == Minus) v[j - 1] = -1;
  return v;
}

std::string Root::str() const {
  std::string s = "e" + std::to_string(i);
  if (type == Plus) s += "+e" + std::to_string(j);
  if (type == Minus) s += "-e" + std::to_string(j);
  return s;
}

Root parse_root(const std::string& s) {
  static const std::regex re(R"(e(\d+)(?:([+-])e(\d+))?)");
  std::smatch mt;
  if (!std::regex_match(s, mt, re)) throw std::invalid_argument("bad root: " + s);
  int i = std::stoi(mt[1]);
  if (!mt[2].matched) return Root::e(i);
  int j = std::stoi(mt[3]);
  if (i >= j) throw std::invalid_argument("root indices must increase: " + s);
  return mt[2] == "+" ? Root::plus(i, j) : Root::minus(i, j);
}

std::vector<Root> positive_roots(const Family& f) {
  std::vector<Root> r;
  if (f.kind == Kind::B)
    for (int i = 1; i <= f.m; ++i) r.push_back(Root::e(i));
  for (int i = 1; i <= f.m; ++i)
    for (int j = i + 1; j <= f.m; ++j) {
      r.push_back(Root::plus(i, j));
      r.push_back(Root::minus(i, j));
    }
  return r;
}

WeylElement unchecked_element(Family f, std::vector<int> a) { return WeylElement(f, std::move(a)); }

WeylElement WeylElement::from_window(Family f, std::vector<int> a) {
  const int m = f.m, n = f.n();
  if (m < 1) throw std::invalid_argument("rank must be positive");
  if (static_cast<int>(a.size()) != m)
    throw std::invalid_argument("window length " + std::to_string(a.size()) + " != m = " + std::to_string(m));
  std::vector<char> used(n + 1, 0);
  for (int x : a) {
    if (x < 1 || x > n) throw std::invalid_argument("window entry " + std::to_string(x) + " out of range");
    if (f.kind == Kind::B && x == m + 1) throw std::invalid_argument("m+1 is not allowed in a B window");
    if (used[x]) throw std::invalid_argument("duplicate or complementary window entry " + std::to_string(x));
    used[x] = 1;
    used[n + 1 - x] = 1;
  }
  WeylElement w(f, std::move(a));
  if (f.kind == Kind::D && w.big_entries() % 2)
    throw std::invalid_argument("odd number of entries above m in a D window");
  return w;
}

WeylElement WeylElement::identity(Family f) {
  std::vector<int> a(f.m);
  for (int i = 0; i < f.m; ++i) a[i] = i + 1;
  return WeylElement(f, a);
}

WeylElement WeylElement::simple(Family f, int i) {
  const int m = f.m;
  if (i < 1 || i > m) throw std::invalid_argument("simple reflection index out of range");
  auto a = identity(f).win_;
  if (i < m) {
    std::swap(a[i - 1], a[i]);
  } else if (f.kind == Kind::B) {
    a[m - 1] = m + 2;
  } else if (f.kind == Kind::C) {
    a[m - 1] = m + 1;
  } else {
    if (m < 2) throw std::invalid_argument("D needs m >= 2");
    a[m - 2] = m + 1;
    a[m - 1] = m + 2;
  }
  return WeylElement(f, a);
}

WeylElement WeylElement::flip(Family f) {
  if (!f.even()) throw std::invalid_argument("s'_m exists only in the even families");
  auto a = identity(f).win_;
  a[f.m - 1] = f.m + 1;
  if (f.kind == Kind::D) f.kind = Kind::Dprime;
  return WeylElement(f, a);
}

int WeylElement::operator()(int i) const {
  const int m = fam_.m, n = fam_.n();
  if (i <= m) return win_[i - 1];
  if (fam_.kind == Kind::B && i == m + 1) return m + 1;
  return n + 1 - win_[n - i];
}

std::vector<int> WeylElement::full() const {
  std::vector<int> f(n());
  for (int i = 1; i <= n(); ++i) f[i - 1] = (*this)(i);
  return f;
}

int WeylElement::big_entries() const {
  return static_cast<int>(std::count_if(win_.begin(), win_.end(), [&](int a) { return a > fam_.m; }));
}

std::string WeylElement::str() const {
  std::ostringstream os;
  os << fam_.tag() << fam_.m << ":[";
  for (size_t i = 0; i < win_.size(); ++i) os << (i ? "," : "") << win_[i];
  os << "]";
  return os.str();
}

WeylElement parse_element(const std::string& text) {
  static const std::regex re(R"(\s*(B|C|D'|D)(\d+):\[\s*([0-9,\s]*)\]\s*)");
  std::smatch mt;
  if (!std::regex_match(text, mt, re)) throw std::invalid_argument("bad element text: " + text);
  Family f;
  std::string t = mt[1];
  f.kind = t == "B" ? Kind::B : t == "C" ? Kind::C : t == "D" ? Kind::D : Kind::Dprime;
  f.m = std::stoi(mt[2]);
  std::vector<int> a;
  std::stringstream ss(mt[3].str());
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (tok.find_first_not_of(" \t") != std::string::npos) a.push_back(std::stoi(tok));
  return WeylElement::from_window(f, a);
}

static Family common_family(const Family& a, const Family& b) {
  if (a.m != b.m || a.even() != b.even())
    throw std::invalid_argument("family or rank mismatch: " + a.tag() + std::to_string(a.m) + " vs " +
                                b.tag() + std::to_string(b.m));
  if (a.kind == b.kind) return a;
  if (a.kind == Kind::C || b.kind == Kind::C) return {Kind::C, a.m};
  return {Kind::Dprime, a.m};
}

WeylElement compose(const WeylElement& u, const WeylElement& v) {
  Family f = common_family(u.fam_, v.fam_);
  std::vector<int> a(f.m);
  for (int i = 0; i < f.m; ++i) a[i] = u(v.win_[i]);
  return WeylElement(f, a);
}

WeylElement inverse(const WeylElement& w) {
  std::vector<int> f = w.full(), a(w.m());
  for (int i = 1; i <= w.n(); ++i)
    if (f[i - 1] <= w.m()) a[f[i - 1] - 1] = i;
  return WeylElement(w.fam_, a);
}

WeylElement word_element(const Family& f, const std::vector<int>& word) {
  WeylElement e = WeylElement::identity(f);
  for (int i : word) e = compose(e, i == 0 ? WeylElement::flip(f) : WeylElement::simple(f, i));
  return e;
}

int length(const WeylElement& w) {
  const auto& a = w.window();
  const int m = w.m();
  int inv = 0, big = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (a[i] > a[j]) ++inv;
  switch (w.family().kind) {
    case Kind::B:
      for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
          if (a[i] + a[j] > 2 * m + 2) ++big;
      break;
    case Kind::C:
      for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
          if (a[i] + a[j] > 2 * m + 1) ++big;
      break;
    default:
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          if (a[i] + a[j] > 2 * m + 1) ++big;
  }
  return inv + big;
}

int disc(const WeylElement& w) {
  std::vector<int> f = w.full();
  std::vector<char> seen(f.size(), 0);
  int sign = 1;
  for (size_t i = 0; i < f.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0;
    for (size_t j = i; !seen[j]; j = f[j] - 1) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

WeylElement reflection_in_root(const Family& f, const Root& alpha) {
  const int m = f.m, mir = f.mirror();
  if (alpha.type == Root::E && f.kind != Kind::B)
    throw std::invalid_argument("short root " + alpha.str() + " outside family B");
  if (alpha.i < 1 || alpha.i > m || (alpha.type != Root::E && (alpha.j <= alpha.i || alpha.j > m)))
    throw std::invalid_argument("root " + alpha.str() + " out of range");
  std::vector<int> av = alpha.vec(m);
  std::vector<int> a(m);
  for (int i = 0; i < m; ++i) {
    std::vector<long> e(m, 0);
    e[i] = 1;
    long c = coroot_pairing(alpha, e);
    for (int k = 0; k < m; ++k) e[k] -= c * av[k];
    int k = 0;
    while (e[k] == 0) ++k;
    a[i] = e[k] == 1 ? k + 1 : mir - (k + 1);
  }
  return unchecked_element(f, a);
}

WeylElement w_empty(const Family& f, EmptyVariant v) {
  Family g = f;
  if (g.kind == Kind::D) g.kind = Kind::Dprime;
  std::vector<int> a(f.m);
  for (int i = 0; i < f.m; ++i) a[i] = i + 1;
  if (v == EmptyVariant::TypeSwap) {
    a[0] = f.n();
  } else {
    for (int i = 0; i < f.m; ++i) a[i] = f.n() - i;
  }
  return WeylElement::from_window(g, a);
}

std::vector<WeylElement> all_elements(const Family& f) {
  const int m = f.m, mir = f.mirror();
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i + 1;
  std::vector<WeylElement> out;
  do {
    for (int mask = 0; mask < (1 << m); ++mask) {
      if (f.kind == Kind::D && __builtin_popcount(mask) % 2) continue;
      std::vector<int> a(m);
      for (int i = 0; i < m; ++i) a[i] = (mask >> i & 1) ? mir - perm[i] : perm[i];
      out.push_back(unchecked_element(f, a));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

WeylElement b_to_c(const WeylElement& w) {
  if (w.family().kind != Kind::B) throw std::invalid_argument("b_to_c expects a B element");
  std::vector<int> a = w.window();
  for (int& x : a)
    if (x > w.m() + 1) --x;
  return WeylElement::from_window({Kind::C, w.m()}, a);
}

WeylElement c_to_b(const WeylElement& w) {
  if (w.family().kind != Kind::C) throw std::invalid_argument("c_to_b expects a C element");
  std::vector<int> a = w.window();
  for (int& x : a)
    if (x > w.m()) ++x;
  return WeylElement::from_window(family_B(w.m()), a);
}

}  // namespace strata
