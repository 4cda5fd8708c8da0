#include "strata/final.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace strata {

static std::vector<int> down_from(int hi) {
  std::vector<int> v;
  for (int i = hi; i >= 1; --i) v.push_back(i);
  return v;
}

static std::vector<std::vector<int>> final_words(const Family& f) {
  const int m = f.m;
  std::vector<std::vector<int>> words;
  if (f.kind == Kind::B) {
    for (int k = 1; k < m; ++k) {
      std::vector<int> w;
      for (int i = k; i <= m; ++i) w.push_back(i);
      for (int i : down_from(m - 1)) w.push_back(i);
      words.push_back(w);
    }
    for (int k = m; k >= 0; --k) words.push_back(down_from(k));
    return words;
  }
  for (int k = 1; k <= m - 2; ++k) {
    std::vector<int> w;
    for (int i = k; i <= m - 2; ++i) w.push_back(i);
    w.push_back(m);
    for (int i : down_from(m - 1)) w.push_back(i);
    words.push_back(w);
  }
  std::vector<int> w{m};
  for (int i : down_from(m - 1)) w.push_back(i);
  words.push_back(w);
  w = {m};
  for (int i : down_from(m - 2)) w.push_back(i);
  words.push_back(w);
  for (int j = 1; j <= m; ++j) words.push_back(down_from(m - j));
  return words;
}

std::vector<FinalElement> final_elements(const Family& f, bool twisted) {
  if (f.kind != Kind::B && f.kind != Kind::D && f.kind != Kind::Dprime)
    throw std::invalid_argument("final elements exist for B and D only");
  if (twisted && f.kind == Kind::B) throw std::invalid_argument("no twisted finals in family B");
  if (f.even() && f.m < 2) throw std::invalid_argument("D needs m >= 2");
  Family base = f;
  if (base.kind == Kind::Dprime) base.kind = Kind::D;
  std::vector<FinalElement> out;
  int k = 0;
  for (auto word : final_words(base)) {
    FinalElement fe{base, ++k, word_element(base, word), word, twisted};
    if (twisted) {
      fe.family.kind = Kind::Dprime;
      fe.element = compose(fe.element, WeylElement::flip(base));
      fe.word.push_back(0);
    }
    out.push_back(std::move(fe));
  }
  return out;
}

int r_function(const WeylElement& w, int i, int j) {
  const int n = w.n();
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("r_w index out of range");
  int c = 0;
  for (int a = 1; a <= i; ++a)
    if (w(a) <= j) ++c;
  return c;
}

bool is_final_by_r(const WeylElement& w) {
  const int n = w.n();
  const WeylElement wi = inverse(w);
  // r_{w^{-1}}(i,j) = r_w(j,i)
  auto r = [&](int i, int j) { return r_function(wi, i, j); };
  const int a = w(1);
  for (int i = 1; i < n; ++i) {
    const int top = r(i, n - 1);
    for (int j = 1; j < n; ++j) {
      if (n % 2 == 0 && 2 * j == n) continue;
      int expect = i < a ? std::min(j, top + 1) - 1 : std::min(j, top);
      if (r(i, j) != expect) return false;
    }
  }
  return true;
}

std::vector<ColengthEntry> colength_one_below(const WeylElement& w) {
  const int l = length(w);
  Family f = w.family();
  if (f.kind == Kind::C) throw std::invalid_argument("colength scan supports B, D and D'");
  std::vector<ColengthEntry> out;
  for (const Root& r : positive_roots(f)) {
    WeylElement u = compose(w, reflection_in_root(f, r));
    if (length(u) == l - 1) out.push_back({r, u});
  }
  return out;
}

void normalize_roots(std::vector<Root>& roots) {
  auto key = [](const Root& r) {
    int t = r.type == Root::E ? 0 : r.type == Root::Plus ? 1 : 2;
    int j = r.type == Root::Minus ? -r.j : r.j;
    return std::make_tuple(t, r.i, j);
  };
  std::sort(roots.begin(), roots.end(), [&](const Root& a, const Root& b) { return key(a) < key(b); });
}

std::vector<Root> tabulated_colength_roots(const Family& f, int k, bool twisted) {
  const int m = f.m;
  if (k < 1 || k > 2 * m) throw std::invalid_argument("final index out of range");
  std::vector<Root> r;
  if (f.kind == Kind::B) {
    if (k < m) {
      for (int j = k + 1; j <= m; ++j) r.push_back(Root::plus(1, j));
      for (int j = m; j >= k + 1; --j) r.push_back(Root::minus(1, j));
    } else if (k == m) {
      r.push_back(Root::e(1));
    } else if (k < 2 * m) {
      // w_{2m−t} = s_t…s_1
      r.push_back(Root::minus(1, 2 * m - k + 1));
    }
    return r;
  }
  if (k <= m - 2) {
    const int top = twisted ? m : m - 1;
    for (int j = k + 1; j <= top; ++j) r.push_back(Root::plus(1, j));
    for (int j = top; j >= k + 1; --j) r.push_back(Root::minus(1, j));
  } else if (k == m - 1) {
    r = {Root::plus(1, m), Root::minus(1, m)};
  } else if (k == m) {
    r = {Root::plus(1, m)};
  } else if (k == m + 1) {
    r = {Root::minus(1, m)};
  } else if (k < 2 * m) {
    r = {Root::minus(1, 2 * m - k + 1)};
  }
  if (twisted) {
    // below w·s′ the entries are u·s′ = (w s′)·s_{s′(α)}
    for (Root& a : r)
      if (a.type != Root::E && a.j == m) a.type = a.type == Root::Plus ? Root::Minus : Root::Plus;
  }
  normalize_roots(r);
  return r;
}

std::vector<int> reduced_word(const WeylElement& w) {
  // peel right descents; s′_m only when the element leaves W^D
  Family f = w.family();
  std::vector<int> word;
  WeylElement x = w;
  if (f.even() && x.big_entries() % 2) {
    x = compose(x, WeylElement::flip(f));
    word.push_back(0);
  }
  while (length(x) > 0) {
    for (int i = 1; i <= f.m; ++i) {
      WeylElement y = compose(x, WeylElement::simple(f, i));
      if (length(y) < length(x)) {
        word.push_back(i);
        x = y;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
  if (u.family().even() && (u.big_entries() % 2) != (w.big_entries() % 2)) return false;
  std::vector<int> word = reduced_word(w);
  // subword property: enumerate all elements reachable by deleting letters
  std::unordered_set<WeylElement, WeylHash> cur{WeylElement::identity(w.family())};
  for (int letter : word) {
    std::unordered_set<WeylElement, WeylHash> next = cur;
    WeylElement s = letter == 0 ? WeylElement::flip(w.family()) : WeylElement::simple(w.family(), letter);
    for (const auto& x : cur) next.insert(compose(x, s));
    cur.swap(next);
  }
  return cur.count(u) > 0;
}

}  // namespace strata
