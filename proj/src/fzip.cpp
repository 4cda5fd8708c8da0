#include "strata/fzip.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace strata {

// ---- Lin

Elem Lin::dot(const Vec& a, const Vec& b) const {
  Elem s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
  return s;
}

Elem Lin::pair(const Vec& a, const Vec& b) const {
  const size_t n = a.size();
  Elem s = 0;
  for (size_t i = 0; i < n; ++i) s = F.add(s, F.mul(a[i], b[n - 1 - i]));
  return s;
}

Vec Lin::axpy(Elem t, const Vec& x, const Vec& y) const {
  Vec r = y;
  if (!t) return r;
  for (size_t i = 0; i < x.size(); ++i) r[i] = F.add(r[i], F.mul(t, x[i]));
  return r;
}

Vec Lin::scale(Elem t, const Vec& x) const {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = F.mul(t, x[i]);
  return r;
}

Vec Lin::frob(const Vec& x) const {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = F.frob(x[i]);
  return r;
}

Mat Lin::rref(Mat a) const {
  if (a.empty()) return a;
  const int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    a[r] = scale(F.inv(a[r][c]), a[r]);
    for (int i = 0; i < rows; ++i)
      if (i != r && a[i][c]) a[i] = axpy(F.neg(a[i][c]), a[r], a[i]);
    ++r;
  }
  a.resize(r);
  return a;
}

Mat Lin::join(const Mat& a, const Mat& b) const {
  Mat c = a;
  c.insert(c.end(), b.begin(), b.end());
  return rref(std::move(c));
}

int Lin::meet_dim(const Mat& a, const Mat& b) const { return rank(a) + rank(b) - rank(join(a, b)); }

bool Lin::contains(const Mat& space, const Vec& v) const { return rank(join(space, {v})) == rank(space); }

bool Lin::contains(const Mat& big, const Mat& small) const { return rank(join(big, small)) == rank(big); }

Mat Lin::kernel(const Mat& a, int ncols) const {
  Mat r = rref(a);
  std::vector<int> pivot_of_col(ncols, -1);
  for (size_t i = 0; i < r.size(); ++i)
    for (int c = 0; c < ncols; ++c)
      if (r[i][c]) {
        pivot_of_col[c] = static_cast<int>(i);
        break;
      }
  Mat out;
  for (int f = 0; f < ncols; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    Vec v(ncols, 0);
    v[f] = 1;
    for (int c = 0; c < ncols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = F.neg(r[pivot_of_col[c]][f]);
    out.push_back(v);
  }
  return out;
}

Mat Lin::perp(const Mat& a, int n) const {
  Mat b;
  for (const auto& row : a) b.emplace_back(row.rbegin(), row.rend());
  if (b.empty()) {
    Mat id(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  }
  return rref(kernel(b, n));
}

bool Lin::solve(const Mat& rows, const Vec& v, Vec& c) const {
  // equations: Σ_i c_i rows_i[j] = v[j]
  const int k = static_cast<int>(rows.size()), n = static_cast<int>(v.size());
  Mat aug(n, Vec(k + 1, 0));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < k; ++i) aug[j][i] = rows[i][j];
    aug[j][k] = v[j];
  }
  Mat r = rref(aug);
  c.assign(k, 0);
  for (const auto& row : r) {
    int lead = 0;
    while (lead <= k && !row[lead]) ++lead;
    if (lead == k) return false;
    c[lead] = row[k];
  }
  return true;
}

Elem Lin::det(Mat a) const {
  const int n = static_cast<int>(a.size());
  Elem d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(a[c], a[piv]);
      d = F.neg(d);
    }
    d = F.mul(d, a[c][c]);
    Elem inv = F.inv(a[c][c]);
    for (int i = c + 1; i < n; ++i)
      if (a[i][c]) a[i] = axpy(F.neg(F.mul(a[i][c], inv)), a[c], a[i]);
  }
  return d;
}

Mat Lin::matmul(const Mat& a, const Mat& b) const {
  const size_t n = a.size(), k = b.size(), l = b.empty() ? 0 : b[0].size();
  Mat c(n, Vec(l, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t)
      if (a[i][t])
        for (size_t j = 0; j < l; ++j) c[i][j] = F.add(c[i][j], F.mul(a[i][t], b[t][j]));
  return c;
}

// ---- zips

namespace {

Mat identity_mat(int n) {
  Mat id(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

Mat first_rows(const Mat& a, int k) { return Mat(a.begin(), a.begin() + k); }

void check_orthogonal_unipotent(const Mat& x, int n, const FqField& F) {
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("parameter matrix has wrong size");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(x[i].size()) != n) throw std::invalid_argument("parameter matrix has wrong size");
    for (int j = 0; j <= i; ++j)
      if (x[i][j]) throw std::invalid_argument("parameters must be strictly upper triangular");
  }
  // (I+x)^T J (I+x) = J
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem s = 0;
      for (int a = 0; a < n; ++a) {
        Elem u1 = F.add(x[a][i], a == i ? 1 : 0);
        Elem u2 = F.add(x[n - 1 - a][j], n - 1 - a == j ? 1 : 0);
        s = F.add(s, F.mul(u1, u2));
      }
      if (s != (i + j == n - 1 ? 1u : 0u)) throw std::invalid_argument("Id + x is not orthogonal");
    }
}

}  // namespace

Vec FlaggedFZip::phi_mid(const Vec& v) const {
  Lin L{*field};
  Vec r(n, 0);
  for (int i = 1; i + 1 < n; ++i)
    if (v[i]) r = L.axpy(field->frob(v[i]), phi[i], r);
  return r;
}

PartialFlag FlaggedFZip::conjugate_flag(const PartialFlag& e) const {
  Lin L{*field};
  PartialFlag g;
  for (const auto& ej : e) {
    if (static_cast<int>(ej.size()) == n) {
      g.push_back(identity_mat(n));
      continue;
    }
    Mat rows{g1()};
    for (const auto& v : ej) rows.push_back(phi_mid(v));
    g.push_back(L.rref(rows));
  }
  return g;
}

PartialFlag FlaggedFZip::hodge_flag() const {
  PartialFlag f;
  for (int j = 1; j <= n; ++j) f.push_back(first_rows(E, j));
  return f;
}

FlaggedFZip yw_point(const WeylElement& w, std::shared_ptr<const FqField> field, const Mat* params, int eps) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("middle sign must be +1 or -1");
  FlaggedFZip z;
  z.field = field;
  z.n = w.n();
  z.eps = w.family().even() ? 1 : eps;
  z.w = w;
  const int n = z.n;
  const FqField& F = *field;
  z.x = params ? *params : Mat(n, Vec(n, 0));
  check_orthogonal_unipotent(z.x, n, F);
  z.E = identity_mat(n);
  const WeylElement winv = inverse(w);
  z.phi.assign(n, Vec(n, 0));
  for (int i = 1; i <= n; ++i) {
    int swapped = i == 1 ? n : i == n ? 1 : i;
    int pi = winv(swapped);
    Elem sgn = (n % 2 && i == n / 2 + 1 && z.eps < 0) ? F.neg(1) : 1;
    for (int a = 0; a < n; ++a) {
      Elem u = F.add(z.x[a][pi - 1], a == pi - 1 ? 1 : 0);
      z.phi[i - 1][a] = F.mul(sgn, u);
    }
  }
  return z;
}

Mat random_admissible_params(int n, const FqField& F, std::mt19937_64& rng, double density) {
  Lin L{F};
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> val(1, F.q() - 1);
  // Y antisymmetric supported on a+b > n−1 (0-based); X = J·Y is strictly
  // upper triangular and skew for the pairing, so its Cayley transform is
  // orthogonal and unipotent.
  Mat Y(n, Vec(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (a + b > n - 1 && keep(rng)) {
        Elem y = static_cast<Elem>(val(rng));
        Y[a][b] = y;
        Y[b][a] = F.neg(y);
      }
  Mat X(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) X[i] = Y[n - 1 - i];
  // (I−X)^{-1} = I + X + X² + …
  Mat S = identity_mat(n), P = identity_mat(n);
  for (int k = 1; k < n; ++k) {
    P = L.matmul(P, X);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) S[i][j] = F.add(S[i][j], P[i][j]);
  }
  Mat IX = identity_mat(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) IX[i][j] = F.add(IX[i][j], X[i][j]);
  Mat u = L.matmul(S, IX);
  for (int i = 0; i < n; ++i) u[i][i] = F.sub(u[i][i], 1);
  check_orthogonal_unipotent(u, n, F);
  return u;
}

WeylElement relative_position(const PartialFlag& e, const PartialFlag& g, const FqField& F) {
  Lin L{F};
  if (e.empty() || g.empty()) throw std::invalid_argument("empty flag");
  const int n = static_cast<int>(e[0][0].size());
  if (static_cast<int>(e.size()) < n - 1 || static_cast<int>(g.size()) < n - 1)
    throw std::invalid_argument("relative position needs complete flags");
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == 0 || j == 0) continue;
      if (i == n) d[i][j] = j;
      else if (j == n) d[i][j] = i;
      else {
        if (L.rank(e[i - 1]) != i || L.rank(g[j - 1]) != j) throw std::invalid_argument("flag member of wrong dimension");
        d[i][j] = L.meet_dim(e[i - 1], g[j - 1]);
      }
    }
  std::vector<int> sigma(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int found = 0;
    for (int j = 1; j <= n; ++j) {
      int delta = d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1];
      if (delta == 1 && !found) found = j;
      else if (delta != 0) throw std::invalid_argument("intersection table is not a permutation");
    }
    if (!found) throw std::invalid_argument("intersection table is not a permutation");
    sigma[i] = found;
  }
  for (int i = 1; i <= n; ++i)
    if (sigma[n + 1 - i] != n + 1 - sigma[i]) throw std::invalid_argument("relative position is not self-dual");
  const int m = n / 2;
  std::vector<int> win(sigma.begin() + 1, sigma.begin() + 1 + m);
  Family f = n % 2 ? family_B(m) : family_D(m);
  if (n % 2 == 0) {
    int big = 0;
    for (int a : win) big += a > m;
    if (big % 2) f = family_Dprime(m);
  }
  return WeylElement::from_window(f, win);
}

namespace {

struct Chain {
  std::vector<Mat> U;
  Mat V;  // G_1 + φ(U_k)
};

Chain canonical_chain(const FlaggedFZip& z) {
  Lin L{*z.field};
  const int n = z.n;
  Mat H1 = first_rows(z.E, 1), Hn1 = first_rows(z.E, n - 1);
  Mat F1 = L.rref({z.g1()});
  Chain c;
  c.U.push_back(L.rref(H1));
  c.V = F1;
  for (int guard = 0;; ++guard) {
    if (guard > n) throw std::runtime_error("canonical filtration did not stabilise");
    if (!L.contains(Hn1, c.V) || L.contains(c.V, H1[0])) break;
    Mat next = L.join(H1, c.V);
    c.U.push_back(next);
    Mat rows = F1;
    for (const auto& v : next) rows.push_back(z.phi_mid(v));
    c.V = L.rref(rows);
  }
  for (const auto& u : c.U)
    for (const auto& a : u)
      for (const auto& b : u)
        if (L.pair(a, b)) throw std::logic_error("canonical filtration member is not isotropic");
  return c;
}

// all nonzero F_p-vectors of length w up to scalars (first nonzero entry 1)
std::vector<std::vector<int>> projective_points(int w, int p) {
  std::vector<std::vector<int>> out;
  long total = 1;
  for (int i = 0; i < w; ++i) total *= p;
  for (long code = 1; code < total; ++code) {
    std::vector<int> v(w);
    long c = code;
    for (int i = 0; i < w; ++i) {
      v[i] = static_cast<int>(c % p);
      c /= p;
    }
    int lead = 0;
    while (!v[lead]) ++lead;
    if (v[lead] == 1) out.push_back(v);
  }
  return out;
}

long mod(long a, long p) { return ((a % p) + p) % p; }

}  // namespace

PartialFlag canonical_filtration(const FlaggedFZip& z) {
  Lin L{*z.field};
  Chain c = canonical_chain(z);
  PartialFlag out = c.U;
  const int k = static_cast<int>(c.U.size());
  for (int j = k - 1; j >= 0; --j) {
    Mat pj = L.perp(c.U[j], z.n);
    if (static_cast<int>(pj.size()) == L.rank(out.back())) continue;
    out.push_back(pj);
  }
  return out;
}

WeylElement final_type(const FlaggedFZip& z, std::uint64_t seed) {
  const FqField& F = *z.field;
  Lin L{F};
  const int n = z.n, m = z.m(), p = F.p(), r = F.r();
  Chain ch = canonical_chain(z);
  const int k = static_cast<int>(ch.U.size());
  const Mat& Uk = ch.U.back();
  Mat Up = L.perp(Uk, n);
  // complement of U_k inside U_k^⊥
  Mat basis = Uk, comp;
  for (const auto& v : Up)
    if (!L.contains(basis, v)) {
      basis = L.join(basis, {v});
      comp.push_back(v);
    }
  const int d = static_cast<int>(comp.size());
  if (d != n - 2 * k) throw std::logic_error("middle part has unexpected dimension");

  // ψ on the middle part, as a matrix C with ψ(comp_i) = Σ_j C[j][i] comp_j
  const Mat& Vk = ch.V;
  Mat A(Uk.size(), Vec(Vk.size(), 0));
  for (size_t a = 0; a < Uk.size(); ++a)
    for (size_t l = 0; l < Vk.size(); ++l) A[a][l] = L.pair(Vk[l], Uk[a]);
  for (const auto& t0 : L.kernel(A, static_cast<int>(Vk.size()))) {
    Vec s(n, 0);
    for (size_t l = 0; l < Vk.size(); ++l) s = L.axpy(t0[l], Vk[l], s);
    if (!L.contains(Uk, s)) throw std::runtime_error("middle Frobenius is not well defined");
  }
  Mat full = Uk;
  full.insert(full.end(), comp.begin(), comp.end());
  Mat C(d, Vec(d, 0));
  for (int i = 0; i < d; ++i) {
    Vec y = z.phi_mid(comp[i]);
    // A t = −⟨y, U_k⟩ as columns over Vk: rows of the transposed system are Vk
    Vec rhs(Uk.size());
    for (size_t a = 0; a < Uk.size(); ++a) rhs[a] = F.neg(L.pair(y, Uk[a]));
    Mat At(Vk.size(), Vec(Uk.size(), 0));
    for (size_t a = 0; a < Uk.size(); ++a)
      for (size_t l = 0; l < Vk.size(); ++l) At[l][a] = A[a][l];
    Vec t;
    if (!L.solve(At, rhs, t)) throw std::runtime_error("cannot move Frobenius image into the middle part");
    Vec zz = y;
    for (size_t l = 0; l < Vk.size(); ++l) zz = L.axpy(t[l], Vk[l], zz);
    Vec coords;
    if (!L.solve(full, zz, coords)) throw std::logic_error("Frobenius image left U_k^perp");
    for (int j = 0; j < d; ++j) C[j][i] = coords[Uk.size() + j];
  }

  // fixed points of a ↦ C a^(p), as an F_p-linear kernel on F_p^{rd}
  FqField Fp(p, 1);
  Lin Lp{Fp};
  std::vector<Elem> digit_unit(r);
  for (int s = 0, pw = 1; s < r; ++s, pw *= p) digit_unit[s] = static_cast<Elem>(pw);
  auto digit = [&](Elem a, int s) {
    for (int t = 0; t < s; ++t) a /= p;
    return static_cast<Elem>(a % p);
  };
  Mat cols;
  for (int j = 0; j < d; ++j)
    for (int s = 0; s < r; ++s) {
      Vec a(d, 0);
      a[j] = digit_unit[s];
      Vec fa = L.frob(a), img(d, 0);
      for (int i = 0; i < d; ++i)
        for (int l = 0; l < d; ++l) img[i] = F.add(img[i], F.mul(C[i][l], fa[l]));
      for (int i = 0; i < d; ++i) img[i] = F.sub(img[i], a[i]);
      Vec col;
      for (int i = 0; i < d; ++i)
        for (int t = 0; t < r; ++t) col.push_back(digit(img[i], t));
      cols.push_back(col);
    }
  Mat eqs(r * d, Vec(r * d, 0));
  for (int a = 0; a < r * d; ++a)
    for (int b = 0; b < r * d; ++b) eqs[a][b] = cols[b][a];
  Mat ker = Lp.kernel(eqs, r * d);
  if (static_cast<int>(ker.size()) < d)
    throw std::runtime_error("no Frobenius-stable structure on the middle part over this field");
  std::vector<Vec> fixed;  // lifted into the ambient space
  for (const auto& kv : ker) {
    Vec lift(n, 0);
    for (int j = 0; j < d; ++j) {
      Elem a = 0;
      for (int s = 0; s < r; ++s) a += kv[j * r + s] * digit_unit[s];
      lift = L.axpy(a, comp[j], lift);
    }
    fixed.push_back(lift);
  }
  fixed = L.rref(fixed);
  if (static_cast<int>(fixed.size()) != d) {
    // the F_p-span may be larger than d only if ψ is not bijective
    throw std::runtime_error("middle Frobenius is degenerate");
  }
  // Gram matrix on the F_p-structure; re-express over F_p
  std::vector<Vec> fpb;
  {
    // choose F_p-basis of fixed points among the kernel lifts
    Mat acc;
    for (const auto& kv : ker) {
      Vec lift(n, 0);
      for (int j = 0; j < d; ++j) {
        Elem a = 0;
        for (int s = 0; s < r; ++s) a += kv[j * r + s] * digit_unit[s];
        lift = L.axpy(a, comp[j], lift);
      }
      if (!L.contains(acc, lift)) {
        acc = L.join(acc, {lift});
        fpb.push_back(lift);
      }
      if (static_cast<int>(fpb.size()) == d) break;
    }
  }
  auto gram = [&](const Vec& a, const Vec& b) {
    Elem g = L.pair(a, b);
    if (!F.in_prime_field(g)) throw std::logic_error("pairing of stable vectors is not in F_p");
    return static_cast<long>(F.to_int(g));
  };
  std::vector<std::vector<long>> S(d, std::vector<long>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) S[i][j] = gram(fpb[i], fpb[j]);
  auto B = [&](const std::vector<long>& a, const std::vector<long>& b) {
    long s = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) s += a[i] * S[i][j] % p * b[j];
    return mod(s, p);
  };
  auto to_ambient = [&](const std::vector<long>& a) {
    Vec v(n, 0);
    for (int i = 0; i < d; ++i) v = L.axpy(F.from_int(a[i]), fpb[i], v);
    return v;
  };

  // isotropic flag over F_p by repeatedly splitting off hyperbolic planes
  std::mt19937_64 rng(seed);
  std::vector<std::vector<long>> W;
  for (int i = 0; i < d; ++i) {
    std::vector<long> e(d, 0);
    e[i] = 1;
    W.push_back(e);
  }
  std::vector<Vec> isotropic;
  while (W.size() >= 2) {
    const int w = static_cast<int>(W.size());
    std::vector<std::vector<long>> cands;
    for (const auto& c : projective_points(w, p)) {
      std::vector<long> v(d, 0);
      for (int i = 0; i < w; ++i)
        for (int t = 0; t < d; ++t) v[t] = mod(v[t] + c[i] * W[i][t], p);
      if (B(v, v) == 0) cands.push_back(v);
    }
    if (cands.empty()) break;
    const auto v = seed == 0 ? cands.front() : cands[rng() % cands.size()];
    std::vector<long> h;
    for (const auto& x : W)
      if (B(v, x)) {
        h = x;
        break;
      }
    if (h.empty()) throw std::logic_error("form is degenerate on the middle part");
    // make h isotropic with B(v,h) = 1
    long bvh = B(v, h), inv = 1;
    while (bvh * inv % p != 1) ++inv;
    for (auto& t : h) t = t * inv % p;
    long hh = B(h, h), half = (p + 1) / 2;
    for (int t = 0; t < d; ++t) h[t] = mod(h[t] - hh * half % p * v[t], p);
    // W ← W ∩ ⟨v,h⟩^⊥
    std::vector<std::vector<long>> nextW;
    for (const auto& x : W) {
      std::vector<long> y = x;
      long a = B(x, h), b = B(x, v);
      for (int t = 0; t < d; ++t) y[t] = mod(y[t] - a * v[t] - b * h[t], p);
      nextW.push_back(y);
    }
    // drop dependent vectors
    Mat rows;
    for (const auto& y : nextW) {
      Vec e(d);
      for (int t = 0; t < d; ++t) e[t] = static_cast<Elem>(y[t]);
      rows.push_back(e);
    }
    rows = Lp.rref(rows);
    W.clear();
    for (const auto& e : rows) W.emplace_back(e.begin(), e.end());
    isotropic.push_back(to_ambient(v));
  }
  if (W.size() == 2) {
    // non-split plane: an isotropic line exists over F_{p²} ⊂ F_q
    Vec a = to_ambient(W[0]), b = to_ambient(W[1]);
    std::vector<Elem> roots;
    for (Elem t = 0; t < static_cast<Elem>(F.q()); ++t) {
      Vec v = L.axpy(t, a, b);
      if (!L.pair(v, v)) roots.push_back(t);
    }
    if (roots.empty()) throw std::runtime_error("non-split middle needs F_{p^2}; use an even extension degree");
    Elem t = seed == 0 ? roots.front() : roots[rng() % roots.size()];
    isotropic.push_back(L.axpy(t, a, b));
  }
  if (k + static_cast<int>(isotropic.size()) != m) throw std::logic_error("stable completion has the wrong length");

  PartialFlag e = ch.U;
  for (const auto& v : isotropic) e.push_back(L.join(e.back(), {v}));
  if (n % 2 == 0) {
    Mat own = first_rows(z.E, m);
    if ((L.meet_dim(e[m - 1], own) - m) % 2 != 0) {
      const Mat& below = m >= 2 ? e[m - 2] : Mat{};
      Vec a, bb;
      for (const auto& v : e[m - 1])
        if (below.empty() || !L.contains(below, v)) {
          a = v;
          break;
        }
      for (const auto& v : L.perp(below, n))
        if (!L.contains(e[m - 1], v)) {
          bb = v;
          break;
        }
      Elem t = F.neg(F.div(L.pair(bb, bb), F.mul(F.from_int(2), L.pair(a, bb))));
      e[m - 1] = L.join(below, {L.axpy(t, a, bb)});
    }
  }
  for (int j = m + 1; j <= n - 1; ++j) e.push_back(L.perp(e[n - j - 1], n));
  if (n % 2 && static_cast<int>(e.size()) != n - 1) throw std::logic_error("flag length");
  PartialFlag g = z.conjugate_flag(e);
  return relative_position(e, g, F);
}

// ---- discriminants

int legendre(long a, long p) {
  a = mod(a, p);
  if (a == 0) throw std::invalid_argument("legendre symbol of a multiple of p");
  long r = 1, b = a, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

namespace {

// c with c^{p−1} = mu^{-1}; returns legendre of c²·g
int fixed_point_class(const FqField& F, Elem mu, Elem g) {
  Elem target = F.inv(mu);
  for (Elem c = 1; c < static_cast<Elem>(F.q()); ++c)
    if (F.pow(c, F.p() - 1) == target) {
      Elem dd = F.mul(F.mul(c, c), g);
      if (!F.in_prime_field(dd)) throw std::logic_error("fixed-point discriminant not in F_p");
      return legendre(F.to_int(dd), F.p());
    }
  throw std::runtime_error("determinant line has no Frobenius fixed point over this field");
}

}  // namespace

int middle_discriminant(const FlaggedFZip& z) {
  if (z.n % 2 == 0) throw std::invalid_argument("middle discriminant needs odd dimension");
  const FqField& F = *z.field;
  Lin L{F};
  const int n = z.n, m = z.m();
  Vec x = z.E[m];
  Vec y = z.phi_mid(x);
  PartialFlag G = z.conjugate_flag(z.hodge_flag());
  // z = y + g with g ∈ G_m and z ∈ E_{m+1}: coordinates past m+1 vanish
  const Mat& Gm = G[m - 1];
  Mat rows;
  Vec rhs;
  for (const auto& gv : Gm) rows.push_back(Vec(gv.begin() + m + 1, gv.end()));
  for (int a = m + 1; a < n; ++a) rhs.push_back(F.neg(y[a]));
  Vec c;
  if (!L.solve(rows, rhs, c)) throw std::runtime_error("middle graded pieces are not identified");
  Vec zz = y;
  for (size_t l = 0; l < Gm.size(); ++l) zz = L.axpy(c[l], Gm[l], zz);
  Elem mu = zz[m];
  if (!mu) throw std::runtime_error("degenerate middle map");
  return fixed_point_class(F, mu, L.pair(x, x));
}

int hodge_discriminant(const FlaggedFZip& z) {
  const FqField& F = *z.field;
  Lin L{F};
  // columns φ(e_i); the determinant is unchanged by transposition
  Elem mu = L.det(z.phi);
  const long nn = z.n;
  Elem g = (nn * (nn - 1) / 2) % 2 ? F.neg(1) : 1;
  return fixed_point_class(F, mu, g);
}

int hodge_discriminant_formula(const FlaggedFZip& z) {
  const FqField& F = *z.field;
  PartialFlag e = z.hodge_flag(), g = z.conjugate_flag(e);
  WeylElement w = relative_position(e, g, F);
  const int m = z.m(), p = F.p();
  int sign_m = legendre(-1, p);
  int lm = m % 2 ? sign_m : 1;
  if (z.n % 2) return -disc(w) * lm * middle_discriminant(z);
  return -lm * disc(w);
}

// ---- counting

QuadVariant parse_variant(const std::string& s) {
  if (s == "odd") return QuadVariant::Odd;
  if (s == "split") return QuadVariant::SplitEven;
  if (s == "nonsplit") return QuadVariant::NonsplitEven;
  throw std::invalid_argument("unknown variant '" + s + "' (odd|split|nonsplit)");
}

std::string variant_name(QuadVariant v) {
  switch (v) {
    case QuadVariant::Odd: return "odd";
    case QuadVariant::SplitEven: return "split";
    default: return "nonsplit";
  }
}

namespace {

void check_variant_dim(QuadVariant v, int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  if ((v == QuadVariant::Odd) != (dim % 2 == 1))
    throw std::invalid_argument("dimension parity does not match the variant");
}

}  // namespace

long count_isotropic_lines(QuadVariant v, int dim, int p) {
  check_variant_dim(v, dim);
  if (dim > 8) throw std::invalid_argument("dimension too large for enumeration");
  if (p < 3 || legendre(1, p) != 1) throw std::invalid_argument("p must be an odd prime");
  // Gram: antidiagonal, except that the non-split form ends in diag(1, −a)
  std::vector<std::vector<long>> S(dim, std::vector<long>(dim, 0));
  if (v == QuadVariant::NonsplitEven) {
    long nonres = 2;
    while (legendre(nonres, p) == 1) ++nonres;
    const int h = dim - 2;
    for (int i = 0; i < h; ++i) S[i][h - 1 - i] = 1;
    S[h][h] = 1;
    S[h + 1][h + 1] = mod(-nonres, p);
  } else {
    for (int i = 0; i < dim; ++i) S[i][dim - 1 - i] = 1;
  }
  long count = 0;
  for (const auto& x : projective_points(dim, p)) {
    long s = 0;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (S[i][j]) s += x[i] * S[i][j] * x[j];
    if (mod(s, p) == 0) ++count;
  }
  return count;
}

PolyP isotropic_lines_closed(QuadVariant v, int dim) {
  check_variant_dim(v, dim);
  if (v == QuadVariant::Odd) {
    int k = (dim - 1) / 2;
    return k == 0 ? PolyP() : PolyP::geometric(2 * k - 1);
  }
  int r = dim / 2;
  PolyP mono = PolyP::monomial(mpq_class(1), r - 1);
  PolyP geo = PolyP::geometric(2 * r - 2);
  return v == QuadVariant::SplitEven ? mono + geo : geo - mono;
}

long count_projective_points(int dim, int p) {
  long total = 1;
  for (int i = 0; i < dim; ++i) total *= p;
  return (total - 1) / (p - 1);
}

StratumRef stratum_for_invariants(int n, Invariant inv, bool middle_split) {
  const int m = n / 2;
  if (n < 3) throw std::invalid_argument("dimension too small");
  if (inv.value < 1 || inv.value > m) throw std::invalid_argument("invariant out of range 1.." + std::to_string(m));
  if (n % 2) {
    if (inv.kind == Invariant::Height) return {inv.value, false};
    return {2 * m + 1 - inv.value, false};
  }
  if (inv.kind == Invariant::Height) {
    if (inv.value < m) return {inv.value, middle_split};
    return {m, true};
  }
  if (inv.value < m) return {2 * m + 1 - inv.value, !middle_split};
  return {m + 1, false};
}

}  // namespace strata
