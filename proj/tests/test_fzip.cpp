#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <random>

#include "strata/final.hpp"
#include "strata/fq.hpp"
#include "strata/fzip.hpp"
#include "strata/shuffle.hpp"

using namespace strata;

namespace {

std::shared_ptr<const FqField> field(int p, int r = 2) { return std::make_shared<FqField>(p, r); }

// every final and twisted final for n = 2m+1 or 2m
std::vector<WeylElement> finals_for(int n) {
  std::vector<WeylElement> out;
  const int m = n / 2;
  if (n % 2) {
    for (const auto& fe : final_elements(family_B(m))) out.push_back(fe.element);
  } else {
    for (bool t : {false, true})
      for (const auto& fe : final_elements(family_D(m), t)) out.push_back(fe.element);
  }
  return out;
}

Vec random_vec(const FqField& F, int n, std::mt19937& rng) {
  Vec v(n);
  for (auto& a : v) a = rng() % F.q();
  return v;
}

bool same_space(const Lin& L, const Mat& a, const Mat& b) { return L.rref(a) == L.rref(b); }

bool self_dual(const Lin& L, const PartialFlag& f, int n) {
  for (const auto& a : f) {
    if (L.rank(a) == n) continue;
    bool found = false;
    auto pa = L.perp(a, n);
    for (const auto& b : f) found = found || same_space(L, pa, b);
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("field axioms and Frobenius") {
  for (auto [p, r] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 2}}) {
    FqField F(p, r);
    CHECK(F.q() == static_cast<int>(std::pow(p, r)));
    std::mt19937 rng(p * 10 + r);
    for (int t = 0; t < 200; ++t) {
      Elem a = rng() % F.q(), b = rng() % F.q(), c = rng() % F.q();
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a) CHECK(F.mul(a, F.inv(a)) == F.from_int(1));
      CHECK(F.frob(F.mul(a, b)) == F.mul(F.frob(a), F.frob(b)));
      CHECK(F.frob(F.add(a, b)) == F.add(F.frob(a), F.frob(b)));
    }
    int fixed = 0;
    for (int a = 0; a < F.q(); ++a) {
      CHECK(F.frob(a) == F.pow(a, p));
      if (F.frob(a) == static_cast<Elem>(a)) {
        ++fixed;
        CHECK(F.in_prime_field(a));
      }
    }
    CHECK(fixed == p);
    CHECK(F.pow(F.generator(), F.q() - 1) == F.from_int(1));
  }
  CHECK(smallest_irreducible(3, 2) == std::vector<int>{1, 0});
}

TEST_CASE("phi is Frobenius linear") {
  auto F = field(3);
  Lin L{*F};
  std::mt19937 rng(4);
  for (int n : {5, 6, 7}) {
    std::mt19937_64 r64(n);
    for (const auto& w : finals_for(n)) {
      auto x = random_admissible_params(n, *F, r64);
      auto z = yw_point(w, F, &x);
      for (int t = 0; t < 10; ++t) {
        auto v = random_vec(*F, n, rng), u = random_vec(*F, n, rng);
        Elem a = rng() % F->q();
        CHECK(z.phi_mid(L.axpy(a, v, u)) == L.axpy(F->frob(a), z.phi_mid(v), z.phi_mid(u)));
      }
    }
  }
}

TEST_CASE("zips at x = 0 are in position w") {
  auto F = field(3);
  Lin L{*F};
  for (int n = 4; n <= 8; ++n)
    for (const auto& w : finals_for(n)) {
      auto z = yw_point(w, F);
      auto e = z.hodge_flag();
      auto g = z.conjugate_flag(e);
      CAPTURE(w.str());
      CHECK(self_dual(L, e, n));
      CHECK(self_dual(L, g, n));
      CHECK(relative_position(e, g, *F) == w);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) CHECK(L.meet_dim(e[i - 1], g[j - 1]) == r_function(w, i, j));
    }
}

TEST_CASE("identity zip has equal flags") {
  auto F = field(5);
  Lin L{*F};
  for (int n : {5, 6}) {
    auto z = yw_point(WeylElement::identity(n % 2 ? family_B(n / 2) : family_D(n / 2)), F);
    auto e = z.hodge_flag();
    auto g = z.conjugate_flag(e);
    for (int j = 0; j < n; ++j) CHECK(same_space(L, e[j], g[j]));
    CHECK(final_type(z) == z.w);
  }
}

TEST_CASE("flipping one flag twists the position") {
  auto F = field(3);
  for (int m = 2; m <= 4; ++m) {
    auto f = family_Dprime(m);
    auto s = WeylElement::flip(f);
    auto z = yw_point(WeylElement::identity(family_D(m)), F);
    auto e = z.hodge_flag();
    auto zs = yw_point(s, F);
    CHECK(relative_position(e, zs.conjugate_flag(e), *F) == s);
  }
}

TEST_CASE("random admissible parameters keep the type") {
  std::mt19937_64 rng(99);
  for (int p : {3, 5}) {
    auto F = field(p);
    for (int n = 5; n <= 8; ++n)
      for (const auto& w : finals_for(n)) {
        auto x = random_admissible_params(n, *F, rng);
        auto z = yw_point(w, F, &x);
        auto e = z.hodge_flag();
        CHECK(relative_position(e, z.conjugate_flag(e), *F) == w);
      }
  }
  auto F = field(3);
  Mat bad(5, Vec(5, 0));
  bad[0][1] = 1;
  CHECK_THROWS(yw_point(final_elements(family_B(2))[0].element, F, &bad));
  CHECK_THROWS(yw_point(final_elements(family_B(2))[0].element, F, nullptr, 2));
}

TEST_CASE("canonical filtration of the most generic zip is the Hodge filtration") {
  auto F = field(3);
  Lin L{*F};
  for (int n = 5; n <= 8; ++n) {
    auto w1 = finals_for(n)[0];
    auto z = yw_point(w1, F);
    auto cf = canonical_filtration(z);
    auto e = z.hodge_flag();
    REQUIRE(!cf.empty());
    CHECK(same_space(L, cf[0], e[0]));
    for (const auto& u : cf) CHECK(same_space(L, u, e[L.rank(u) - 1]));
  }
}

TEST_CASE("canonical filtrations are self dual with middle part n - 2k") {
  auto F = field(3);
  Lin L{*F};
  for (int n = 5; n <= 8; ++n) {
    const int m = n / 2;
    for (const auto& w : finals_for(n)) {
      auto cf = canonical_filtration(yw_point(w, F));
      CAPTURE(w.str());
      CHECK(self_dual(L, cf, n));
      int k = 0;
      for (const auto& u : cf) {
        if (2 * L.rank(u) > n) break;
        ++k;
        CHECK(L.meet_dim(u, L.perp(u, n)) == L.rank(u));  // isotropic
      }
      auto idx = final_index_of(w).first;
      // heads have a k-step chain, the supersingular tail stops at the Lagrangian
      if (idx <= m) CHECK(k == idx);
    }
  }
}

TEST_CASE("final type round trip") {
  for (int p : {3, 5}) {
    auto F = field(p);
    for (int n = 5; n <= 8; ++n)
      for (const auto& w : finals_for(n))
        for (std::uint64_t seed : {0, 1, 2, 7}) {
          CAPTURE(w.str());
          CAPTURE(seed);
          CHECK(final_type(yw_point(w, F), seed) == w);
        }
  }
}

TEST_CASE("final type of perturbed zips does not depend on the completion") {
  // the middle Frobenius of a perturbed zip need not have a fixed structure
  // over the zip's own field; those are reported, not guessed
  std::mt19937_64 rng(5);
  auto F = field(3);
  int solved = 0, unsolved = 0;
  for (int n = 5; n <= 8; ++n)
    for (const auto& w : finals_for(n))
      for (int t = 0; t < 4; ++t) {
        auto x = random_admissible_params(n, *F, rng);
        auto z = yw_point(w, F, &x);
        WeylElement t0 = w;
        try {
          t0 = final_type(z, 0);
        } catch (const std::runtime_error&) {
          ++unsolved;
          continue;
        }
        ++solved;
        CAPTURE(w.str());
        CHECK(t0 == w);
        for (std::uint64_t seed = 1; seed <= 3; ++seed) CHECK(final_type(z, seed) == t0);
      }
  MESSAGE("perturbed zips solved over F_9: " << solved << ", without a rational middle: " << unsolved);
  CHECK(solved > unsolved);
}

TEST_CASE("Legendre symbols") {
  CHECK(legendre(1, 3) == 1);
  CHECK(legendre(2, 3) == -1);
  CHECK(legendre(-1, 5) == 1);
  CHECK(legendre(-1, 7) == -1);
  for (int p : {3, 5, 7, 11, 13})
    for (int a = 1; a < p; ++a) {
      bool sq = false;
      for (int b = 1; b < p; ++b) sq = sq || (b * b) % p == a;
      CHECK(legendre(a, p) == (sq ? 1 : -1));
    }
  CHECK_THROWS(legendre(6, 3));
}

TEST_CASE("discriminants by fixed points agree with the formula") {
  int seen_plus = 0, seen_minus = 0;
  for (int p : {3, 5}) {
    auto F = field(p);
    std::mt19937_64 rng(p);
    for (int t = 0; t < 60; ++t) {
      const int n = 5 + static_cast<int>(rng() % 4);
      auto fs = finals_for(n);
      const auto& w = fs[rng() % fs.size()];
      auto x = random_admissible_params(n, *F, rng);
      const int eps = rng() % 2 ? 1 : -1;
      auto z = yw_point(w, F, &x, eps);
      int h = hodge_discriminant(z);
      CHECK(h == hodge_discriminant_formula(z));
      (h == 1 ? seen_plus : seen_minus)++;
    }
  }
  CHECK(seen_plus > 0);
  CHECK(seen_minus > 0);
}

TEST_CASE("middle discriminant follows the middle sign") {
  auto F = field(3);
  auto w = final_elements(family_B(2))[3].element;
  CHECK(middle_discriminant(yw_point(w, F, nullptr, 1)) == 1);
  CHECK(middle_discriminant(yw_point(w, F, nullptr, -1)) == legendre(-1, 3));
  CHECK_THROWS(middle_discriminant(yw_point(WeylElement::identity(family_D(2)), F)));
}

TEST_CASE("isotropic line counts") {
  CHECK(count_isotropic_lines(QuadVariant::Odd, 5, 3) == 40);
  CHECK(count_isotropic_lines(QuadVariant::SplitEven, 4, 3) == 16);
  CHECK(count_isotropic_lines(QuadVariant::NonsplitEven, 4, 3) == 10);
  for (int p : {3, 5})
    for (int dim = 1; dim <= 8; ++dim) {
      CHECK(count_projective_points(dim, p) == PolyP::geometric(dim - 1).eval(p));
      if (p == 5 && dim == 8) continue;  // slow; the p = 3 sweep covers dim 8
      auto v = dim % 2 ? QuadVariant::Odd : QuadVariant::SplitEven;
      CHECK(count_isotropic_lines(v, dim, p) == isotropic_lines_closed(v, dim).eval(p));
      if (dim % 2 == 0)
        CHECK(count_isotropic_lines(QuadVariant::NonsplitEven, dim, p) ==
              isotropic_lines_closed(QuadVariant::NonsplitEven, dim).eval(p));
    }
  CHECK_THROWS(count_isotropic_lines(QuadVariant::Odd, 4, 3));
  CHECK_THROWS(count_isotropic_lines(QuadVariant::SplitEven, 10, 3));
  CHECK(parse_variant(variant_name(QuadVariant::NonsplitEven)) == QuadVariant::NonsplitEven);
  CHECK_THROWS(parse_variant("hyperbolic"));
}

TEST_CASE("strata for invariants") {
  auto h1 = stratum_for_invariants(21, {Invariant::Height, 1}, false);
  CHECK(h1.index == 1);
  CHECK_FALSE(h1.twisted);
  CHECK(stratum_for_invariants(21, {Invariant::Artin, 10}, false).index == 11);
  CHECK(stratum_for_invariants(21, {Invariant::Artin, 1}, false).index == 20);
  auto hm = stratum_for_invariants(20, {Invariant::Height, 10}, false);
  CHECK(hm.index == 10);
  CHECK(hm.twisted);
  CHECK(stratum_for_invariants(20, {Invariant::Height, 3}, true).twisted);
  CHECK_FALSE(stratum_for_invariants(20, {Invariant::Height, 3}, false).twisted);
  CHECK(stratum_for_invariants(20, {Invariant::Artin, 10}, false).index == 11);
  CHECK_THROWS(stratum_for_invariants(21, {Invariant::Height, 11}, false));
  CHECK_THROWS(stratum_for_invariants(21, {Invariant::Artin, 0}, false));
  CHECK_THROWS(stratum_for_invariants(21, {Invariant::Artin, 11}, false));
}
