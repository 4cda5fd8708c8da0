#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <deque>
#include <random>
#include <unordered_map>

#include "strata/final.hpp"
#include "strata/weyl.hpp"

using namespace strata;

namespace {

WeylElement win(Family f, std::vector<int> a) { return WeylElement::from_window(f, a); }

std::vector<WeylElement> generators(const Family& f) {
  std::vector<WeylElement> g;
  if (f.kind == Kind::C || f.kind == Kind::Dprime) {
    for (int i = 1; i < f.m; ++i) g.push_back(WeylElement::simple(f, i));
    g.push_back(WeylElement::flip(f));
  } else {
    for (int i = 1; i <= f.m; ++i) g.push_back(WeylElement::simple(f, i));
  }
  return g;
}

// word length by breadth-first search over the Cayley graph
std::unordered_map<WeylElement, int, WeylHash> bfs(const Family& f) {
  std::unordered_map<WeylElement, int, WeylHash> dist;
  std::deque<WeylElement> q;
  auto id = WeylElement::identity(f);
  dist.emplace(id, 0);
  q.push_back(id);
  auto gens = generators(f);
  while (!q.empty()) {
    auto w = q.front();
    q.pop_front();
    for (const auto& s : gens) {
      auto u = compose(w, s);
      if (dist.emplace(u, dist.at(w) + 1).second) q.push_back(u);
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("window validation") {
  CHECK(win(family_B(2), {5, 2}).str() == "B2:[5,2]");
  CHECK_THROWS_AS(win(family_D(3), {6, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(win(family_D(3), {6, 2, 3}), std::invalid_argument);
  CHECK_NOTHROW(win(family_Dprime(3), {6, 2, 3}));
  CHECK_THROWS_AS(win(family_B(2), {3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(win(family_B(2), {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(win(family_B(2), {1}), std::invalid_argument);
}

TEST_CASE("window text round trip") {
  for (auto s : {"B2:[5,2]", "D3:[6,2,4]", "D'3:[6,2,3]", "C2:[4,2]"}) CHECK(parse_element(s).str() == s);
  CHECK_THROWS(parse_element("X2:[1,2]"));
}

TEST_CASE("composition applies the right factor first") {
  auto f = family_B(2);
  auto s1 = WeylElement::simple(f, 1), s2 = WeylElement::simple(f, 2);
  CHECK(compose(s2, s1) == win(f, {4, 1}));
  for (const auto& w : all_elements(f)) {
    CHECK(compose(w, WeylElement::identity(f)) == w);
    CHECK(compose(w, inverse(w)) == WeylElement::identity(f));
  }
}

TEST_CASE("lengths of small elements") {
  CHECK(length(win(family_B(2), {5, 2})) == 3);
  CHECK(length(WeylElement::identity(family_B(4))) == 0);
  CHECK(length(win(family_D(3), {5, 1, 4})) == 3);
}

TEST_CASE("length equals breadth-first word length") {
  for (int m = 1; m <= 3; ++m)
    for (auto f : {family_B(m), Family{Kind::C, m}, family_D(m)}) {
      if (f.kind == Kind::D && m < 2) continue;
      auto dist = bfs(f);
      auto all = all_elements(f);
      CHECK(dist.size() == all.size());
      for (const auto& w : all) CHECK(length(w) == dist.at(w));
    }
}

TEST_CASE("group orders") {
  CHECK(all_elements(family_B(3)).size() == 48);
  CHECK(all_elements(family_D(3)).size() == 24);
  CHECK(all_elements(family_Dprime(3)).size() == 48);
}

TEST_CASE("disc is a homomorphism and the signature of the full permutation") {
  CHECK(disc(WeylElement::identity(family_B(3))) == 1);
  CHECK(disc(win(family_B(2), {5, 2})) == -1);
  CHECK(disc(WeylElement::flip(family_D(3))) == -1);
  std::mt19937 rng(7);
  for (auto f : {family_B(3), family_Dprime(3)}) {
    auto all = all_elements(f);
    for (int t = 0; t < 300; ++t) {
      const auto& u = all[rng() % all.size()];
      const auto& v = all[rng() % all.size()];
      CHECK(disc(compose(u, v)) == disc(u) * disc(v));
    }
  }
}

TEST_CASE("weight action") {
  auto f = family_B(2);
  CHECK(act_on_weight(win(f, {4, 1}), WeightVec{1, 0}) == WeightVec{0, -1});
  CHECK(act_on_weight(win(family_D(3), {5, 1, 4}), WeightVec{0, 1, 0}) == WeightVec{1, 0, 0});
  std::mt19937 rng(11);
  for (auto g : {family_B(3), family_Dprime(3)}) {
    auto all = all_elements(g);
    for (int t = 0; t < 200; ++t) {
      const auto& u = all[rng() % all.size()];
      const auto& v = all[rng() % all.size()];
      WeightVec x{static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3};
      CHECK(act_on_weight(compose(u, v), x) == act_on_weight(u, act_on_weight(v, x)));
    }
  }
}

TEST_CASE("ell_D is invariant under right multiplication by the flip") {
  for (int m = 2; m <= 4; ++m) {
    auto f = family_Dprime(m);
    auto s = WeylElement::flip(f);
    for (const auto& w : all_elements(f)) CHECK(length(compose(w, s)) == length(w));
  }
}

TEST_CASE("reflections are involutions acting by x - <a,x> a") {
  CHECK(reflection_in_root(family_B(2), Root::minus(1, 2)) == win(family_B(2), {2, 1}));
  CHECK_THROWS(reflection_in_root(family_D(3), Root::e(1)));
  for (auto f : {family_B(3), family_D(4)}) {
    for (const auto& a : positive_roots(f)) {
      auto s = reflection_in_root(f, a);
      CHECK(compose(s, s) == WeylElement::identity(f));
      WeightVec x(f.m);
      for (int i = 0; i < f.m; ++i) x[i] = 2 * i - 3 + i * i;
      auto av = a.vec(f.m);
      long pair = coroot_pairing<long>(a, x);
      WeightVec want(f.m);
      for (int i = 0; i < f.m; ++i) want[i] = x[i] - pair * av[i];
      CHECK(act_on_weight(s, x) == want);
    }
  }
}

TEST_CASE("coroot pairing") {
  CHECK(coroot_pairing<long>(Root::e(1), {1, 0}) == 2);
  CHECK(coroot_pairing<long>(Root::minus(1, 2), {0, 1}) == -1);
  CHECK(coroot_pairing<long>(Root::plus(1, 3), {1, 0, 5}) == 6);
}

TEST_CASE("w_empty variants") {
  CHECK(w_empty(family_B(2), EmptyVariant::TypeSwap) == win(family_B(2), {5, 2}));
  CHECK(w_empty(family_B(2), EmptyVariant::Antidiagonal) == win(family_B(2), {5, 4}));
  auto f = family_Dprime(3);
  CHECK(compose(w_empty(f, EmptyVariant::TypeSwap), WeylElement::flip(f)) == win(f, {6, 2, 4}));
}

TEST_CASE("r table determines the element") {
  for (int m = 1; m <= 3; ++m) {
    auto all = all_elements(family_B(m));
    std::unordered_map<std::string, WeylElement> seen;
    const int n = 2 * m + 1;
    for (const auto& w : all) {
      std::string key;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) key += char('0' + r_function(w, i, j));
      auto [it, fresh] = seen.emplace(key, w);
      CHECK((fresh || it->second == w));
    }
    CHECK(seen.size() == all.size());
  }
}

TEST_CASE("B to C correspondence is a length preserving bijection") {
  for (int m = 1; m <= 3; ++m) {
    auto all = all_elements(family_B(m));
    for (const auto& w : all) {
      auto c = b_to_c(w);
      CHECK(c.family().kind == Kind::C);
      CHECK(length(c) == length(w));
      CHECK(c_to_b(c) == w);
    }
  }
}
