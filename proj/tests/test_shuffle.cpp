#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "strata/final.hpp"
#include "strata/shuffle.hpp"

using namespace strata;

namespace {

struct Setting {
  Family f;
  bool twisted;
};

std::vector<Setting> settings(int m) {
  std::vector<Setting> s{{family_B(m), false}};
  if (m >= 2) {
    s.push_back({family_D(m), false});
    s.push_back({family_D(m), true});
  }
  return s;
}

}  // namespace

TEST_CASE("no moves from the identity") {
  for (int m = 1; m <= 4; ++m) CHECK(shuffle_moves(WeylElement::identity(family_B(m))).empty());
}

TEST_CASE("descents by window conditions agree with lengths") {
  for (int m = 2; m <= 3; ++m)
    for (auto f : {family_B(m), family_D(m), family_Dprime(m)})
      for (const auto& w : all_elements(f))
        for (int i = 1; i <= m; ++i) {
          if (f.kind == Kind::Dprime && i == m) continue;
          auto s = WeylElement::simple(f, i);
          CHECK(right_descent(w, i) == (length(compose(w, s)) < length(w)));
        }
}

TEST_CASE("conjugating by a descent keeps the length or drops it by two") {
  for (int m = 2; m <= 3; ++m)
    for (auto f : {family_B(m), family_D(m), family_Dprime(m)})
      for (const auto& w : all_elements(f)) {
        auto moves = shuffle_moves(w);
        for (const auto& mv : moves) {
          CHECK(mv.i > 1);
          auto s = WeylElement::simple(f, mv.i);
          int l = length(compose(compose(s, w), s));
          CHECK((l == length(w) || l == length(w) - 2));
          CHECK((mv.kind == MoveKind::Unambiguous) == (l == length(w)));
        }
      }
}

TEST_CASE("elementary shuffle") {
  auto f = family_B(3);
  for (const auto& w : all_elements(f))
    for (const auto& mv : shuffle_moves(w)) {
      if (mv.kind == MoveKind::Ambiguous) {
        CHECK_THROWS(elementary_shuffle(w, mv.i));
        continue;
      }
      auto u = elementary_shuffle(w, mv.i);
      CHECK(length(u) == length(w));
      auto s = WeylElement::simple(f, mv.i);
      CHECK(compose(compose(s, u), s) == w);
    }
  auto w1 = final_elements(f)[0].element;
  CHECK_THROWS(elementary_shuffle(w1, 1));
}

TEST_CASE("finals classify as themselves") {
  for (int m = 1; m <= 6; ++m)
    for (const auto& st : settings(m))
      for (const auto& fe : final_elements(st.f, st.twisted)) {
        auto v = classify(fe.element);
        CHECK(v.outcome == ShuffleVerdict::Final);
        CHECK(v.steps == 0);
        CHECK(v.target_index == fe.index);
        CHECK(v.target_twisted == fe.twisted);
        // rank 2 is degenerate: the twisted w_1 = [4,2] has an ambiguous move at 2
        if (m >= 3)
          for (const auto& mv : shuffle_moves(fe.element)) CHECK(mv.kind == MoveKind::Unambiguous);
        CHECK(dichotomy_check(fe.element));
      }
}

TEST_CASE("s_2 below w_2 in B_2 shuffles to itself") {
  auto f = family_B(2);
  auto w2 = final_elements(f)[1].element;
  bool found = false;
  for (const auto& e : colength_one_below(w2))
    if (e.root == Root::minus(1, 2)) {
      found = true;
      CHECK(e.element == WeylElement::simple(f, 2));
      auto moves = shuffle_moves(e.element);
      REQUIRE(moves.size() == 1);
      CHECK(moves[0].kind == MoveKind::Unambiguous);
      CHECK(elementary_shuffle(e.element, 2) == e.element);
      auto v = classify(e.element);
      CHECK(v.outcome == ShuffleVerdict::Degenerate);
      CHECK(v.reason == ShuffleVerdict::Cyclic);
    }
  CHECK(found);
}

TEST_CASE("ambiguous moves occur below finals") {
  int ambiguous = 0;
  for (int m = 3; m <= 4; ++m)
    for (const auto& fe : final_elements(family_B(m)))
      for (const auto& e : colength_one_below(fe.element)) {
        auto v = classify(e.element);
        if (v.reason == ShuffleVerdict::Ambiguous) {
          ++ambiguous;
          // the ambiguity shows up at the last element reached
          auto last = v.path.empty() ? e.element : v.path.back().second;
          auto moves = shuffle_moves(last);
          CHECK(std::any_of(moves.begin(), moves.end(),
                            [](const ShuffleMove& mv) { return mv.kind == MoveKind::Ambiguous; }));
        }
      }
  CHECK(ambiguous > 0);
}

TEST_CASE("Final-classified roots equal the tables") {
  for (int m = 2; m <= 6; ++m)
    for (const auto& st : settings(m))
      for (const auto& fe : final_elements(st.f, st.twisted)) {
        std::vector<Root> got;
        for (const auto& e : colength_one_below(fe.element))
          if (classify(e.element).outcome == ShuffleVerdict::Final) got.push_back(e.root);
        normalize_roots(got);
        CAPTURE(fe.element.str());
        CHECK(got == tabulated_colength_roots(st.f, fe.index, st.twisted));
      }
}

TEST_CASE("step counts below B finals run 0 to 2m-2k-1") {
  for (int m = 2; m <= 6; ++m) {
    auto f = family_B(m);
    for (const auto& fe : final_elements(f)) {
      if (fe.index >= m) continue;
      auto table = tabulated_colength_roots(f, fe.index);
      CHECK(table.size() == static_cast<size_t>(2 * m - 2 * fe.index));
      for (size_t j = 0; j < table.size(); ++j) {
        auto s = compose(fe.element, reflection_in_root(f, table[j]));
        auto v = classify(s);
        CHECK(v.outcome == ShuffleVerdict::Final);
        CHECK(v.steps == static_cast<int>(j));
        CHECK(v.target_index == fe.index + 1);
      }
    }
  }
}

TEST_CASE("below s_k...s_1 only e1-e(k+1) is non-degenerate") {
  for (int m = 2; m <= 5; ++m) {
    auto f = family_B(m);
    auto fes = final_elements(f);
    for (int k = 1; k <= m; ++k) {
      const auto& w = fes[2 * m - k - 1].element;  // s_k...s_1
      CHECK(w == word_element(f, [&] {
              std::vector<int> word;
              for (int i = k; i >= 1; --i) word.push_back(i);
              return word;
            }()));
      for (int j = 2; j <= k; ++j) {
        auto s = compose(w, reflection_in_root(f, Root::minus(1, j)));
        CHECK(length(s) == length(w) - 1);
        CHECK(classify(s).outcome == ShuffleVerdict::Degenerate);
      }
      if (k < m) {
        auto s = compose(w, reflection_in_root(f, Root::minus(1, k + 1)));
        auto v = classify(s);
        CHECK(v.outcome == ShuffleVerdict::Final);
        CHECK(v.target_index == 2 * m - k + 1);
      }
    }
  }
}

TEST_CASE("dichotomy below every final element") {
  for (int m = 2; m <= 5; ++m)
    for (const auto& st : settings(m))
      for (const auto& fe : final_elements(st.f, st.twisted))
        for (const auto& e : colength_one_below(fe.element)) {
          CAPTURE(e.element.str());
          CHECK(dichotomy_check(e.element));
        }
}

TEST_CASE("dichotomy on random elements of B3 and D4") {
  std::mt19937 rng(3);
  for (auto f : {family_B(3), family_Dprime(4)}) {
    auto all = all_elements(f);
    for (int t = 0; t < 200; ++t) CHECK(dichotomy_check(all[rng() % all.size()]));
  }
}

TEST_CASE("classification path replays") {
  auto f = family_B(4);
  for (const auto& fe : final_elements(f))
    for (const auto& e : colength_one_below(fe.element)) {
      auto v = classify(e.element);
      if (v.outcome != ShuffleVerdict::Final) continue;
      CHECK(static_cast<int>(v.path.size()) == v.steps);
      WeylElement cur = e.element;
      for (const auto& [i, next] : v.path) {
        cur = elementary_shuffle(cur, i);
        CHECK(cur == next);
      }
      CHECK(final_index_of(cur).first == v.target_index);
    }
}
