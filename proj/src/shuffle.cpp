#include "strata/shuffle.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace strata {

bool right_descent(const WeylElement& w, int i) {
  const int m = w.m();
  const auto& a = w.window();
  if (i < m) return a[i - 1] > a[i];
  if (w.family().kind == Kind::B) return a[m - 1] > m + 1;
  // s_m = (m−1,m+1)(m,m+2): compare w(m−1) with w(m+1) = 2m+1−w(m)
  return a[m - 2] + a[m - 1] > 2 * m + 1;
}

std::vector<ShuffleMove> shuffle_moves(const WeylElement& w) {
  std::vector<ShuffleMove> out;
  const Family& f = w.family();
  if (f.kind == Kind::C) throw std::invalid_argument("shuffles are defined for B, D and D'");
  const int l = length(w);
  for (int i = 2; i <= f.m; ++i) {
    if (!right_descent(w, i)) continue;
    WeylElement s = WeylElement::simple(f, i);
    WeylElement y = compose(s, compose(w, s));
    int ly = length(y);
    if (ly == l)
      out.push_back({i, MoveKind::Unambiguous});
    else if (ly == l - 2)
      out.push_back({i, MoveKind::Ambiguous});
    else
      throw std::logic_error("length of s_i w s_i outside {l, l-2} for " + w.str());
  }
  return out;
}

WeylElement elementary_shuffle(const WeylElement& w, int i) {
  if (i <= 1 || i > w.m()) throw std::invalid_argument("shuffle index must satisfy 1 < i <= m");
  for (const auto& mv : shuffle_moves(w)) {
    if (mv.i != i) continue;
    if (mv.kind == MoveKind::Ambiguous) throw std::invalid_argument("move at i=" + std::to_string(i) + " is ambiguous");
    WeylElement s = WeylElement::simple(w.family(), i);
    return compose(s, compose(w, s));
  }
  throw std::invalid_argument("no shuffle move at i=" + std::to_string(i));
}

namespace {

struct FinalTable {
  std::unordered_map<WeylElement, std::pair<int, bool>, WeylHash> idx;
};

const FinalTable& finals_for(const Family& f) {
  static std::mutex mu;
  static std::map<std::pair<bool, int>, FinalTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(f.even(), f.m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FinalTable t;
  if (!f.even()) {
    for (const auto& fe : final_elements(family_B(f.m))) t.idx.emplace(fe.element, std::make_pair(fe.index, false));
  } else if (f.m >= 2) {
    for (bool tw : {false, true})
      for (const auto& fe : final_elements(family_D(f.m), tw)) t.idx.emplace(fe.element, std::make_pair(fe.index, tw));
  }
  return cache.emplace(key, std::move(t)).first->second;
}

}  // namespace

std::pair<int, bool> final_index_of(const WeylElement& w) {
  const auto& t = finals_for(w.family());
  auto it = t.idx.find(w);
  return it == t.idx.end() ? std::make_pair(0, false) : it->second;
}

ShuffleVerdict classify(const WeylElement& w) {
  ShuffleVerdict v;
  std::unordered_set<WeylElement, WeylHash> visited;
  WeylElement x = w;
  for (;;) {
    auto [k, tw] = final_index_of(x);
    if (k) {
      v.outcome = ShuffleVerdict::Final;
      v.target_index = k;
      v.target_twisted = tw;
      return v;
    }
    if (!visited.insert(x).second) {
      v.reason = ShuffleVerdict::Cyclic;
      return v;
    }
    auto mv = shuffle_moves(x);
    if (mv.empty()) {
      v.reason = ShuffleVerdict::Stuck;
      return v;
    }
    for (const auto& mo : mv)
      if (mo.kind == MoveKind::Ambiguous) {
        v.reason = ShuffleVerdict::Ambiguous;
        return v;
      }
    WeylElement s = WeylElement::simple(x.family(), mv.front().i);
    x = compose(s, compose(x, s));
    v.path.emplace_back(mv.front().i, x);
    ++v.steps;
  }
}

namespace {

// outcome: (final index, twisted, steps) or index 0 for degenerate
using Outcome = std::tuple<int, bool, int>;

void explore(const WeylElement& x, int depth, std::unordered_set<WeylElement, WeylHash>& path,
             std::set<Outcome>& out) {
  auto [k, tw] = final_index_of(x);
  if (k) {
    out.insert({k, tw, depth});
    return;
  }
  if (path.count(x)) {
    out.insert({0, false, 0});
    return;
  }
  auto mv = shuffle_moves(x);
  if (mv.empty()) {
    out.insert({0, false, 0});
    return;
  }
  path.insert(x);
  for (const auto& mo : mv) {
    if (mo.kind == MoveKind::Ambiguous) {
      out.insert({0, false, 0});
      continue;
    }
    WeylElement s = WeylElement::simple(x.family(), mo.i);
    explore(compose(s, compose(x, s)), depth + 1, path, out);
    if (out.size() > 1) break;
  }
  path.erase(x);
}

}  // namespace

bool dichotomy_check(const WeylElement& w) {
  std::set<Outcome> out;
  std::unordered_set<WeylElement, WeylHash> path;
  explore(w, 0, path, out);
  return out.size() == 1;
}

}  // namespace strata
