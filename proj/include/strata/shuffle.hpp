#pragma once

#include <utility>
#include <vector>

#include "strata/final.hpp"
#include "strata/weyl.hpp"

namespace strata {

enum class MoveKind { Unambiguous, Ambiguous };

struct ShuffleMove {
  int i;
  MoveKind kind;
};

struct ShuffleVerdict {
  enum Outcome { Final, Degenerate } outcome = Degenerate;
  enum Reason { None, Ambiguous, Cyclic, Stuck } reason = None;
  int target_index = 0;  // index of the final element reached
  bool target_twisted = false;
  int steps = 0;
  std::vector<std::pair<int, WeylElement>> path;  // (i, element after the move)
};

// Right descent at i by the window conditions.
bool right_descent(const WeylElement& w, int i);

std::vector<ShuffleMove> shuffle_moves(const WeylElement& w);
WeylElement elementary_shuffle(const WeylElement& w, int i);

// Index and twist of w when w is a (twisted) final element, else 0.
std::pair<int, bool> final_index_of(const WeylElement& w);

ShuffleVerdict classify(const WeylElement& w);

// Explores every maximal shuffle sequence.
bool dichotomy_check(const WeylElement& w);

}  // namespace strata
