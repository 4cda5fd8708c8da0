#pragma once

#include <vector>

#include "strata/weyl.hpp"

namespace strata {

struct FinalElement {
  Family family;
  int index = 0;  // 1..2m
  WeylElement element;
  std::vector<int> word;  // simple reflection indices, 0 stands for s′_m
  bool twisted = false;
};

// w_1..w_{2m}; twisted only for D (elements w_k·s′_m).
std::vector<FinalElement> final_elements(const Family& f, bool twisted = false);

// r_w(i,j) = #{a ≤ i : w(a) ≤ j}
int r_function(const WeylElement& w, int i, int j);

// Min-formula test on the transposed table r_w(j,i) with a = w(1); in even
// rank the column n/2 is skipped.
bool is_final_by_r(const WeylElement& w);

struct ColengthEntry {
  Root root;
  WeylElement element;  // w·s_α
};

// All positive roots α with ℓ(w s_α) = ℓ(w) − 1, in positive_roots order.
std::vector<ColengthEntry> colength_one_below(const WeylElement& w);

// Non-degenerate roots below the k-th final element as tabulated.  For twisted
// elements the roots are re-expressed for w·s′_m itself (ε_m ↦ −ε_m).
std::vector<Root> tabulated_colength_roots(const Family& f, int k, bool twisted = false);

// e-roots, then ε_1+ε_j by ascending j, then ε_1−ε_j by descending j.
void normalize_roots(std::vector<Root>& roots);

// Subword-property Bruhat test, exponential; for small m only.
bool bruhat_leq(const WeylElement& u, const WeylElement& w);
std::vector<int> reduced_word(const WeylElement& w);

}  // namespace strata
