#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/final.hpp"
#include "strata/poly.hpp"
#include "strata/weyl.hpp"

namespace strata {

enum class Case { Bodd, Duntwisted, Dtwisted };

std::string case_name(Case c);  // "B", "D", "Dtwisted"
Case parse_case(const std::string& s);
Family case_family(Case c, int m);
bool case_twisted(Case c);

using WeightExpr = std::vector<RatP>;

struct ConventionProfile {
  EmptyVariant w0 = EmptyVariant::TypeSwap;
  bool twist_left = true;        // v = w_∅∘x, otherwise x∘w_∅
  mpq_class even_mid_factor{1, 2};
  bool w0_primed = false;        // use w_∅·s′_m in the even cases
  bool mid_from_surviving = true;

  // key=value, keys: w0, twist, mid_factor, w0_primed, mid_from
  void set(const std::string& kv);
  std::string str() const;
};

struct OrbitData {
  int c = 0;
  int s = 1;
};

struct BaseClass {
  int final_index = 0;
  RatP coeff;
  int lambda_power = 0;
};

// Raised when the recursion produces something a correct convention cannot.
struct ConventionError : std::runtime_error {
  int slot;
  ConventionError(int slot, const std::string& what) : std::runtime_error(what), slot(slot) {}
};

WeylElement twist_operator(Case c, const FinalElement& w, const ConventionProfile& prof = {});
OrbitData reduced_orbit(const WeylElement& v);
// λ with (1 − p·v)(λ) = ε_1; the identity is checked before returning.
WeightExpr solve_lambda(const WeylElement& v);
bool lambda_identity_holds(const WeylElement& v, const WeightExpr& lam);

// deg(π_{w_k})
PolyP degree(Case c, int k, int m);

struct PieriStep {
  // Σ −⟨α∨,λ⟩ p^{steps} deg(π_ν)/deg(π_w) per target ν
  std::map<int, RatP> raw;
  // [V_ν] = multiplier · λ_1 · [V_w]
  std::map<int, RatP> multiplier;
};

PieriStep pieri_step(Case c, const FinalElement& w, const ConventionProfile& prof = {});

// Slots 1..2m in order; throws ConventionError on a non-polynomial slot.
std::vector<BaseClass> compute_classes(Case c, int m, const ConventionProfile& prof = {});

BaseClass closed_form(Case c, int m, int j);
// Index of the slot that is identically zero, 0 in family B.
int empty_slot(Case c, int m);

// Gaussian binomial in q = p².
PolyP qbinomial(int n, int k);
// Rewriting of the upper-half classes through q-binomials.
RatP qbinomial_form(Case c, int m, int j);
bool qbinomial_identity_check(Case c, int m);

bool half_integral(const RatP& c);

struct VerifyEntry {
  Case c;
  int m = 0;
  bool classes_match = false;
  bool integral = false;
  bool qbinomial_ok = false;
  int first_bad_slot = 0;  // 0 when all slots agree
  std::string message;
  bool ok() const { return classes_match && integral && qbinomial_ok; }
};

std::vector<VerifyEntry> verify(Case c, int m_lo, int m_hi, const ConventionProfile& prof = {});

}  // namespace strata
