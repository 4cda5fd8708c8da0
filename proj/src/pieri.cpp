#include "strata/pieri.hpp"

#include <sstream>

#include "strata/shuffle.hpp"

namespace strata {

std::string case_name(Case c) {
  switch (c) {
    case Case::Bodd: return "B";
    case Case::Duntwisted: return "D";
    default: return "Dtwisted";
  }
}

Case parse_case(const std::string& s) {
  if (s == "B" || s == "Bodd") return Case::Bodd;
  if (s == "D" || s == "Duntwisted") return Case::Duntwisted;
  if (s == "Dtwisted" || s == "D'") return Case::Dtwisted;
  throw std::invalid_argument("unknown case: " + s);
}

Family case_family(Case c, int m) { return c == Case::Bodd ? family_B(m) : family_D(m); }
bool case_twisted(Case c) { return c == Case::Dtwisted; }

void ConventionProfile::set(const std::string& kv) {
  auto eq = kv.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("profile override must be key=value: " + kv);
  std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
  auto boolean = [&](const std::string& s) {
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw std::invalid_argument("bad boolean in profile: " + kv);
  };
  if (k == "w0") {
    if (v == "TypeSwap") w0 = EmptyVariant::TypeSwap;
    else if (v == "Antidiagonal") w0 = EmptyVariant::Antidiagonal;
    else throw std::invalid_argument("w0 must be TypeSwap or Antidiagonal");
  } else if (k == "twist") {
    if (v != "left" && v != "right") throw std::invalid_argument("twist must be left or right");
    twist_left = v == "left";
  } else if (k == "mid_factor") {
    even_mid_factor = mpq_class(v);
    even_mid_factor.canonicalize();
  } else if (k == "w0_primed") {
    w0_primed = boolean(v);
  } else if (k == "mid_from") {
    if (v != "surviving" && v != "emptied") throw std::invalid_argument("mid_from must be surviving or emptied");
    mid_from_surviving = v == "surviving";
  } else {
    throw std::invalid_argument("unknown profile key: " + k);
  }
}

std::string ConventionProfile::str() const {
  std::ostringstream os;
  os << "w0=" << (w0 == EmptyVariant::TypeSwap ? "TypeSwap" : "Antidiagonal")
     << " twist=" << (twist_left ? "left" : "right") << " mid_factor=" << even_mid_factor.get_str()
     << " w0_primed=" << (w0_primed ? "true" : "false")
     << " mid_from=" << (mid_from_surviving ? "surviving" : "emptied");
  return os.str();
}

WeylElement twist_operator(Case c, const FinalElement& w, const ConventionProfile& prof) {
  const bool b = w.family.kind == Kind::B;
  if ((c == Case::Bodd) != b || case_twisted(c) != w.twisted)
    throw std::invalid_argument("case " + case_name(c) + " does not match final element " + w.element.str());
  WeylElement w0 = w_empty(w.family, prof.w0);
  if (!b && prof.w0_primed) w0 = compose(w0, WeylElement::flip(w.family));
  return prof.twist_left ? compose(w0, w.element) : compose(w.element, w0);
}

OrbitData reduced_orbit(const WeylElement& v) {
  const int m = v.m();
  WeightVec e(m, 0), x;
  e[0] = 1;
  x = e;
  for (int c = 1; c <= 2 * m; ++c) {
    x = act_on_weight(v, x);
    if (x == e) return {c, 1};
    bool neg = true;
    for (int i = 0; i < m; ++i) neg = neg && x[i] == -e[i];
    if (neg) return {c, -1};
  }
  throw std::logic_error("orbit of e1 does not close within 2m steps");
}

bool lambda_identity_holds(const WeylElement& v, const WeightExpr& lam) {
  WeightExpr vl = act_on_weight(v, lam);
  const RatP p = PolyP::p();
  for (size_t i = 0; i < lam.size(); ++i) {
    RatP lhs = lam[i] - p * vl[i];
    if (lhs != RatP(i == 0 ? 1 : 0)) return false;
  }
  return true;
}

WeightExpr solve_lambda(const WeylElement& v) {
  const int m = v.m();
  OrbitData od = reduced_orbit(v);
  std::vector<PolyP> acc(m);
  WeightVec x(m, 0);
  x[0] = 1;
  for (int i = 0; i < od.c; ++i) {
    for (int j = 0; j < m; ++j)
      if (x[j]) acc[j] += PolyP::monomial(x[j], i);
    x = act_on_weight(v, x);
  }
  PolyP den = PolyP(1) - PolyP::monomial(od.s, od.c);
  WeightExpr lam;
  for (int j = 0; j < m; ++j) lam.emplace_back(acc[j], den);
  if (!lambda_identity_holds(v, lam)) throw std::logic_error("(1 - p v)(lambda) != e1 for " + v.str());
  return lam;
}

PolyP degree(Case c, int k, int m) {
  if (k < 1 || k > 2 * m) throw std::invalid_argument("final index out of range");
  const PolyP p = PolyP::p();
  PolyP d(1);
  if (c == Case::Bodd) {
    for (int j = k; j <= m - 1; ++j) d *= PolyP::geometric(2 * m - 2 * j - 1);
    for (int t = 1; t <= k - m - 1; ++t) d *= PolyP::geometric(2 * t - 1);
    return d;
  }
  // split count below the middle, its twin above; the twist swaps the signs
  const long sgn = c == Case::Duntwisted ? -1 : 1;
  for (int j = k; j <= m - 2; ++j) d *= PolyP::monomial(sgn, m - j - 1) + PolyP::geometric(2 * m - 2 * j - 2);
  for (int t = 2; t <= k - m - 1; ++t) d *= PolyP::monomial(-sgn, t - 1) + PolyP::geometric(2 * t - 2);
  return d;
}

PieriStep pieri_step(Case c, const FinalElement& w, const ConventionProfile& prof) {
  const int m = w.family.m;
  WeylElement v = twist_operator(c, w, prof);
  WeightExpr lam = solve_lambda(v);
  const RatP dw(degree(c, w.index, m));
  PieriStep out;
  for (const auto& e : colength_one_below(w.element)) {
    ShuffleVerdict sv = classify(e.element);
    if (sv.outcome != ShuffleVerdict::Final) continue;
    if (sv.target_twisted != w.twisted)
      throw std::logic_error("shuffle left the coset of " + w.element.str());
    const int nu = sv.target_index;
    RatP term = -coroot_pairing(e.root, lam) * RatP(PolyP::monomial(1, sv.steps)) *
                RatP(degree(c, nu, m)) / dw;
    out.raw[nu] += term;
  }
  const bool mid = c != Case::Bodd && (w.index == m || w.index == m + 1);
  for (const auto& [nu, r] : out.raw) {
    if (r.is_zero()) throw ConventionError(nu, "vanishing Pieri sum at slot " + std::to_string(nu));
    RatP mult = RatP(1) / r;
    if (mid) mult *= RatP(prof.even_mid_factor);
    out.multiplier[nu] = mult;
  }
  return out;
}

int empty_slot(Case c, int m) {
  switch (c) {
    case Case::Duntwisted: return m;
    case Case::Dtwisted: return m + 1;
    default: return 0;
  }
}

static int lambda_power(Case c, int m, int j) {
  if (c == Case::Bodd) return j <= m ? j - 1 : j - 1;
  if (j <= m - 1) return j - 1;
  if (j <= m + 1) return m - 1;
  return j - 2;
}

std::vector<BaseClass> compute_classes(Case c, int m, const ConventionProfile& prof) {
  if (m < (c == Case::Bodd ? 1 : 2)) throw std::invalid_argument("rank too small for case " + case_name(c));
  auto finals = final_elements(case_family(c, m), case_twisted(c));
  const int empty = empty_slot(c, m);
  const int surviving = c == Case::Duntwisted ? m + 1 : m;
  std::vector<std::optional<RatP>> cls(2 * m + 1);
  cls[1] = RatP(1);
  for (int k = 1; k < 2 * m; ++k) {
    int src = k;
    if (c != Case::Bodd && (k == m || k == m + 1)) {
      if (k == m + 1) continue;
      src = prof.mid_from_surviving ? surviving : empty;
    }
    if (!cls[src]) throw ConventionError(src, "slot " + std::to_string(src) + " never reached");
    PieriStep st = pieri_step(c, finals[src - 1], prof);
    for (const auto& [nu, mult] : st.multiplier) {
      if (nu == empty) {
        cls[nu] = RatP(0);
        continue;
      }
      if (!cls[nu]) cls[nu] = *cls[src] * mult;
    }
  }
  if (empty) cls[empty] = RatP(0);
  std::vector<BaseClass> out;
  for (int j = 1; j <= 2 * m; ++j) {
    if (!cls[j]) throw ConventionError(j, "slot " + std::to_string(j) + " never reached");
    if (!cls[j]->is_poly())
      throw ConventionError(j, "slot " + std::to_string(j) + " is not a polynomial: " + cls[j]->str());
    out.push_back({j, *cls[j], lambda_power(c, m, j)});
  }
  return out;
}

static PolyP prod(int lo, int hi, int mult, long sign) {
  // Π_{i=lo}^{hi} (p^{mult·i} + sign)
  PolyP r(1);
  for (int i = lo; i <= hi; ++i) r *= PolyP::monomial(1, mult * i) + PolyP(sign);
  return r;
}

BaseClass closed_form(Case c, int m, int j) {
  if (j < 1 || j > 2 * m) throw std::invalid_argument("slot out of range");
  const RatP half(mpq_class(1, 2));
  BaseClass b{j, RatP(0), lambda_power(c, m, j)};
  if (c == Case::Bodd) {
    if (j <= m) {
      b.coeff = prod(1, j - 1, 1, -1);
    } else if (j == m + 1) {
      b.coeff = half * prod(1, m, 1, -1);
    } else {
      int k = j - m;
      b.coeff = half * RatP(prod(k, m, 2, -1), prod(1, m - k + 1, 1, 1));
    }
    return b;
  }
  if (j <= m - 1) {
    b.coeff = prod(1, j - 1, 1, -1);
    return b;
  }
  if (j == empty_slot(c, m)) return b;
  if (j <= m + 1) {
    // the twisted slot m has ∏_{i<m} as the recursion and part iii demand
    b.coeff = prod(1, m - 1, 1, -1);
    return b;
  }
  int k = j - m;
  if (c == Case::Duntwisted)
    b.coeff = half * RatP(prod(1, m - 1, 1, -1) * prod(m - k + 2, m, 1, 1), prod(1, k - 2, 1, 1) * prod(1, k - 1, 1, -1));
  else
    b.coeff = half * RatP(prod(1, m, 1, -1) * prod(m - k + 2, m - 1, 1, 1), prod(1, k - 1, 1, 1) * prod(1, k - 2, 1, -1));
  return b;
}

PolyP qbinomial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("qbinomial needs 0 <= k <= n");
  // [n,k]_q = Π_{i=1}^{k} (1 − q^{n−k+i}) / (1 − q^i), q = p²
  RatP r(1);
  for (int i = 1; i <= k; ++i)
    r *= RatP(PolyP(1) - PolyP::monomial(1, 2 * (n - k + i)), PolyP(1) - PolyP::monomial(1, 2 * i));
  return r.as_poly();
}

RatP qbinomial_form(Case c, int m, int j) {
  if (j <= m || j > 2 * m) throw std::invalid_argument("q-binomial form covers slots m+1..2m");
  const int k = j - m;
  const RatP half(mpq_class(1, 2));
  switch (c) {
    case Case::Bodd:
      return half * RatP(prod(1, m + 1 - k, 1, -1) * qbinomial(m, m + 1 - k));
    case Case::Duntwisted:
      return half * RatP(PolyP::monomial(1, k - 1) + PolyP(1), PolyP::monomial(1, m) - PolyP(1)) *
             RatP(prod(1, m + 1 - k, 1, -1) * qbinomial(m, k - 1));
    default:
      return half * RatP(PolyP::monomial(1, k - 1) - PolyP(1), PolyP::monomial(1, m) + PolyP(1)) *
             RatP(prod(1, m - k + 1, 1, -1) * qbinomial(m, k - 1));
  }
}

bool qbinomial_identity_check(Case c, int m) {
  for (int j = m + 1; j <= 2 * m; ++j)
    if (qbinomial_form(c, m, j) != closed_form(c, m, j).coeff) return false;
  return true;
}

bool half_integral(const RatP& c) {
  if (!c.is_poly()) return false;
  return (c.num() * PolyP(2)).has_integer_coeffs();
}

std::vector<VerifyEntry> verify(Case c, int m_lo, int m_hi, const ConventionProfile& prof) {
  std::vector<VerifyEntry> out;
  for (int m = m_lo; m <= m_hi; ++m) {
    VerifyEntry e;
    e.c = c;
    e.m = m;
    e.qbinomial_ok = qbinomial_identity_check(c, m);
    try {
      auto cls = compute_classes(c, m, prof);
      e.classes_match = true;
      e.integral = true;
      for (const auto& b : cls) {
        BaseClass cf = closed_form(c, m, b.final_index);
        if (!half_integral(b.coeff)) e.integral = false;
        if (e.classes_match && (b.coeff != cf.coeff || b.lambda_power != cf.lambda_power)) {
          e.classes_match = false;
          e.first_bad_slot = b.final_index;
          e.message = "slot " + std::to_string(b.final_index) + ": recursion gives " + b.coeff.str() +
                      ", closed form " + cf.coeff.str();
        }
      }
    } catch (const ConventionError& err) {
      e.first_bad_slot = err.slot;
      e.message = err.what();
    }
    if (!e.qbinomial_ok && e.message.empty()) e.message = "q-binomial rewriting disagrees";
    out.push_back(e);
  }
  return out;
}

}  // namespace strata
