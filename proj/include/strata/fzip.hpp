#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "strata/fq.hpp"
#include "strata/poly.hpp"
#include "strata/weyl.hpp"

namespace strata {

using Elem = FqField::Elem;
using Vec = std::vector<Elem>;
using Mat = std::vector<Vec>;  // row vectors

// Small dense linear algebra over F_q.
struct Lin {
  const FqField& F;

  Elem dot(const Vec& a, const Vec& b) const;
  // ⟨a,b⟩ for the antidiagonal Gram matrix
  Elem pair(const Vec& a, const Vec& b) const;
  Vec axpy(Elem t, const Vec& x, const Vec& y) const;  // t·x + y
  Vec scale(Elem t, const Vec& x) const;
  Vec frob(const Vec& x) const;
  // reduced row echelon basis of the row span
  Mat rref(Mat a) const;
  int rank(const Mat& a) const { return static_cast<int>(rref(a).size()); }
  Mat join(const Mat& a, const Mat& b) const;
  int meet_dim(const Mat& a, const Mat& b) const;
  bool contains(const Mat& space, const Vec& v) const;
  bool contains(const Mat& big, const Mat& small) const;
  // basis of {x : A x = 0}, A given by rows
  Mat kernel(const Mat& a, int ncols) const;
  // annihilator for the antidiagonal pairing
  Mat perp(const Mat& a, int n) const;
  // coordinates c with v = Σ c_i rows_i, rows independent; empty if v ∉ span
  bool solve(const Mat& rows, const Vec& v, Vec& c) const;
  Elem det(Mat a) const;
  Mat matmul(const Mat& a, const Mat& b) const;
};

using PartialFlag = std::vector<Mat>;

struct FlaggedFZip {
  std::shared_ptr<const FqField> field;
  int n = 0;
  int eps = 1;  // middle sign, odd n only
  WeylElement w = WeylElement::identity(family_B(1));
  Mat x;    // parameters, Id + x orthogonal and strictly upper triangular
  Mat E;    // adapted basis of the Hodge-side complete flag, E_i = first i rows
  Mat phi;  // phi[i] = lift of φ(e_{i+1})

  int m() const { return n / 2; }
  // φ on E_{n−1}/E_1 (the e_1 and e_n coordinates are ignored), semilinear
  Vec phi_mid(const Vec& v) const;
  Vec g1() const { return phi[n - 1]; }
  // G_j = G_1 + φ(E_j) for the given Hodge-side complete flag
  PartialFlag conjugate_flag(const PartialFlag& e) const;
  PartialFlag hodge_flag() const;
};

// The explicit zip attached to w.  Throws if the parameters violate the
// orthogonality or support conditions.
FlaggedFZip yw_point(const WeylElement& w, std::shared_ptr<const FqField> field, const Mat* params = nullptr,
                     int eps = 1);
// Id + x unipotent upper triangular and orthogonal, by a Cayley transform of a
// sparse random skew element; checked against the Gram identity.
Mat random_admissible_params(int n, const FqField& F, std::mt19937_64& rng, double density = 0.5);

// w with dim(E_i ∩ G_j) = r_w(i,j); complete flags, E_n/G_n optional.
WeylElement relative_position(const PartialFlag& e, const PartialFlag& g, const FqField& F);

PartialFlag canonical_filtration(const FlaggedFZip& z);
// seed picks among the Frobenius-stable completions of the middle part
WeylElement final_type(const FlaggedFZip& z, std::uint64_t seed = 0);

int legendre(long a, long p);
int middle_discriminant(const FlaggedFZip& z);
// fixed point on the determinant line
int hodge_discriminant(const FlaggedFZip& z);
// the closed formula in terms of disc(w), m and the middle discriminant
int hodge_discriminant_formula(const FlaggedFZip& z);

enum class QuadVariant { Odd, SplitEven, NonsplitEven };
QuadVariant parse_variant(const std::string& s);
std::string variant_name(QuadVariant v);
long count_isotropic_lines(QuadVariant v, int dim, int p);
PolyP isotropic_lines_closed(QuadVariant v, int dim);
long count_projective_points(int dim, int p);

struct Invariant {
  enum Kind { Height, Artin } kind;
  int value;
};

struct StratumRef {
  int index = 0;
  bool twisted = false;
};

StratumRef stratum_for_invariants(int n, Invariant inv, bool middle_split);

}  // namespace strata
