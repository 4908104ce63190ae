#pragma once

#include <vector>

#include "seifert/hj.hpp"
#include "seifert/linalg.hpp"
#include "seifert/orbifold.hpp"

namespace seifert {

/// A vector on the star-shaped plumbing graph: one entry for the central
/// curve and one per exceptional curve S_ℓ^j of each chain.
struct ChernVector {
  Rational central;
  std::vector<std::vector<Rational>> chains;

  /// Central entry first, then chains in marked-point order.
  RatVector flatten() const;
  std::size_t size() const;

  friend bool operator==(const ChernVector&, const ChernVector&) = default;
};

/// Resolution graph of the disk bundle of N: a central vertex of weight b
/// joined to one Hirzebruch-Jung chain per marked point, where chain j
/// expands α_j/β_j and carries weights −a_ℓ^j.
class PlumbingLattice {
 public:
  /// Throws ZeroDegree when deg(N) = 0.
  explicit PlumbingLattice(SeifertFibration y);

  const SeifertFibration& fibration() const { return y_; }
  const Integer& central_weight() const { return y_.bundle().background(); }
  const std::vector<hj::Chain>& chains() const { return chains_; }
  std::size_t size() const;

  /// Intersection matrix in flattened vertex order.
  RatMatrix intersection_matrix() const;

 private:
  SeifertFibration y_;
  std::vector<hj::Chain> chains_;
};

inline PlumbingLattice build_lattice(const SeifertFibration& y) { return PlumbingLattice(y); }

/// Ξ: evaluations of c_1(Ê) on the central curve and exceptional curves.
ChernVector xi_vector(const PlumbingLattice& lat, const BundleData& e);

/// κ: evaluations of the canonical class (adjunction: K·S = −S² − 2).
ChernVector kappa_vector(const PlumbingLattice& lat);

/// Coefficients x of c_1(Ê) in the dual basis, from the closed form
/// x⁰ = deg E / deg Y and the telescoped chain recursion. Satisfies M x = Ξ.
ChernVector chern_coefficients(const PlumbingLattice& lat, const BundleData& e);

/// Same coefficients obtained by solving M x = Ξ directly.
ChernVector chern_coefficients_by_solve(const PlumbingLattice& lat, const BundleData& e);

/// Expected dimension (Ξ − κ)ᵀ M⁻¹ Ξ.
Rational dim_y(const PlumbingLattice& lat, const BundleData& e);
Rational dim_y(const SeifertFibration& y, const BundleData& e);

struct PrintedDimension {
  Rational value;
  bool matches_lattice = false;
};

/// Evaluates the fully expanded closed-form dimension expression term by
/// term (no lattice solve) and reports whether it agrees with `dim_y`.
/// Diagnostic only: the two can differ when a chain carries non-zero ξ.
PrintedDimension dim_closed_form_as_printed(const SeifertFibration& y, const BundleData& e);

/// Expected dimension of flows C(e1) → C(e2): dim_Y(e1) + dim_{Y⁻¹}(e2).
Rational flow_dimension(const SeifertFibration& y, const BundleData& e1, const BundleData& e2);

}  // namespace seifert
