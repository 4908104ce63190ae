#pragma once

#include <map>
#include <optional>
#include <vector>

#include "seifert/orbifold.hpp"
#include "seifert/resolution.hpp"

namespace seifert {

enum class ComponentKind { Reducible, Irreducible };
enum class Sign { Plus, Minus };

inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// One component of the critical set of the Chern-Simons-Dirac functional.
///
/// Irreducible components C^±(E) are labelled by the Seifert data of the
/// divisor bundle E and are copies of Sym^e of the base curve. A reducible
/// component is the Jacobian torus of its Spin^c class; `data` is then a
/// representative of that class and `sign` is meaningless.
struct CriticalComponent {
  ComponentKind kind = ComponentKind::Irreducible;
  Sign sign = Sign::Plus;
  BundleData data;
  Integer complex_dim;
  Rational grading;         // dim_Y(data); zero for reducibles
  Rational cs_coefficient;  // cs = 4π² · cs_coefficient
};

struct CriticalSet {
  std::vector<CriticalComponent> components;
  /// Bundles with deg(E) = deg(K)/2 exactly. They sit on the boundary of the
  /// admissible range and contribute no component.
  std::vector<BundleData> boundary;

  std::size_t irreducible_count() const;
};

/// All critical components, optionally restricted to the Spin^c class of
/// `spinc`. Sorted reducibles first, then by (grading, data, sign).
CriticalSet enumerate_components(const SeifertFibration& y,
                                 const std::optional<BundleData>& spinc = std::nullopt);

/// (deg E − deg K/2)² / deg N.
Rational cs_coefficient(const SeifertFibration& y, const BundleData& e);
Rational cs_coefficient(const SeifertFibration& y, const CriticalComponent& c);

struct FloerGenerator {
  BundleData data;
  Sign sign = Sign::Plus;
  Integer grading;
};

/// Irreducible Floer chain group; the differential vanishes because all
/// relative gradings are even, so this is also the homology.
struct FloerTable {
  SeifertFibration manifold;
  std::vector<FloerGenerator> generators;
  std::map<Integer, int> ranks;  // grading → rank
};

/// Throws WrongOrientation for deg(N) > 0, NonIsolatedCritical when some
/// irreducible component has positive dimension, DegenerateReducible when the
/// reducible locus is degenerate.
FloerTable floer_table(const SeifertFibration& y);

/// Among e0 ⊗ N^k, the unique bundle of largest degree strictly below
/// deg(K)/2. Requires deg(N) < 0.
BundleData floor_half_canonical(const SeifertFibration& y, const BundleData& e0);

struct FlowEnd {
  ComponentKind kind = ComponentKind::Irreducible;
  Sign sign = Sign::Plus;
  BundleData data;  // ignored for a reducible target
};

/// Expected dimension of the flows between two critical components.
///
/// Irreducible targets use dim_Y(e1) + dim_{Y⁻¹}(e2). A reducible target
/// uses the flows into ⌊K/2⌋ plus one. Flows leaving the reducible locus and
/// flows between opposite signs are rejected.
Rational interpolation_dimension(const SeifertFibration& y, const FlowEnd& from, const FlowEnd& to);

}  // namespace seifert
