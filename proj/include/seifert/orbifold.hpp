#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "seifert/linalg.hpp"
#include "seifert/rational.hpp"

namespace seifert {

/// A closed 2-orbifold: a genus-g curve with n cone points of orders α_i ≥ 2.
class OrbifoldBase {
 public:
  OrbifoldBase() = default;
  OrbifoldBase(int genus, std::vector<std::int64_t> multiplicities);

  int genus() const { return genus_; }
  std::span<const std::int64_t> multiplicities() const { return alphas_; }
  std::size_t marked_points() const { return alphas_.size(); }
  std::int64_t multiplicity(std::size_t i) const { return alphas_[i]; }

  /// Genus zero with pairwise coprime multiplicities.
  bool simply_connected() const;
  /// Pairwise coprime multiplicities (any genus): Pic^t is then torsion-free.
  bool cyclic_picard() const;

  friend bool operator==(const OrbifoldBase&, const OrbifoldBase&) = default;

 private:
  int genus_ = 0;
  std::vector<std::int64_t> alphas_;
};

/// Seifert invariant (b; β_1, ..., β_n) of an orbifold line bundle, kept in
/// normal form 0 ≤ β_i < α_i.
class BundleData {
 public:
  BundleData() = default;
  /// Throws InvalidData unless the locals are already in normal form.
  BundleData(OrbifoldBase base, Integer background, std::vector<std::int64_t> locals);

  /// Reduces arbitrary locals into [0, α_i), carrying into the background.
  static BundleData normalized(OrbifoldBase base, Integer background,
                               std::span<const Integer> locals);
  static BundleData trivial(const OrbifoldBase& base);

  const OrbifoldBase& base() const { return base_; }
  /// Chern number of the de-singularization |E|.
  const Integer& background() const { return background_; }
  std::span<const std::int64_t> locals() const { return locals_; }
  std::int64_t local(std::size_t i) const { return locals_[i]; }

  bool is_trivial() const;

  friend bool operator==(const BundleData&, const BundleData&) = default;

 private:
  OrbifoldBase base_;
  Integer background_;
  std::vector<std::int64_t> locals_;
};

/// Lexicographic on (background, locals); bases are assumed equal.
bool data_less(const BundleData& a, const BundleData& b);

/// Y = S(N), the unit circle bundle of the orbifold line bundle N.
class SeifertFibration {
 public:
  SeifertFibration() = default;
  /// Throws NonCoprime unless gcd(α_i, β_i) = 1 for every marked point.
  explicit SeifertFibration(BundleData bundle);

  const BundleData& bundle() const { return bundle_; }
  const OrbifoldBase& base() const { return bundle_.base(); }

  friend bool operator==(const SeifertFibration&, const SeifertFibration&) = default;

 private:
  BundleData bundle_;
};

Rational euler_characteristic(const OrbifoldBase& base);
Rational degree(const BundleData& e);
inline Rational degree(const SeifertFibration& y) { return degree(y.bundle()); }

BundleData canonical_bundle(const OrbifoldBase& base);

BundleData tensor(const BundleData& a, const BundleData& b);
BundleData inverse(const BundleData& a);
BundleData power(const BundleData& a, const Integer& k);

/// S(N⁻¹), the orientation-reversed fibration.
SeifertFibration inverse_fibration(const SeifertFibration& y);

/// True iff deg − Σ β_i/α_i is an integer.
bool validate_picard(const OrbifoldBase& base, const Rational& deg,
                     std::span<const std::int64_t> locals);

/// Σ(α_1, ..., α_n): genus zero, degree −1/∏α_i.
SeifertFibration brieskorn_fibration(std::span<const std::int64_t> alphas);

struct PicardQuotient {
  std::vector<Integer> invariant_factors;  // SNF diagonal of the presentation
  Integer order;                           // |Pic^t / Z[N]|
  int free_rank = 0;                       // 2g, the Jacobian part of H^2
};

/// Torsion of H^2(Y) presented as ⟨c, h_i | α_i h_i = c, [N] = 0⟩.
PicardQuotient picard_quotient(const SeifertFibration& y);

bool same_spinc_class(const BundleData& e1, const BundleData& e2, const SeifertFibration& y);

enum class OrbiSpinStatus { Exists, None, NonCyclicIndeterminate };

struct OrbiSpin {
  OrbiSpinStatus status = OrbiSpinStatus::None;
  std::optional<BundleData> bundle;  // set when Exists
  std::size_t candidates = 0;        // bundles with 2·deg = deg K found by the search
};

OrbiSpin orbi_spin_status(const OrbifoldBase& base);

enum class ReducibleStatus { Nondegenerate, Degenerate, Indeterminate };

ReducibleStatus reducible_nondegenerate(const SeifertFibration& y);

/// Holomorphic Euler characteristic 1 − g + b of the sheaf of sections.
Integer riemann_roch_count(const BundleData& e);

/// Throws ZeroDegree when deg(N) = 0.
void require_nonzero_degree(const SeifertFibration& y);

}  // namespace seifert
