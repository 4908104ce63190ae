#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "seifert/rational.hpp"

namespace seifert::hj {

/// Hirzebruch-Jung expansion p/q = a_1 − 1/(a_2 − 1/(… − 1/a_m)).
///
/// `d` holds the denominators d_0 = p, d_1 = q, …, d_m = 1, d_{m+1} = 0,
/// linked by d_{i−1} + d_{i+1} = a_i d_i.
struct Chain {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> d;

  std::size_t length() const { return a.size(); }
  /// d_1, …, d_m (the decomposition basis).
  std::span<const std::int64_t> basis() const { return std::span(d).subspan(1, a.size()); }

  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Throws InvalidPair unless 0 < q < p and gcd(p, q) = 1. The case q = p
/// never arises; q is reduced by the caller.
Chain expand(std::int64_t p, std::int64_t q);

/// Exact value of ⟨a_1, …, a_m⟩, evaluated from the tail upwards.
Rational continued_fraction_value(std::span<const std::int64_t> a);

/// Greedy coefficients x_k = ⌊(j − Σ_{i<k} d_i x_i) / d_k⌋ over a strictly
/// decreasing basis ending in 1. The result is the lexicographically largest
/// non-negative solution of Σ x_k d_k = j.
std::vector<std::int64_t> decompose(std::int64_t j, std::span<const std::int64_t> basis);

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Boundary lattice points, ordered by first coordinate, of the convex hull
/// of {(i, j) ≠ 0 : i ≤ 0 ≤ j, i + q j ≡ 0 (mod p)}, found by enumerating the
/// box [−p, 0] × [0, p]. Runs from (−p, 0) to (0, p).
std::vector<LatticePoint> lattice_hull_oracle(std::int64_t p, std::int64_t q);

/// Reads (a_i) and (d_i) back off hull vertices v_0 … v_{m+1} using
/// d_i = −x(v_i) and v_{i−1} + v_{i+1} = a_i v_i. Throws InvalidData when the
/// vertices do not satisfy these relations.
Chain chain_from_hull(std::span<const LatticePoint> hull);

/// Evaluations of c_1 of the pulled-back sheaf on the exceptional curves
/// S_1, …, S_m of the resolution of the (p, q) singularity.
std::vector<std::int64_t> resolve_sheaf_chern(std::int64_t p, std::int64_t q, std::int64_t j);

}  // namespace seifert::hj
