#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "seifert/orbifold.hpp"

namespace seifert::notation {

// Grammar (whitespace is ignored between tokens):
//
//   fibration := "M(" int ";" int ";" [pair {"," pair}] ")"
//              | "Sigma(" int {"," int} ")"
//   pair      := "(" int "," int ")"              -- (alpha, beta)
//   base      := "O(" int ";" [int {"," int}] ")"  -- genus; multiplicities
//   bundle    := "(" int ";" [int {"," int}] ")"  -- (e; eps_1, ..., eps_n)
//
// Seifert pairs and bundle locals outside [0, alpha) are reduced, with the
// carry moved into the background degree. Parse failures throw ParseError
// with the 1-based column of the offending character.

SeifertFibration parse_fibration(std::string_view text);
OrbifoldBase parse_base(std::string_view text);
BundleData parse_bundle(std::string_view text, const OrbifoldBase& base);

/// Either form accepted by `parse_fibration`, or an orbifold base.
std::variant<SeifertFibration, OrbifoldBase> parse_manifold(std::string_view text);

/// Canonical forms: "M(0;-1;(2,1),(3,1),(7,1))", "O(0;2,3,7)", "(0;0,0,1)".
std::string format(const SeifertFibration& y);
std::string format(const OrbifoldBase& base);
std::string format(const BundleData& e);

/// Multiplicity pattern with one affine slot, e.g. "2,3,6k-1".
struct FamilySpec {
  struct Slot {
    std::int64_t constant = 0;
    std::int64_t slope = 0;  // non-zero for the affine slot
  };
  std::vector<Slot> slots;

  /// The instantiated multiplicities, or nullopt when some entry is below 2
  /// or the entries are not pairwise coprime.
  std::optional<std::vector<std::int64_t>> instantiate(std::int64_t k) const;
  std::string str() const;
};

FamilySpec parse_family(std::string_view text);

/// "LO..HI", inclusive.
std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text);

}  // namespace seifert::notation
