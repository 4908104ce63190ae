#include "seifert/moduli.hpp"

#include <algorithm>

namespace seifert {

namespace {

Rational half_canonical_degree(const OrbifoldBase& base) {
  return degree(canonical_bundle(base)) / Rational(2);
}

// Visits every locals tuple whose fractional degree Σε_i/α_i stays below
// `bound`, in lexicographic order.
template <class Fn>
void for_each_locals_below(const OrbifoldBase& base, const Rational& bound, Fn&& fn) {
  const std::size_t n = base.marked_points();
  std::vector<std::int64_t> locals(n, 0);
  auto rec = [&](auto&& self, std::size_t i, const Rational& partial) -> void {
    if (i == n) {
      fn(locals, partial);
      return;
    }
    const Integer alpha(base.multiplicity(i));
    for (std::int64_t eps = 0; eps < base.multiplicity(i); ++eps) {
      const Rational next = partial + Rational(Integer(eps), alpha);
      if (next > bound) break;
      locals[i] = eps;
      self(self, i + 1, next);
    }
    locals[i] = 0;
  };
  rec(rec, 0, Rational(0));
}

bool component_less(const CriticalComponent& a, const CriticalComponent& b) {
  if (a.kind != b.kind) return a.kind == ComponentKind::Reducible;
  if (a.grading != b.grading) return a.grading < b.grading;
  if (!(a.data == b.data)) return data_less(a.data, b.data);
  return a.sign == Sign::Plus && b.sign == Sign::Minus;
}

std::vector<BundleData> spinc_representatives(const SeifertFibration& y) {
  // Each coset of Z[N] holds exactly one bundle with degree in [0, |deg N|).
  const Rational width = degree(y).abs();
  const auto& base = y.base();
  std::vector<BundleData> reps;
  for_each_locals_below(base, Rational(Integer(base.marked_points())), [&](const auto& locals, const Rational& frac) {
    for (Integer b = (-frac).ceil(); Rational(b) + frac < width; ++b)
      reps.emplace_back(base, b, locals);
  });
  std::sort(reps.begin(), reps.end(), data_less);
  return reps;
}

}  // namespace

std::size_t CriticalSet::irreducible_count() const {
  return static_cast<std::size_t>(std::count_if(components.begin(), components.end(), [](const auto& c) {
    return c.kind == ComponentKind::Irreducible;
  }));
}

CriticalSet enumerate_components(const SeifertFibration& y, const std::optional<BundleData>& spinc) {
  const PlumbingLattice lat(y);
  const auto& base = y.base();
  if (spinc && !(spinc->base() == base))
    fail(ErrorCode::BaseMismatch, "Spin^c representative lives over a different orbifold");

  CriticalSet out;
  if (spinc) {
    out.components.push_back({ComponentKind::Reducible, Sign::Plus, *spinc, Integer(base.genus()),
                              Rational(0), Rational(0)});
  } else {
    for (auto& rep : spinc_representatives(y))
      out.components.push_back({ComponentKind::Reducible, Sign::Plus, std::move(rep),
                                Integer(base.genus()), Rational(0), Rational(0)});
  }

  const Rational half_k = half_canonical_degree(base);
  if (half_k.sign() > 0) {
    for_each_locals_below(base, half_k, [&](const auto& locals, const Rational& frac) {
      for (Integer e = 0;; ++e) {
        const Rational deg = Rational(e) + frac;
        if (deg > half_k) break;
        BundleData data(base, e, locals);
        if (deg == half_k) {
          out.boundary.push_back(std::move(data));
          break;
        }
        if (spinc && !same_spinc_class(data, *spinc, y)) continue;
        const Rational grading = dim_y(lat, data);
        const Rational cs = cs_coefficient(y, data);
        for (Sign s : {Sign::Plus, Sign::Minus})
          out.components.push_back({ComponentKind::Irreducible, s, data, e, grading, cs});
      }
    });
  }
  std::sort(out.components.begin(), out.components.end(), component_less);
  return out;
}

Rational cs_coefficient(const SeifertFibration& y, const BundleData& e) {
  require_nonzero_degree(y);
  const Rational shift = degree(e) - half_canonical_degree(y.base());
  return shift * shift / degree(y);
}

Rational cs_coefficient(const SeifertFibration& y, const CriticalComponent& c) {
  if (c.kind == ComponentKind::Reducible) return Rational(0);
  return cs_coefficient(y, c.data);
}

FloerTable floer_table(const SeifertFibration& y) {
  require_nonzero_degree(y);
  if (degree(y).sign() > 0)
    fail(ErrorCode::WrongOrientation,
         "fibration has positive degree; Floer tables use deg(N) < 0 (invert the fibration)");
  if (reducible_nondegenerate(y) == ReducibleStatus::Degenerate)
    fail(ErrorCode::DegenerateReducible, "reducible locus is degenerate");

  const CriticalSet set = enumerate_components(y);
  FloerTable table{y, {}, {}};
  for (const auto& c : set.components)
    if (c.kind == ComponentKind::Irreducible && c.complex_dim != 0)
      fail(ErrorCode::NonIsolatedCritical,
           "critical component of complex dimension " + c.complex_dim.get_str() + " is not isolated");
  for (const auto& c : set.components) {
    if (c.kind != ComponentKind::Irreducible) continue;
    if (!c.grading.is_integer())
      fail(ErrorCode::InvalidData, "non-integral grading " + c.grading.str());
    table.generators.push_back({c.data, c.sign, c.grading.num()});
    table.ranks[c.grading.num()] += 1;
  }
  return table;
}

BundleData floor_half_canonical(const SeifertFibration& y, const BundleData& e0) {
  require_nonzero_degree(y);
  if (degree(y).sign() > 0)
    fail(ErrorCode::WrongOrientation, "floor of K/2 needs deg(N) < 0");
  if (!(e0.base() == y.base())) fail(ErrorCode::BaseMismatch, "bundle lives over a different orbifold");
  // deg(e0) + k deg(N) < deg(K)/2  ⇔  k > t, with deg(N) < 0.
  const Rational t = (half_canonical_degree(y.base()) - degree(e0)) / degree(y);
  const Integer k = t.floor() + 1;
  return tensor(e0, power(y.bundle(), k));
}

Rational interpolation_dimension(const SeifertFibration& y, const FlowEnd& from, const FlowEnd& to) {
  require_nonzero_degree(y);
  if (from.kind == ComponentKind::Reducible)
    fail(ErrorCode::FromReducible, "no flows leave the reducible locus");
  if (to.kind == ComponentKind::Irreducible) {
    if (from.sign != to.sign) fail(ErrorCode::OppositeSign, "no flows connect components of opposite sign");
    return flow_dimension(y, from.data, to.data);
  }
  return flow_dimension(y, from.data, floor_half_canonical(y, from.data)) + Rational(1);
}

}  // namespace seifert
