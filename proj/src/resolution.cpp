#include "seifert/resolution.hpp"

namespace seifert {

RatVector ChernVector::flatten() const {
  RatVector out;
  out.reserve(size());
  out.push_back(central);
  for (const auto& c : chains) out.insert(out.end(), c.begin(), c.end());
  return out;
}

std::size_t ChernVector::size() const {
  std::size_t n = 1;
  for (const auto& c : chains) n += c.size();
  return n;
}

PlumbingLattice::PlumbingLattice(SeifertFibration y) : y_(std::move(y)) {
  require_nonzero_degree(y_);
  const auto& base = y_.base();
  chains_.reserve(base.marked_points());
  for (std::size_t j = 0; j < base.marked_points(); ++j)
    chains_.push_back(hj::expand(base.multiplicity(j), y_.bundle().local(j)));
}

std::size_t PlumbingLattice::size() const {
  std::size_t n = 1;
  for (const auto& c : chains_) n += c.length();
  return n;
}

RatMatrix PlumbingLattice::intersection_matrix() const {
  RatMatrix m(size(), size());
  m(0, 0) = Rational(central_weight());
  std::size_t offset = 1;
  for (const auto& c : chains_) {
    for (std::size_t l = 0; l < c.length(); ++l) {
      const std::size_t v = offset + l;
      m(v, v) = Rational(Integer(-c.a[l]));
      const std::size_t prev = (l == 0) ? 0 : v - 1;
      m(v, prev) = Rational(1);
      m(prev, v) = Rational(1);
    }
    offset += c.length();
  }
  return m;
}

namespace {

void require_base(const PlumbingLattice& lat, const BundleData& e) {
  if (!(lat.fibration().base() == e.base()))
    fail(ErrorCode::BaseMismatch, "bundle and fibration live over different orbifolds");
}

ChernVector unflatten(const PlumbingLattice& lat, const RatVector& flat) {
  ChernVector out;
  out.central = flat[0];
  std::size_t offset = 1;
  for (const auto& c : lat.chains()) {
    out.chains.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(offset),
                            flat.begin() + static_cast<std::ptrdiff_t>(offset + c.length()));
    offset += c.length();
  }
  return out;
}

Rational inv_product(std::int64_t a, std::int64_t b) {
  return Rational(Integer(1), Integer(a) * Integer(b));
}

}  // namespace

ChernVector xi_vector(const PlumbingLattice& lat, const BundleData& e) {
  require_base(lat, e);
  ChernVector out;
  out.central = Rational(e.background());
  for (std::size_t j = 0; j < lat.chains().size(); ++j) {
    auto xs = hj::decompose(e.local(j), lat.chains()[j].basis());
    out.chains.emplace_back(xs.begin(), xs.end());
  }
  return out;
}

ChernVector kappa_vector(const PlumbingLattice& lat) {
  ChernVector out;
  out.central = Rational(Integer(-lat.central_weight() + 2 * lat.fibration().base().genus() - 2));
  for (const auto& c : lat.chains()) {
    std::vector<Rational> entries;
    for (auto a : c.a) entries.emplace_back(Integer(a - 2));
    out.chains.push_back(std::move(entries));
  }
  return out;
}

ChernVector chern_coefficients(const PlumbingLattice& lat, const BundleData& e) {
  const ChernVector xi = xi_vector(lat, e);
  ChernVector x;
  x.central = degree(e) / degree(lat.fibration());

  for (std::size_t j = 0; j < lat.chains().size(); ++j) {
    const auto& c = lat.chains()[j];
    const auto& coeff = xi.chains[j];
    const std::size_t m = c.length();

    // tail[i] = Σ_{k ≥ i} d_k ξ_k for i = 1..m (index shifted by one).
    std::vector<Rational> tail(m + 1);
    for (std::size_t k = m; k >= 1; --k)
      tail[k - 1] = tail[k] + Rational(Integer(c.d[k])) * coeff[k - 1];

    std::vector<Rational> entries(m);
    Rational running = x.central / Rational(Integer(c.d[0]));
    for (std::size_t l = 1; l <= m; ++l) {
      running -= inv_product(c.d[l - 1], c.d[l]) * tail[l - 1];
      entries[l - 1] = Rational(Integer(c.d[l])) * running;
    }
    x.chains.push_back(std::move(entries));
  }
  return x;
}

ChernVector chern_coefficients_by_solve(const PlumbingLattice& lat, const BundleData& e) {
  const RatVector rhs = xi_vector(lat, e).flatten();
  return unflatten(lat, solve_exact(lat.intersection_matrix(), rhs));
}

Rational dim_y(const PlumbingLattice& lat, const BundleData& e) {
  const RatVector xi = xi_vector(lat, e).flatten();
  const RatVector kappa = kappa_vector(lat).flatten();
  const RatVector x = chern_coefficients(lat, e).flatten();
  Rational dim(0);
  for (std::size_t v = 0; v < xi.size(); ++v) dim += (xi[v] - kappa[v]) * x[v];
  return dim;
}

Rational dim_y(const SeifertFibration& y, const BundleData& e) {
  return dim_y(PlumbingLattice(y), e);
}

PrintedDimension dim_closed_form_as_printed(const SeifertFibration& y, const BundleData& e) {
  const PlumbingLattice lat(y);
  const ChernVector xi = xi_vector(lat, e);

  Rational total(e.background());
  for (std::size_t j = 0; j < lat.chains().size(); ++j) {
    const auto& c = lat.chains()[j];
    const auto& coeff = xi.chains[j];
    const std::size_t m = c.length();

    // prefix[t] = Σ_{i=1}^{t} 1/(d_{i−1} d_i)
    std::vector<Rational> prefix(m + 1);
    for (std::size_t t = 1; t <= m; ++t) prefix[t] = prefix[t - 1] + inv_product(c.d[t - 1], c.d[t]);

    std::vector<Rational> weighted(m + 1);  // d_k ξ_k, 1-based
    for (std::size_t k = 1; k <= m; ++k) weighted[k] = Rational(Integer(c.d[k])) * coeff[k - 1];

    for (std::size_t l = 1; l <= m; ++l) {
      for (std::size_t k = 1; k <= m; ++k)
        total += weighted[k] * weighted[l] * prefix[std::min(k, l)];
      total += weighted[l] * prefix[l];
      total -= coeff[l - 1];
    }
  }
  const Rational deg_e = degree(e);
  total += deg_e / degree(y) * (deg_e - degree(canonical_bundle(y.base())));

  PrintedDimension out{total, false};
  out.matches_lattice = (total == dim_y(lat, e));
  return out;
}

Rational flow_dimension(const SeifertFibration& y, const BundleData& e1, const BundleData& e2) {
  if (!(e1.base() == e2.base())) fail(ErrorCode::BaseMismatch, "flow endpoints live over different orbifolds");
  return dim_y(y, e1) + dim_y(inverse_fibration(y), e2);
}

}  // namespace seifert
