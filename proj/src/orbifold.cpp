#include "seifert/orbifold.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace seifert {

namespace {

void require_same_base(const BundleData& a, const BundleData& b) {
  if (!(a.base() == b.base())) fail(ErrorCode::BaseMismatch, "bundles live over different orbifolds");
}

bool pairwise_coprime(std::span<const std::int64_t> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (std::gcd(xs[i], xs[j]) != 1) return false;
  return true;
}

}  // namespace

OrbifoldBase::OrbifoldBase(int genus, std::vector<std::int64_t> multiplicities)
    : genus_(genus), alphas_(std::move(multiplicities)) {
  if (genus_ < 0) fail(ErrorCode::InvalidData, "genus must be non-negative");
  for (auto a : alphas_)
    if (a < 2) fail(ErrorCode::InvalidData, "multiplicity " + std::to_string(a) + " is below 2");
}

bool OrbifoldBase::simply_connected() const { return genus_ == 0 && cyclic_picard(); }

bool OrbifoldBase::cyclic_picard() const { return pairwise_coprime(alphas_); }

BundleData::BundleData(OrbifoldBase base, Integer background, std::vector<std::int64_t> locals)
    : base_(std::move(base)), background_(std::move(background)), locals_(std::move(locals)) {
  if (locals_.size() != base_.marked_points())
    fail(ErrorCode::InvalidData, "expected " + std::to_string(base_.marked_points()) +
                                     " local invariants, got " + std::to_string(locals_.size()));
  for (std::size_t i = 0; i < locals_.size(); ++i)
    if (locals_[i] < 0 || locals_[i] >= base_.multiplicity(i))
      fail(ErrorCode::InvalidData, "local invariant " + std::to_string(locals_[i]) +
                                       " outside [0, " + std::to_string(base_.multiplicity(i)) + ")");
}

BundleData BundleData::normalized(OrbifoldBase base, Integer background,
                                  std::span<const Integer> locals) {
  if (locals.size() != base.marked_points())
    fail(ErrorCode::InvalidData, "expected " + std::to_string(base.marked_points()) +
                                     " local invariants, got " + std::to_string(locals.size()));
  std::vector<std::int64_t> reduced(locals.size());
  for (std::size_t i = 0; i < locals.size(); ++i) {
    const Integer alpha(base.multiplicity(i));
    background += floor_div(locals[i], alpha);
    reduced[i] = mod_floor(locals[i], alpha).get_si();
  }
  return BundleData(std::move(base), std::move(background), std::move(reduced));
}

BundleData BundleData::trivial(const OrbifoldBase& base) {
  return BundleData(base, Integer(0), std::vector<std::int64_t>(base.marked_points(), 0));
}

bool BundleData::is_trivial() const {
  return background_ == 0 && std::all_of(locals_.begin(), locals_.end(), [](auto b) { return b == 0; });
}

bool data_less(const BundleData& a, const BundleData& b) {
  if (a.background() != b.background()) return a.background() < b.background();
  return std::lexicographical_compare(a.locals().begin(), a.locals().end(), b.locals().begin(),
                                      b.locals().end());
}

SeifertFibration::SeifertFibration(BundleData bundle) : bundle_(std::move(bundle)) {
  const auto& base = bundle_.base();
  for (std::size_t i = 0; i < base.marked_points(); ++i)
    if (std::gcd(base.multiplicity(i), bundle_.local(i)) != 1)
      fail(ErrorCode::NonCoprime, "Seifert pair (" + std::to_string(base.multiplicity(i)) + "," +
                                      std::to_string(bundle_.local(i)) + ") is not coprime");
}

Rational euler_characteristic(const OrbifoldBase& base) {
  Rational chi(2 - 2 * base.genus());
  for (auto a : base.multiplicities()) chi += Rational(Integer(1), Integer(a)) - Rational(1);
  return chi;
}

Rational degree(const BundleData& e) {
  Rational deg(e.background());
  for (std::size_t i = 0; i < e.locals().size(); ++i)
    deg += Rational(Integer(e.local(i)), Integer(e.base().multiplicity(i)));
  return deg;
}

BundleData canonical_bundle(const OrbifoldBase& base) {
  std::vector<std::int64_t> locals;
  locals.reserve(base.marked_points());
  for (auto a : base.multiplicities()) locals.push_back(a - 1);
  return BundleData(base, Integer(2 * base.genus() - 2), std::move(locals));
}

BundleData tensor(const BundleData& a, const BundleData& b) {
  require_same_base(a, b);
  Integer background = a.background() + b.background();
  std::vector<std::int64_t> locals(a.locals().size());
  for (std::size_t i = 0; i < locals.size(); ++i) {
    const auto alpha = a.base().multiplicity(i);
    const auto sum = a.local(i) + b.local(i);
    background += sum / alpha;
    locals[i] = sum % alpha;
  }
  return BundleData(a.base(), std::move(background), std::move(locals));
}

BundleData inverse(const BundleData& a) {
  Integer background = -a.background();
  std::vector<std::int64_t> locals(a.locals().size());
  for (std::size_t i = 0; i < locals.size(); ++i) {
    if (a.local(i) == 0) continue;
    locals[i] = a.base().multiplicity(i) - a.local(i);
    background -= 1;
  }
  return BundleData(a.base(), std::move(background), std::move(locals));
}

BundleData power(const BundleData& a, const Integer& k) {
  std::vector<Integer> locals;
  locals.reserve(a.locals().size());
  for (auto b : a.locals()) locals.push_back(k * Integer(b));
  return BundleData::normalized(a.base(), k * a.background(), locals);
}

SeifertFibration inverse_fibration(const SeifertFibration& y) {
  return SeifertFibration(inverse(y.bundle()));
}

bool validate_picard(const OrbifoldBase& base, const Rational& deg,
                     std::span<const std::int64_t> locals) {
  if (locals.size() != base.marked_points()) return false;
  Rational rest = deg;
  for (std::size_t i = 0; i < locals.size(); ++i)
    rest -= Rational(Integer(locals[i]), Integer(base.multiplicity(i)));
  return rest.is_integer();
}

SeifertFibration brieskorn_fibration(std::span<const std::int64_t> alphas) {
  if (alphas.empty()) fail(ErrorCode::InvalidData, "Brieskorn sphere needs at least one multiplicity");
  OrbifoldBase base(0, std::vector<std::int64_t>(alphas.begin(), alphas.end()));
  if (!pairwise_coprime(alphas)) fail(ErrorCode::NonCoprime, "multiplicities are not pairwise coprime");

  Integer product = 1;
  for (auto a : alphas) product *= a;

  // β_i · (∏α / α_i) ≡ −1 (mod α_i) makes Σβ_i/α_i ≡ −1/∏α (mod 1).
  std::vector<std::int64_t> betas;
  Rational local_sum(0);
  for (auto a : alphas) {
    const Integer alpha(a);
    const Integer beta = mod_floor(-mod_inverse(Integer(product / alpha), alpha), alpha);
    betas.push_back(beta.get_si());
    local_sum += Rational(beta, alpha);
  }
  const Rational b = Rational(Integer(-1), product) - local_sum;
  return SeifertFibration(BundleData(std::move(base), b.num(), std::move(betas)));
}

void require_nonzero_degree(const SeifertFibration& y) {
  if (degree(y).is_zero()) fail(ErrorCode::ZeroDegree, "fibration has degree zero");
}

PicardQuotient picard_quotient(const SeifertFibration& y) {
  require_nonzero_degree(y);
  const auto& base = y.base();
  const std::size_t n = base.marked_points();
  IntMatrix rel(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    rel(i, 0) = -1;
    rel(i, i + 1) = base.multiplicity(i);
  }
  rel(n, 0) = y.bundle().background();
  for (std::size_t i = 0; i < n; ++i) rel(n, i + 1) = y.bundle().local(i);

  PicardQuotient out;
  auto snf = smith_normal_form(rel);
  out.order = 1;
  for (auto& d : snf.diagonal) {
    out.order *= d;
    if (d != 1) out.invariant_factors.push_back(d);
  }
  out.free_rank = 2 * base.genus();
  return out;
}

bool same_spinc_class(const BundleData& e1, const BundleData& e2, const SeifertFibration& y) {
  require_same_base(e1, e2);
  require_same_base(e1, y.bundle());
  require_nonzero_degree(y);
  // Seifert data determine the bundle, so e1 ⊗ e2⁻¹ = N^k forces
  // k = deg(e1 ⊗ e2⁻¹) / deg(N); only the locals remain to compare.
  const BundleData diff = tensor(e1, inverse(e2));
  const Rational k = degree(diff) / degree(y);
  if (!k.is_integer()) return false;
  return power(y.bundle(), k.num()) == diff;
}

OrbiSpin orbi_spin_status(const OrbifoldBase& base) {
  const Rational half_k = degree(canonical_bundle(base)) / Rational(2);
  OrbiSpin out;

  if (base.cyclic_picard()) {
    const auto alphas = base.multiplicities();
    if (std::any_of(alphas.begin(), alphas.end(), [](auto a) { return a % 2 == 0; })) return out;
    std::vector<std::int64_t> locals;
    for (auto a : alphas) locals.push_back((a - 1) / 2);
    out.status = OrbiSpinStatus::Exists;
    out.bundle = BundleData(base, Integer(base.genus() - 1), std::move(locals));
    out.candidates = 1;
    return out;
  }

  // Degree no longer determines the bundle: scan every local combination.
  const std::size_t n = base.marked_points();
  std::vector<std::int64_t> locals(n, 0);
  std::optional<BundleData> first;
  for (;;) {
    Rational rest = half_k;
    for (std::size_t i = 0; i < n; ++i)
      rest -= Rational(Integer(locals[i]), Integer(base.multiplicity(i)));
    if (rest.is_integer()) {
      if (!first) first = BundleData(base, rest.num(), locals);
      ++out.candidates;
    }
    std::size_t i = 0;
    while (i < n && ++locals[i] == base.multiplicity(i)) locals[i++] = 0;
    if (i == n) break;
  }
  if (out.candidates == 1) {
    out.status = OrbiSpinStatus::Exists;
    out.bundle = first;
  } else if (out.candidates > 1) {
    out.status = OrbiSpinStatus::NonCyclicIndeterminate;
  }
  return out;
}

ReducibleStatus reducible_nondegenerate(const SeifertFibration& y) {
  require_nonzero_degree(y);
  const auto& base = y.base();
  if (!base.cyclic_picard()) return ReducibleStatus::Indeterminate;
  const bool orbi_spin = orbi_spin_status(base).status == OrbiSpinStatus::Exists;
  return (orbi_spin && base.genus() > 0) ? ReducibleStatus::Degenerate
                                         : ReducibleStatus::Nondegenerate;
}

Integer riemann_roch_count(const BundleData& e) {
  return Integer(1 - e.base().genus()) + e.background();
}

}  // namespace seifert
