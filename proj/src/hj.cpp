#include "seifert/hj.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "seifert/error.hpp"

namespace seifert::hj {

namespace {

void require_pair(std::int64_t p, std::int64_t q) {
  if (q <= 0 || q >= p || std::gcd(p, q) != 1)
    fail(ErrorCode::InvalidPair, "(" + std::to_string(p) + "," + std::to_string(q) +
                                     ") is not a coprime pair with 0 < q < p");
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

Chain expand(std::int64_t p, std::int64_t q) {
  require_pair(p, q);
  Chain c{p, q, {}, {p, q}};
  // The step is a_k = ⌈d_{k−1}/d_k⌉. A floor here would give d_2 = −1 for
  // 7/3 and break a_k ≥ 2.
  while (c.d.back() != 0) {
    const std::int64_t prev = c.d[c.d.size() - 2];
    const std::int64_t cur = c.d.back();
    const std::int64_t a = ceil_div(prev, cur);
    c.a.push_back(a);
    c.d.push_back(a * cur - prev);
  }
  return c;
}

Rational continued_fraction_value(std::span<const std::int64_t> a) {
  if (a.empty()) fail(ErrorCode::InvalidData, "empty continued fraction");
  Rational v(Integer(a.back()));
  for (std::size_t i = a.size() - 1; i-- > 0;) v = Rational(Integer(a[i])) - Rational(1) / v;
  return v;
}

std::vector<std::int64_t> decompose(std::int64_t j, std::span<const std::int64_t> basis) {
  if (j < 0) fail(ErrorCode::InvalidData, "cannot decompose a negative value");
  if (basis.empty() || basis.back() != 1)
    fail(ErrorCode::InvalidData, "decomposition basis must end in 1");
  std::vector<std::int64_t> x(basis.size());
  std::int64_t rest = j;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    x[k] = rest / basis[k];
    rest -= x[k] * basis[k];
  }
  return x;
}

std::vector<LatticePoint> lattice_hull_oracle(std::int64_t p, std::int64_t q) {
  require_pair(p, q);
  std::vector<LatticePoint> pts;
  for (std::int64_t i = -p; i <= 0; ++i)
    for (std::int64_t j = 0; j <= p; ++j) {
      if (i == 0 && j == 0) continue;
      if (((i + q * j) % p + p) % p == 0) pts.push_back({i, j});
    }
  std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });

  // Lower hull (the side facing the origin), keeping collinear boundary points.
  auto cross = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<LatticePoint> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) < 0) hull.pop_back();
    // Points stacked vertically above the current end never lie on the
    // lower boundary.
    if (!hull.empty() && hull.back().x == pt.x) continue;
    hull.push_back(pt);
  }
  return hull;
}

Chain chain_from_hull(std::span<const LatticePoint> hull) {
  if (hull.size() < 3) fail(ErrorCode::InvalidData, "hull needs at least three vertices");
  Chain c;
  c.p = -hull.front().x;
  c.q = -hull[1].x;
  for (const auto& v : hull) c.d.push_back(-v.x);
  for (std::size_t i = 1; i + 1 < hull.size(); ++i) {
    const auto& v = hull[i];
    const std::int64_t sx = hull[i - 1].x + hull[i + 1].x;
    const std::int64_t sy = hull[i - 1].y + hull[i + 1].y;
    if (v.y == 0 || sy % v.y != 0 || sx != (sy / v.y) * v.x)
      fail(ErrorCode::InvalidData, "hull vertex " + std::to_string(i) + " breaks the chain relation");
    c.a.push_back(sy / v.y);
  }
  return c;
}

std::vector<std::int64_t> resolve_sheaf_chern(std::int64_t p, std::int64_t q, std::int64_t j) {
  const Chain c = expand(p, q);
  if (j < 0 || j >= p)
    fail(ErrorCode::JOutOfRange, "j = " + std::to_string(j) + " outside [0, " + std::to_string(p) + ")");
  return decompose(j, c.basis());
}

}  // namespace seifert::hj
