#pragma once

// Brute-force reference computations. None of these call into the library's
// own algorithms beyond the value types, so agreement is meaningful.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "seifert/orbifold.hpp"

namespace seifert::oracle {

using Q = mpq_class;
using Z = mpz_class;

// HJ expansion by iterating x -> 1/(⌈x⌉ - x) on exact fractions.
struct HJ {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> d;  // d_0 = p, ..., d_m = 1, d_{m+1} = 0
};

inline HJ hj(std::int64_t p, std::int64_t q) {
  HJ out;
  Q x(p, q);
  x.canonicalize();
  out.d.push_back(p);
  for (;;) {
    out.d.push_back(x.get_den().get_si());
    Z c;
    mpz_cdiv_q(c.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    out.a.push_back(c.get_si());
    if (Q(c) == x) break;
    x = 1 / (Q(c) - x);
  }
  out.d.push_back(0);
  return out;
}

// Lexicographically largest non-negative solution of Σ x_k d_k = j, found by
// exhaustive search from the top coordinate down.
inline std::vector<std::int64_t> lexmax_decomposition(std::int64_t j, const std::vector<std::int64_t>& basis) {
  std::vector<std::int64_t> x(basis.size(), 0);
  std::function<bool(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t rest) -> bool {
    if (k == basis.size()) return rest == 0;
    for (std::int64_t v = rest / basis[k]; v >= 0; --v) {
      x[k] = v;
      if (rec(k + 1, rest - v * basis[k])) return true;
    }
    return false;
  };
  rec(0, j);
  return x;
}

inline std::vector<std::vector<Q>> lattice_matrix(const SeifertFibration& y) {
  std::vector<std::vector<std::int64_t>> weights;
  std::size_t n = 1;
  for (std::size_t i = 0; i < y.base().marked_points(); ++i) {
    auto c = hj(y.base().multiplicity(i), y.bundle().local(i));
    weights.push_back(c.a);
    n += c.a.size();
  }
  std::vector<std::vector<Q>> m(n, std::vector<Q>(n, 0));
  m[0][0] = Q(y.bundle().background());
  std::size_t at = 1;
  for (const auto& w : weights) {
    for (std::size_t l = 0; l < w.size(); ++l) {
      m[at + l][at + l] = -w[l];
      const std::size_t prev = l == 0 ? 0 : at + l - 1;
      m[prev][at + l] = m[at + l][prev] = 1;
    }
    at += w.size();
  }
  return m;
}

inline std::optional<std::vector<Q>> gauss_solve(std::vector<std::vector<Q>> m, std::vector<Q> b) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Q f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= m[i][i];
  return b;
}

inline std::vector<Q> xi(const SeifertFibration& y, const BundleData& e) {
  std::vector<Q> out{Q(e.background())};
  for (std::size_t i = 0; i < y.base().marked_points(); ++i) {
    auto c = hj(y.base().multiplicity(i), y.bundle().local(i));
    std::vector<std::int64_t> basis(c.d.begin() + 1, c.d.end() - 1);
    for (auto v : lexmax_decomposition(e.local(i), basis)) out.push_back(v);
  }
  return out;
}

inline std::vector<Q> kappa(const SeifertFibration& y) {
  std::vector<Q> out{Q(-y.bundle().background() + 2 * y.base().genus() - 2)};
  for (std::size_t i = 0; i < y.base().marked_points(); ++i)
    for (auto a : hj(y.base().multiplicity(i), y.bundle().local(i)).a) out.push_back(a - 2);
  return out;
}

inline Q dim_y(const SeifertFibration& y, const BundleData& e) {
  const auto x = *gauss_solve(lattice_matrix(y), xi(y, e));
  const auto k = kappa(y);
  const auto s = xi(y, e);
  Q total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) total += (s[i] - k[i]) * x[i];
  return total;
}

/// Tuples (ε_1, ε_2, ε_3) with Σ ε_i/α_i < −χ/2, in integer arithmetic.
inline std::vector<std::vector<std::int64_t>> brieskorn_tuples(std::int64_t p, std::int64_t q, std::int64_t r) {
  std::vector<std::vector<std::int64_t>> out;
  const std::int64_t rhs = p * q * r - q * r - p * r - p * q;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < q; ++b)
      for (std::int64_t c = 0; c < r; ++c)
        if (2 * (a * q * r + b * p * r + c * p * q) < rhs) out.push_back({a, b, c});
  return out;
}

/// Seifert invariants of Σ(α_1, ..., α_n) by searching β_i directly.
inline std::pair<std::int64_t, std::vector<std::int64_t>> brieskorn_invariants(const std::vector<std::int64_t>& alphas) {
  std::int64_t prod = 1;
  for (auto a : alphas) prod *= a;
  std::vector<std::int64_t> betas;
  Q frac = 0;
  for (auto a : alphas) {
    std::int64_t beta = 0;
    while (((prod / a) * beta + 1) % a != 0) ++beta;
    betas.push_back(beta);
    frac += Q(beta, a);
  }
  frac.canonicalize();
  const Q b = Q(-1, prod) - frac;
  return {Z(b).get_si(), betas};
}

/// Closed-form flow dimension for a smooth circle bundle of Chern number n.
inline Q smooth_flow(std::int64_t n, std::int64_t g, std::int64_t e1, std::int64_t e2) {
  Q ratio(e1 - e2, n);
  ratio.canonicalize();
  return ratio * Q(e1 + e2 - (2 * g - 2)) + Q(e1 + e2);
}

inline Z det_laplace(const std::vector<std::vector<Z>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Z total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Z>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Z> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * det_laplace(minor);
  }
  return total;
}

/// Invariant factors from determinantal divisors: d_1 ⋯ d_k = gcd of k×k minors.
inline std::vector<Z> invariant_factors(const std::vector<std::vector<Z>>& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  const std::size_t n = std::min(rows, cols);
  std::vector<Z> dets{Z(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    Z g = 0;
    std::vector<std::size_t> rsel(k), csel(k);
    std::function<void(std::size_t, std::size_t)> pick_cols;
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t i, std::size_t from) {
      if (i == k) {
        pick_cols(0, 0);
        return;
      }
      for (std::size_t r = from; r < rows; ++r) {
        rsel[i] = r;
        pick_rows(i + 1, r + 1);
      }
    };
    pick_cols = [&](std::size_t i, std::size_t from) {
      if (i == k) {
        std::vector<std::vector<Z>> sub(k, std::vector<Z>(k));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[rsel[a]][csel[b]];
        Z d = det_laplace(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        return;
      }
      for (std::size_t c = from; c < cols; ++c) {
        csel[i] = c;
        pick_cols(i + 1, c + 1);
      }
    };
    pick_rows(0, 0);
    dets.push_back(g);
  }
  std::vector<Z> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(dets[k - 1] == 0 ? Z(0) : Z(dets[k] / dets[k - 1]));
  return out;
}

}  // namespace seifert::oracle
