#include "seifert/linalg.hpp"

#include <algorithm>
#include <optional>

namespace seifert {

namespace {

// Row/column operations on the working matrix, mirrored onto the transforms.
struct SmithWork {
  IntMatrix a;
  IntMatrix u;
  IntMatrix v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  // row_dst -= k * row_src
  void sub_row(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) -= k * a(src, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) -= k * u(src, c);
  }
  void sub_col(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) -= k * a(r, src);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) -= k * v(r, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }

  // Position of the non-zero entry of smallest magnitude in a[t.., t..].
  std::optional<std::pair<std::size_t, std::size_t>> min_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t r = t; r < a.rows(); ++r)
      for (std::size_t c = t; c < a.cols(); ++c) {
        if (a(r, c) == 0) continue;
        Integer m = ::abs(a(r, c));
        if (!best || m < best_abs) {
          best = {r, c};
          best_abs = m;
        }
      }
    return best;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t steps = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    auto pivot = w.min_pivot(t);
    if (!pivot) break;
    w.swap_rows(t, pivot->first);
    w.swap_cols(t, pivot->second);

    for (;;) {
      bool clean = true;
      // Clear column t below the pivot; a non-zero remainder becomes the
      // new (smaller) pivot.
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (w.a(r, t) == 0) continue;
        w.sub_row(r, t, floor_div(w.a(r, t), w.a(t, t)));
        if (w.a(r, t) != 0) {
          w.swap_rows(t, r);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (w.a(t, c) == 0) continue;
        w.sub_col(c, t, floor_div(w.a(t, c), w.a(t, t)));
        if (w.a(t, c) != 0) {
          w.swap_cols(t, c);
          clean = false;
        }
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and go again.
      bool divides = true;
      for (std::size_t r = t + 1; r < m.rows() && divides; ++r)
        for (std::size_t c = t + 1; c < m.cols(); ++c)
          if (w.a(r, c) % w.a(t, t) != 0) {
            w.sub_row(t, r, Integer(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (w.a(t, t) < 0) w.negate_row(t);
  }

  SmithForm out;
  out.diagonal.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) out.diagonal.push_back(w.a(i, i));
  out.left = std::move(w.u);
  out.right = std::move(w.v);
  return out;
}

RatVector solve_exact(const RatMatrix& m, std::span<const Rational> rhs) {
  if (!m.square()) fail(ErrorCode::InvalidData, "solve_exact needs a square matrix");
  if (rhs.size() != m.rows()) fail(ErrorCode::InvalidData, "right-hand side has wrong length");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatVector b(rhs.begin(), rhs.end());

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) fail(ErrorCode::SingularMatrix, "matrix is singular");
    if (piv != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(a(piv, c), a(col, c));
      std::swap(b[piv], b[col]);
    }
    const Rational inv = Rational(1) / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rational f = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      b[r] -= f * b[col];
    }
  }

  RatVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a(i, c) * x[c];
    x[i] = s / a(i, i);
  }
  return x;
}

Rational determinant(const RatMatrix& m) {
  if (!m.square()) fail(ErrorCode::InvalidData, "determinant needs a square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(a(piv, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    const Rational inv = Rational(1) / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rational f = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

std::vector<Rational> leading_principal_minors(const RatMatrix& m) {
  if (!m.square()) fail(ErrorCode::InvalidData, "minors need a square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  std::vector<Rational> minors;
  Rational running(1);
  // Without row exchanges the k-th pivot is Δ_k / Δ_{k-1}.
  for (std::size_t col = 0; col < n; ++col) {
    running *= a(col, col);
    minors.push_back(running);
    if (running.is_zero()) break;
    const Rational inv = Rational(1) / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rational f = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return minors;
}

bool is_negative_definite(const RatMatrix& m) {
  auto minors = leading_principal_minors(m);
  if (minors.size() != m.rows()) return false;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const int want = (k % 2 == 0) ? -1 : 1;  // Δ_{k+1} has sign (-1)^{k+1}
    if (minors[k].sign() != want) return false;
  }
  return true;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer inv;
  if (m <= 0 || mpz_invert(inv.get_mpz_t(), mod_floor(a, m).get_mpz_t(), m.get_mpz_t()) == 0) {
    if (m == 1) return Integer(0);
    fail(ErrorCode::NonCoprimeModuli,
         "no inverse of " + a.get_str() + " modulo " + m.get_str());
  }
  return mod_floor(inv, m);
}

Integer crt_solve(std::span<const std::pair<Integer, Integer>> residues) {
  Integer x = 0;
  Integer modulus = 1;
  for (const auto& [r, m] : residues) {
    if (m <= 0) fail(ErrorCode::NonCoprimeModuli, "modulus must be positive");
    Integer g;
    mpz_gcd(g.get_mpz_t(), modulus.get_mpz_t(), m.get_mpz_t());
    if (g != 1)
      fail(ErrorCode::NonCoprimeModuli,
           "moduli share the factor " + g.get_str());
    // x + modulus * t = r (mod m)
    Integer t = mod_floor((r - x) * mod_inverse(modulus, m), m);
    x += modulus * t;
    modulus *= m;
    x = mod_floor(x, modulus);
  }
  return x;
}

}  // namespace seifert
