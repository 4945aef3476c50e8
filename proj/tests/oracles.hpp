#pragma once

// Test-only reference computations. Everything here is written against the
// definitions (brute force, Laplace expansion, Cramer's rule) and shares no
// code path with the library routines it is used to check; only the basic
// value types (GaussianRational, LatticeVector, IntMatrix) are reused.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "toral/gaussian.hpp"
#include "toral/int_matrix.hpp"
#include "toral/laurent.hpp"

namespace oracle {

using toral::GaussianRational;
using toral::IntMatrix;
using toral::LatticeVector;
using toral::LaurentPoly;

// ---- exact linear algebra by definition ------------------------------------

template <typename T>
T laplace_det(const std::vector<std::vector<T>> &m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  if (n == 1) return m[0][0];
  T acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    T term = m[0][c] * laplace_det(minor);
    acc += (c % 2 == 0) ? term : T(-term);
  }
  return acc;
}

inline std::vector<std::vector<mpz_class>> to_rows(const IntMatrix &A) {
  std::vector<std::vector<mpz_class>> rows(A.rows(), std::vector<mpz_class>(A.cols()));
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < A.cols(); ++c) rows[r][c] = A(r, c);
  return rows;
}

inline mpz_class det(const IntMatrix &A) { return laplace_det(to_rows(A)); }

// gcd of all k x k minors.
inline mpz_class minor_gcd(const IntMatrix &A, std::size_t k) {
  auto rows = to_rows(A);
  mpz_class g = 0;
  std::vector<std::size_t> rs(A.rows()), cs(A.cols());
  std::iota(rs.begin(), rs.end(), 0);
  std::iota(cs.begin(), cs.end(), 0);
  std::function<void(std::size_t, std::vector<std::size_t> &, std::size_t, std::vector<std::size_t> &,
                     std::vector<std::vector<std::size_t>> &)>
      choose = [&](std::size_t from, std::vector<std::size_t> &cur, std::size_t n, std::vector<std::size_t> &,
                   std::vector<std::vector<std::size_t>> &out) {
        if (cur.size() == k) {
          out.push_back(cur);
          return;
        }
        for (std::size_t i = from; i < n; ++i) {
          cur.push_back(i);
          std::vector<std::size_t> dummy;
          choose(i + 1, cur, n, dummy, out);
          cur.pop_back();
        }
      };
  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  std::vector<std::size_t> cur, dummy;
  choose(0, cur, A.rows(), dummy, row_sets);
  choose(0, cur, A.cols(), dummy, col_sets);
  for (const auto &R : row_sets)
    for (const auto &C : col_sets) {
      std::vector<std::vector<mpz_class>> m;
      for (auto r : R) {
        std::vector<mpz_class> row;
        for (auto c : C) row.push_back(rows[r][c]);
        m.push_back(std::move(row));
      }
      mpz_class d = laplace_det(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

inline std::size_t rational_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank_of(const std::vector<LatticeVector> &vs) {
  std::vector<std::vector<mpq_class>> m;
  for (const auto &v : vs) {
    std::vector<mpq_class> row;
    for (auto x : v) row.emplace_back(static_cast<long>(x));
    m.push_back(std::move(row));
  }
  return rational_rank(std::move(m));
}

// ---- brute-force searches --------------------------------------------------

// Every nonzero x in [-bound, bound]^n with A x = 0.
inline std::vector<LatticeVector> small_kernel_vectors(const IntMatrix &A, int bound) {
  const std::size_t n = A.cols();
  std::vector<LatticeVector> out;
  LatticeVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bound;
  while (true) {
    bool zero = x.is_zero();
    bool ok = !zero;
    for (std::size_t r = 0; r < A.rows() && ok; ++r) {
      mpz_class acc = 0;
      for (std::size_t c = 0; c < n; ++c) acc += A(r, c) * static_cast<long>(x[c]);
      ok = acc == 0;
    }
    if (ok) out.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == bound) x[i++] = -bound;
    if (i == n) break;
    ++x[i];
  }
  return out;
}

// Relations sum a_i p_i = 0, sum a_i = 0 with entries in [-bound, bound].
inline std::vector<LatticeVector> small_relations(const std::vector<LatticeVector> &points, int bound) {
  const std::size_t r = points.front().size();
  IntMatrix A(r + 1, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < r; ++i) A(i, j) = static_cast<long>(points[j][i]);
    A(r, j) = 1;
  }
  return small_kernel_vectors(A, bound);
}

// The affine map sending points[i] to points[sigma[i]], solved by Cramer's
// rule on an affine frame; nullopt if it is not an integral unimodular map
// that agrees on every point.
struct AffineMap {
  std::vector<std::vector<mpq_class>> L;
  std::vector<mpq_class> t;
};

inline std::optional<AffineMap> affine_map_for(const std::vector<LatticeVector> &points,
                                               const std::vector<std::size_t> &sigma) {
  const std::size_t r = points.front().size();
  // Frame: greedily pick points whose differences to points[0] are independent.
  std::vector<std::size_t> frame;
  std::vector<LatticeVector> diffs;
  for (std::size_t j = 1; j < points.size() && diffs.size() < r; ++j) {
    diffs.push_back(points[j] - points[0]);
    if (rank_of(diffs) == diffs.size())
      frame.push_back(j);
    else
      diffs.pop_back();
  }
  if (diffs.size() < r) return std::nullopt;
  // D x = y column system per output coordinate: row i of L solves L_i D = D'_i,
  // i.e. D^T L_i^T = D'_i^T, by Cramer's rule.
  std::vector<std::vector<mpq_class>> DT(r, std::vector<mpq_class>(r));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t c = 0; c < r; ++c) DT[k][c] = static_cast<long>(diffs[k][c]);
  const mpq_class d = laplace_det(DT);
  AffineMap map{std::vector<std::vector<mpq_class>>(r, std::vector<mpq_class>(r)), std::vector<mpq_class>(r)};
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<mpq_class> rhs(r);
    for (std::size_t k = 0; k < r; ++k)
      rhs[k] = static_cast<long>(points[sigma[frame[k]]][i] - points[sigma[0]][i]);
    for (std::size_t c = 0; c < r; ++c) {
      auto M = DT;
      for (std::size_t k = 0; k < r; ++k) M[k][c] = rhs[k];
      map.L[i][c] = laplace_det(M) / d;
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    mpq_class acc = static_cast<long>(points[sigma[0]][i]);
    for (std::size_t c = 0; c < r; ++c) acc -= map.L[i][c] * static_cast<long>(points[0][c]);
    map.t[i] = acc;
  }
  for (const auto &row : map.L)
    for (const auto &x : row)
      if (x.get_den() != 1) return std::nullopt;
  for (const auto &x : map.t)
    if (x.get_den() != 1) return std::nullopt;
  mpq_class dl = laplace_det(map.L);
  if (dl != 1 && dl != -1) return std::nullopt;
  for (std::size_t j = 0; j < points.size(); ++j)
    for (std::size_t i = 0; i < r; ++i) {
      mpq_class acc = map.t[i];
      for (std::size_t c = 0; c < r; ++c) acc += map.L[i][c] * static_cast<long>(points[j][c]);
      if (acc != static_cast<long>(points[sigma[j]][i])) return std::nullopt;
    }
  return map;
}

inline GaussianRational power(const GaussianRational &z, std::int64_t e) {
  GaussianRational acc(1);
  const GaussianRational base = e < 0 ? GaussianRational(1) / z : z;
  for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) acc *= base;
  return acc;
}

// Direct check of prod alpha_m^{a_m} == prod alpha_{sigma(m)}^{a_m}.
inline bool relation_holds(const std::vector<GaussianRational> &alpha, const std::vector<std::size_t> &sigma,
                           const LatticeVector &a) {
  GaussianRational lhs(1), rhs(1);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    lhs *= power(alpha[i], a[i]);
    rhs *= power(alpha[sigma[i]], a[i]);
  }
  return lhs == rhs;
}

// |GAff(M, h)| by trying all |supp h|! permutations.
inline std::size_t gaff_order(const LaurentPoly &h, int relation_bound = 3) {
  std::vector<LatticeVector> points;
  std::vector<GaussianRational> alpha;
  for (const auto &[m, c] : h.terms()) {
    points.push_back(m);
    alpha.push_back(c);
  }
  const auto relations = small_relations(points, relation_bound);
  std::vector<std::size_t> sigma(points.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::size_t count = 0;
  do {
    if (!affine_map_for(points, sigma)) continue;
    bool ok = true;
    for (const auto &a : relations)
      if (!(ok = relation_holds(alpha, sigma, a))) break;
    if (ok) ++count;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return count;
}

// p evaluated at x, straight from the term list.
inline GaussianRational evaluate(const LaurentPoly &p, const std::vector<GaussianRational> &x) {
  GaussianRational acc;
  for (const auto &[m, c] : p.terms()) {
    GaussianRational term = c;
    for (std::size_t i = 0; i < x.size(); ++i) term *= power(x[i], m[i]);
    acc += term;
  }
  return acc;
}

// psi(x)_i = lambda_i * prod_k x_k^{A_ik}
inline std::vector<GaussianRational> map_point(const IntMatrix &A, const std::vector<GaussianRational> &lambda,
                                               const std::vector<GaussianRational> &x) {
  std::vector<GaussianRational> y;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    GaussianRational v = lambda[i];
    for (std::size_t k = 0; k < A.cols(); ++k) v *= power(x[k], A(i, k).get_si());
    y.push_back(v);
  }
  return y;
}

// ---- random instances ------------------------------------------------------

using Rng = std::mt19937_64;

inline long uniform(Rng &rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Nonzero Gaussian rational with numerators and denominators bounded by `bound`.
inline GaussianRational random_gaussian(Rng &rng, long bound = 5) {
  while (true) {
    mpq_class re(uniform(rng, -bound, bound), uniform(rng, 1, bound));
    mpq_class im(uniform(rng, -bound, bound), uniform(rng, 1, bound));
    if (uniform(rng, 0, 2) == 0) im = 0;
    GaussianRational z(re, im);
    if (!z.is_zero()) return z;
  }
}

inline IntMatrix random_unimodular(Rng &rng, std::size_t n, int steps = 12) {
  IntMatrix U = IntMatrix::identity(n);
  if (n < 2) {
    if (uniform(rng, 0, 1)) U.negate_row(0);
    return U;
  }
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    switch (uniform(rng, 0, 3)) {
    case 0: U.swap_rows(i, j); break;
    case 1: U.negate_row(i); break;
    default: U.add_row_multiple(i, j, mpz_class(uniform(rng, -2, 2))); break;
    }
  }
  return U;
}

inline IntMatrix random_matrix(Rng &rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix A(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) A(r, c) = uniform(rng, -bound, bound);
  return A;
}

// Support of <= max_points points in rank 1 or 2 whose differences span full
// rank, with coefficients that are sometimes chosen to admit symmetries.
inline LaurentPoly random_full_rank_poly(Rng &rng, std::size_t max_points = 5) {
  while (true) {
    const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 2));
    const long box = r == 1 ? 3 : 2;
    const std::size_t n = static_cast<std::size_t>(uniform(rng, static_cast<long>(r) + 1, static_cast<long>(max_points)));
    std::set<LatticeVector> pts;
    while (pts.size() < n) {
      LatticeVector p(r);
      for (std::size_t i = 0; i < r; ++i) p[i] = uniform(rng, -box, box);
      pts.insert(p);
    }
    std::vector<LatticeVector> v(pts.begin(), pts.end());
    std::vector<LatticeVector> diffs;
    for (std::size_t i = 1; i < v.size(); ++i) diffs.push_back(v[i] - v[0]);
    if (rank_of(diffs) < r) continue;

    const long mode = uniform(rng, 0, 2);
    const GaussianRational palette[] = {GaussianRational(1), GaussianRational(-1), GaussianRational(2),
                                        GaussianRational::imaginary_unit()};
    LaurentPoly p(r);
    for (const auto &m : v) {
      GaussianRational c = mode == 0 ? GaussianRational(1)
                           : mode == 1 ? palette[uniform(rng, 0, 3)]
                                       : random_gaussian(rng);
      p.add_term(m, c);
    }
    return p;
  }
}

} // namespace oracle
