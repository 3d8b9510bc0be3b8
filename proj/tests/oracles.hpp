#pragma once

// Independent reference implementations used only by the tests.

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "rigid/bigint.hpp"
#include "rigid/linalg.hpp"
#include "rigid/word.hpp"

namespace oracle {

/// A permutation of {0..k-1}; composition applies the left factor first.
using Perm = std::vector<int>;

inline Perm perm_identity(int k) {
  Perm p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[static_cast<std::size_t>(a[i])];
  return c;
}

inline Perm invert(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return c;
}

inline Perm eval(const rigid::Word& w, const std::vector<Perm>& images) {
  Perm acc = perm_identity(static_cast<int>(images.front().size()));
  for (int l : w.letters()) {
    const auto& g = images[static_cast<std::size_t>(std::abs(l) - 1)];
    acc = compose(acc, l > 0 ? g : invert(g));
  }
  return acc;
}

/// A finite solvable group given by a generating set, with its derived length.
struct FiniteGroup {
  const char* name;
  std::vector<Perm> gens;
  int derived_length;
};

/// S3 (derived length 2), AGL(1,5) (2), S4 (3).
inline std::vector<FiniteGroup> solvable_groups() {
  return {
      {"S3", {{1, 0, 2}, {1, 2, 0}}, 2},
      // x -> x + 1 and x -> 2x on Z/5
      {"AGL(1,5)", {{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}}, 2},
      {"S4", {{1, 0, 2, 3}, {1, 2, 3, 0}}, 3},
  };
}

/// A random element of the group generated by `gens`: a random word of length 12.
inline Perm random_element(std::mt19937_64& rng, const FiniteGroup& g) {
  std::uniform_int_distribution<std::size_t> pick(0, g.gens.size() - 1);
  Perm acc = perm_identity(static_cast<int>(g.gens.front().size()));
  for (int i = 0; i < 12; ++i) acc = compose(acc, g.gens[pick(rng)]);
  return acc;
}

/// Fox derivatives d_j(w) of a free-group word, with values in Z[Z^m]
/// (exponent vector -> coefficient), using d(uv) = d(u) v + d(v).
using AbelianRing = std::map<std::vector<std::int64_t>, std::int64_t>;

inline std::vector<AbelianRing> fox(const rigid::Word& w, int m) {
  std::vector<AbelianRing> d(static_cast<std::size_t>(m));
  // suffix[i] = exponent sum of letters i..end
  const auto& ls = w.letters();
  std::vector<std::vector<std::int64_t>> suffix(ls.size() + 1,
                                                std::vector<std::int64_t>(static_cast<std::size_t>(m), 0));
  for (std::size_t i = ls.size(); i-- > 0;) {
    suffix[i] = suffix[i + 1];
    suffix[i][static_cast<std::size_t>(std::abs(ls[i]) - 1)] += ls[i] > 0 ? 1 : -1;
  }
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const auto j = static_cast<std::size_t>(std::abs(ls[i]) - 1);
    // d(x) = t at 1; d(x^-1) = -t at x^-1; then right-multiplied by the suffix.
    auto at = suffix[i + 1];
    std::int64_t c = 1;
    if (ls[i] < 0) {
      at[j] -= 1;
      c = -1;
    }
    auto& slot = d[j][at];
    slot += c;
    if (slot == 0) d[j].erase(at);
  }
  return d;
}

/// Determinant by Laplace expansion along the first row (nonempty minors only).
template <class T, class Get>
T laplace_det(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols, Get get,
              const T& zero) {
  if (rows.size() == 1) return get(rows[0], cols[0]);
  T total = zero;
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const T entry = get(rows[0], cols[k]);
    if (entry == zero) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c != k) sub_cols.push_back(cols[c]);
    }
    const T minor = laplace_det(sub_rows, sub_cols, get, zero);
    if (k % 2 == 0) {
      total = total + entry * minor;
    } else {
      total = total - entry * minor;
    }
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

/// Largest k such that some k x k minor is nonzero.
template <class T, class Get>
std::size_t minor_rank(std::size_t rows, std::size_t cols, Get get, const T& zero) {
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(rows, k, rs);
    subsets(cols, k, cs);
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        if (!(laplace_det(r, c, get, zero) == zero)) return k;
      }
    }
  }
  return 0;
}

inline std::size_t minor_rank(const rigid::IntMatrix& m) {
  return minor_rank(m.rows(), m.cols(), [&](std::size_t i, std::size_t j) { return m(i, j); },
                    rigid::BigInt(0));
}

inline std::size_t minor_rank(const rigid::LaurentMatrix& m) {
  const std::size_t vars = m.rows() && m.cols() ? m(0, 0).variables() : 0;
  return minor_rank(m.rows(), m.cols(), [&](std::size_t i, std::size_t j) { return m(i, j); },
                    rigid::LaurentPoly(vars));
}

/// Product of the nonzero diagonal of a Smith form equals the gcd of the
/// largest nonzero minors; d_1 ... d_k = gcd of all k x k minors.
inline rigid::BigInt minor_gcd(const rigid::IntMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  subsets(m.rows(), k, rs);
  subsets(m.cols(), k, cs);
  rigid::BigInt g = 0;
  for (const auto& r : rs) {
    for (const auto& c : cs) {
      rigid::BigInt d = laplace_det(r, c, [&](std::size_t i, std::size_t j) { return m(i, j); },
                                    rigid::BigInt(0));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  }
  return g;
}

}  // namespace oracle
