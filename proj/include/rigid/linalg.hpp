#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rigid/bigint.hpp"
#include "rigid/error.hpp"
#include "rigid/free_solvable.hpp"
#include "rigid/word.hpp"

namespace rigid {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) {
        throw InvalidArgument("ragged matrix rows");
      }
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

struct SmithForm {
  std::size_t rank = 0;
  /// Nonzero diagonal entries d_1 | d_2 | ... of the Smith normal form.
  std::vector<BigInt> invariant_factors;
};

/// U * A * V = D with U, V unimodular and D in Smith normal form.
struct SmithDecomposition {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
};

SmithDecomposition smith_decompose(const IntMatrix& a);
SmithForm smith_rank(const IntMatrix& a);

/// A basis of the row lattice of `a` (the nonzero rows of an echelon form
/// reached by unimodular row operations).
std::vector<std::vector<BigInt>> lattice_basis(const IntMatrix& a);

/// A Laurent polynomial in a fixed number of commuting variables with
/// rational coefficients. Terms are kept in lexicographic exponent order.
class LaurentPoly {
 public:
  using Exponents = std::vector<std::int64_t>;
  using TermMap = std::map<Exponents, Rational>;

  explicit LaurentPoly(std::size_t variables = 0) : variables_(variables) {}

  static LaurentPoly constant(std::size_t variables, const Rational& c);
  static LaurentPoly monomial(Exponents exps, const Rational& c = 1);
  static LaurentPoly variable(std::size_t variables, std::size_t index,
                              std::int64_t power = 1);

  std::size_t variables() const { return variables_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exps, const Rational& c);

  /// Multiplication by the monomial t^exps.
  LaurentPoly shifted(const Exponents& exps) const;
  /// Componentwise minimum exponent over the support (zeros if empty).
  Exponents min_exponents() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string text() const;

 private:
  std::size_t variables_;
  TermMap terms_;
};

/// q with a = q * b; throws if b does not divide a exactly.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

using LaurentMatrix = Matrix<LaurentPoly>;

/// Rank over the fraction field of the Laurent ring, by fraction-free
/// (Bareiss) elimination after shifting each row to a polynomial row.
std::size_t laurent_rank(const LaurentMatrix& m);

/// A row of the free right ZB-module with basis t_1..t_m, for B = S(k,1).
using ModuleRow = std::vector<SolvableRing>;

/// The matrix over Z[sub] of the rows, after splitting every support element
/// b of B as rep * s^c with rep the smallest-key element of its coset b*sub
/// that occurs. One column per (coset, module coordinate).
LaurentMatrix coset_matrix(std::span<const ModuleRow> rows,
                           std::span<const std::vector<std::int64_t>> sub_basis);

/// Rank of the Z[sub]-module spanned by `rows`, where `sub` is the subgroup of
/// the free abelian B generated by the independent `sub_basis`.
std::size_t coset_rank(std::span<const ModuleRow> rows,
                       std::span<const std::vector<std::int64_t>> sub_basis);

/// Module ranks of the principal-series factors.
struct PrincipalDimension {
  std::vector<int> ranks;

  std::size_t size() const { return ranks.size(); }
  std::string text() const;
  friend bool operator==(const PrincipalDimension&, const PrincipalDimension&) =
      default;
};

/// r(A) for A = <generators> <= S(m,2). Abelian A gives the 1-tuple (r_1).
PrincipalDimension principal_dimension_metabelian(std::span<const Word> generators,
                                                  int m);

enum class GroupFamily { FreeSolvable, Wreath };

/// r(S(m,n)) = (m, m-1, ..., m-1); r(W(m,n)) = (m, ..., m) with n+1 entries.
PrincipalDimension closed_form_dimension(GroupFamily family, int m, int n);

/// Left-lexicographic comparison of tuples of equal length.
std::strong_ordering lex_compare(const PrincipalDimension& a,
                                 const PrincipalDimension& b);

}  // namespace rigid
