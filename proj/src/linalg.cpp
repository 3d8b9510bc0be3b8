#include "rigid/linalg.hpp"

#include <algorithm>
#include <utility>

namespace rigid {

namespace {

BigInt from_int64(std::int64_t x) { return BigInt(static_cast<long>(x)); }

std::int64_t to_int64(const BigInt& x) {
  if (!x.fits_slong_p()) throw Error("exponent overflow");
  return static_cast<std::int64_t>(x.get_si());
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix shape mismatch");
  IntMatrix c(a.rows(), b.cols(), BigInt(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

SmithDecomposition smith_decompose(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  SmithDecomposition s{identity_matrix(rows), a, identity_matrix(cols)};
  IntMatrix& d = s.diagonal;

  // row_i -= q * row_j, mirrored on the left transform.
  auto row_op = [&](std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t k = 0; k < cols; ++k) d(i, k) -= q * d(j, k);
    for (std::size_t k = 0; k < rows; ++k) s.left(i, k) -= q * s.left(j, k);
  };
  auto col_op = [&](std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t k = 0; k < rows; ++k) d(k, i) -= q * d(k, j);
    for (std::size_t k = 0; k < cols; ++k) s.right(k, i) -= q * s.right(k, j);
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    d.swap_rows(i, j);
    s.left.swap_rows(i, j);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    d.swap_cols(i, j);
    s.right.swap_cols(i, j);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (d(i, j) != 0 && (pi == rows || abs(d(i, j)) < abs(d(pi, pj)))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) != 0) row_op(i, t, BigInt(d(i, t) / d(t, t)));
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) != 0) col_op(j, t, BigInt(d(t, j) / d(t, t)));
      }
      // Remainders smaller than the pivot: move the smallest into place.
      std::size_t best_i = t, best_j = t;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) != 0 && abs(d(i, t)) < abs(d(best_i, best_j))) {
          best_i = i;
          best_j = t;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) != 0 && abs(d(t, j)) < abs(d(best_i, best_j))) {
          best_i = t;
          best_j = j;
        }
      }
      if (best_i != t) {
        swap_rows(t, best_i);
        continue;
      }
      if (best_j != t) {
        swap_cols(t, best_j);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            row_op(t, i, BigInt(-1));
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t k = 0; k < cols; ++k) d(t, k) = -d(t, k);
      for (std::size_t k = 0; k < rows; ++k) s.left(t, k) = -s.left(t, k);
    }
  }
  return s;
}

SmithForm smith_rank(const IntMatrix& a) {
  const auto s = smith_decompose(a);
  SmithForm out;
  for (std::size_t t = 0; t < std::min(a.rows(), a.cols()); ++t) {
    if (s.diagonal(t, t) == 0) break;
    out.invariant_factors.push_back(s.diagonal(t, t));
  }
  out.rank = out.invariant_factors.size();
  return out;
}

std::vector<std::vector<BigInt>> lattice_basis(const IntMatrix& a) {
  IntMatrix m = a;
  std::size_t pivot = 0;
  for (std::size_t c = 0; c < m.cols() && pivot < m.rows(); ++c) {
    for (;;) {
      std::size_t best = m.rows();
      for (std::size_t i = pivot; i < m.rows(); ++i) {
        if (m(i, c) != 0 && (best == m.rows() || abs(m(i, c)) < abs(m(best, c)))) {
          best = i;
        }
      }
      if (best == m.rows()) break;
      m.swap_rows(pivot, best);
      bool clean = true;
      for (std::size_t i = pivot + 1; i < m.rows(); ++i) {
        if (m(i, c) == 0) continue;
        BigInt q = m(i, c) / m(pivot, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= q * m(pivot, j);
        if (m(i, c) != 0) clean = false;
      }
      if (clean) {
        ++pivot;
        break;
      }
    }
  }
  std::vector<std::vector<BigInt>> out;
  for (std::size_t i = 0; i < pivot; ++i) {
    std::vector<BigInt> row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    out.push_back(std::move(row));
  }
  return out;
}

// --- Laurent polynomials ---------------------------------------------------

LaurentPoly LaurentPoly::constant(std::size_t variables, const Rational& c) {
  LaurentPoly p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponents exps, const Rational& c) {
  LaurentPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t variables, std::size_t index,
                                  std::int64_t power) {
  if (index >= variables) throw InvalidArgument("variable index out of range");
  Exponents e(variables, 0);
  e[index] = power;
  return monomial(std::move(e));
}

void LaurentPoly::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != variables_) throw AmbientMismatch();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(const Exponents& exps) const {
  if (exps.size() != variables_) throw AmbientMismatch();
  LaurentPoly p(variables_);
  for (const auto& [e, c] : terms_) {
    Exponents moved = e;
    for (std::size_t i = 0; i < variables_; ++i) moved[i] = checked_add(moved[i], exps[i]);
    p.terms_.emplace(std::move(moved), c);
  }
  return p;
}

LaurentPoly::Exponents LaurentPoly::min_exponents() const {
  Exponents out(variables_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < variables_; ++i) {
      out[i] = first ? e[i] : std::min(out[i], e[i]);
    }
    first = false;
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.variables_ != variables_) throw AmbientMismatch();
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.variables_ != variables_) throw AmbientMismatch();
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.variables_ != b.variables_) throw AmbientMismatch();
  LaurentPoly p(a.variables_);
  LaurentPoly::Exponents e(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ea[i], eb[i]);
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

std::string LaurentPoly::text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->second.get_str();
    for (std::size_t i = 0; i < variables_; ++i) {
      if (it->first[i] == 0) continue;
      out += "*s" + std::to_string(i + 1);
      if (it->first[i] != 1) out += "^" + std::to_string(it->first[i]);
    }
  }
  return out;
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.variables() != b.variables()) throw AmbientMismatch();
  if (b.is_zero()) throw InvalidArgument("division by zero polynomial");
  LaurentPoly q(a.variables());
  if (a.is_zero()) return q;
  const auto& [lead_b, lead_c] = *b.terms().rbegin();
  LaurentPoly::Exponents floor(a.variables());
  const auto& low_a = a.terms().begin()->first;
  const auto& low_b = b.terms().begin()->first;
  for (std::size_t i = 0; i < floor.size(); ++i) floor[i] = low_a[i] - low_b[i];

  LaurentPoly r = a;
  std::size_t steps = 0;
  const std::size_t max_steps = 64 * (a.terms().size() + 1) * (b.terms().size() + 1);
  while (!r.is_zero()) {
    const auto& [lead_r, coeff_r] = *r.terms().rbegin();
    LaurentPoly::Exponents e(a.variables());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = lead_r[i] - lead_b[i];
    if (e < floor || ++steps > max_steps) throw Error("inexact polynomial division");
    auto t = LaurentPoly::monomial(e, coeff_r / lead_c);
    q += t;
    r -= t * b;
  }
  return q;
}

std::size_t laurent_rank(const LaurentMatrix& input) {
  if (input.rows() == 0 || input.cols() == 0) return 0;
  const std::size_t vars = input(0, 0).variables();
  LaurentMatrix m = input;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    LaurentPoly::Exponents low(vars, 0);
    bool first = true;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).variables() != vars) throw AmbientMismatch();
      if (m(i, j).is_zero()) continue;
      auto e = m(i, j).min_exponents();
      for (std::size_t k = 0; k < vars; ++k) low[k] = first ? e[k] : std::min(low[k], e[k]);
      first = false;
    }
    for (auto& x : low) x = checked_neg(x);
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j).shifted(low);
  }

  LaurentPoly prev = LaurentPoly::constant(vars, 1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, rank);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = exact_divide(m(rank, c) * m(i, j) - m(i, c) * m(rank, j), prev);
      }
      m(i, c) = LaurentPoly(vars);
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

// --- Coset decomposition -----------------------------------------------------

LaurentMatrix coset_matrix(std::span<const ModuleRow> rows,
                           std::span<const std::vector<std::int64_t>> sub_basis) {
  if (rows.empty()) return LaurentMatrix();
  const std::size_t width = rows[0].size();
  const SolvableAmbient ambient = width > 0 ? rows[0][0].ambient() : SolvableAmbient{1, 1};
  if (ambient.cls != 1) throw InvalidArgument("coset_rank needs a free abelian base");
  const std::size_t k = static_cast<std::size_t>(ambient.rank);
  const std::size_t r = sub_basis.size();
  for (const auto& row : rows) {
    if (row.size() != width) throw InvalidArgument("rows of different length");
    for (const auto& x : row) {
      if (!(x.ambient() == ambient)) throw AmbientMismatch();
    }
  }

  IntMatrix basis(k, r, BigInt(0));
  for (std::size_t j = 0; j < r; ++j) {
    if (sub_basis[j].size() != k) throw AmbientMismatch();
    for (std::size_t i = 0; i < k; ++i) basis(i, j) = from_int64(sub_basis[j][i]);
  }
  const auto snf = smith_decompose(basis);
  for (std::size_t j = 0; j < r; ++j) {
    if (snf.diagonal(j, j) == 0) throw InvalidArgument("dependent sub-basis");
  }

  auto transform = [&](const std::vector<std::int64_t>& v) {
    std::vector<BigInt> w(k, BigInt(0));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) w[i] += snf.left(i, j) * from_int64(v[j]);
    }
    return w;
  };
  auto coset_label = [&](const std::vector<BigInt>& w) {
    std::string label;
    for (std::size_t i = 0; i < k; ++i) {
      BigInt x = w[i];
      if (i < r) {
        x = w[i] % snf.diagonal(i, i);
        if (x < 0) x += snf.diagonal(i, i);
      }
      label += x.get_str() + ",";
    }
    return label;
  };

  struct Coset {
    std::string rep_key;
    std::vector<std::int64_t> rep;
  };
  std::map<std::string, Coset> cosets;
  for (const auto& row : rows) {
    for (const auto& x : row) {
      for (const auto& [key, term] : x.terms()) {
        const auto& v = term.element.exponents();
        auto [it, inserted] = cosets.try_emplace(coset_label(transform(v)), Coset{key, v});
        if (!inserted && key < it->second.rep_key) it->second = Coset{key, v};
      }
    }
  }
  std::vector<std::pair<std::string, std::string>> order;  // (rep key, label)
  for (const auto& [label, c] : cosets) order.emplace_back(c.rep_key, label);
  std::sort(order.begin(), order.end());
  std::map<std::string, std::size_t> column_base;
  for (std::size_t i = 0; i < order.size(); ++i) column_base[order[i].second] = i * width;

  LaurentMatrix out(rows.size(), order.size() * width, LaurentPoly(r));
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    for (std::size_t coord = 0; coord < width; ++coord) {
      for (const auto& [key, term] : rows[ri][coord].terms()) {
        const auto& v = term.element.exponents();
        const auto label = coset_label(transform(v));
        const auto& rep = cosets.at(label).rep;
        std::vector<std::int64_t> diff(k);
        for (std::size_t i = 0; i < k; ++i) diff[i] = checked_add(v[i], checked_neg(rep[i]));
        const auto w = transform(diff);
        LaurentPoly::Exponents exps(r, 0);
        for (std::size_t j = 0; j < r; ++j) {
          BigInt total = 0;
          for (std::size_t i = 0; i < r; ++i) {
            total += snf.right(j, i) * (w[i] / snf.diagonal(i, i));
          }
          exps[j] = to_int64(total);
        }
        out(ri, column_base.at(label) + coord)
            .add_term(exps, Rational(term.coeff));
      }
    }
  }
  return out;
}

std::size_t coset_rank(std::span<const ModuleRow> rows,
                       std::span<const std::vector<std::int64_t>> sub_basis) {
  return laurent_rank(coset_matrix(rows, sub_basis));
}

// --- Principal dimension -------------------------------------------------------

std::string PrincipalDimension::text() const {
  std::string out = "(";
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(ranks[i]);
  }
  return out + ")";
}

PrincipalDimension principal_dimension_metabelian(std::span<const Word> generators,
                                                  int m) {
  if (generators.empty()) throw InvalidArgument("empty generator list");
  IntMatrix exps(generators.size(), static_cast<std::size_t>(m), BigInt(0));
  std::vector<SolvableElement> elements;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto v = normalize(m, 1, generators[i]).exponents();
    for (int j = 0; j < m; ++j) exps(i, j) = from_int64(v[j]);
    elements.push_back(normalize(m, 2, generators[i]));
  }
  const int r1 = static_cast<int>(smith_rank(exps).rank);
  if (r1 == 0) throw InvalidArgument("trivial image");

  bool abelian = true;
  for (std::size_t i = 0; i < elements.size() && abelian; ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (!is_trivial(commutator(elements[i], elements[j]))) {
        abelian = false;
        break;
      }
    }
  }
  if (abelian) return PrincipalDimension{{r1}};

  std::vector<std::vector<std::int64_t>> basis;
  for (const auto& row : lattice_basis(exps)) {
    std::vector<std::int64_t> b;
    for (const auto& x : row) b.push_back(to_int64(x));
    basis.push_back(std::move(b));
  }
  const auto images = rigid::generators({m, 1});
  const auto module = restricted_module_generators(
      generators, std::span<const SolvableElement>(images));
  std::vector<ModuleRow> rows;
  for (const auto& g : module) rows.push_back(g.row);
  const int rank_d = static_cast<int>(coset_rank(rows, basis));
  return PrincipalDimension{{r1, rank_d - 1}};
}

PrincipalDimension closed_form_dimension(GroupFamily family, int m, int n) {
  if (m < 1) throw InvalidArgument("rank must be positive");
  if (family == GroupFamily::FreeSolvable) {
    if (n < 1) throw InvalidArgument("class must be at least 1");
    // S(1,n) = Z for every n.
    if (m == 1) return PrincipalDimension{{1}};
    PrincipalDimension d{std::vector<int>(static_cast<std::size_t>(n), m - 1)};
    d.ranks[0] = m;
    return d;
  }
  if (n < 0) throw InvalidArgument("level must be non-negative");
  return PrincipalDimension{std::vector<int>(static_cast<std::size_t>(n) + 1, m)};
}

std::strong_ordering lex_compare(const PrincipalDimension& a,
                                 const PrincipalDimension& b) {
  if (a.size() != b.size()) throw InvalidArgument("length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a.ranks[i] <=> b.ranks[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace rigid
