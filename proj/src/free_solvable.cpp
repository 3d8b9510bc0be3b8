#include "rigid/free_solvable.hpp"

#include <climits>
#include <map>
#include <set>
#include <utility>

#include "rigid/error.hpp"

namespace rigid {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("exponent overflow");
  return r;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == INT64_MIN) throw Error("exponent overflow");
  return -a;
}

namespace {

std::string vector_key(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  out += ')';
  return out;
}

std::string matrix_key(const SolvableElement::Matrix& p) {
  std::string out = "[";
  out += p.top.key();
  for (const auto& c : p.coords) {
    out += '|';
    out += c.key();
  }
  out += ']';
  return out;
}

void check_rank(int m) {
  if (m < 1) throw InvalidArgument("rank must be positive");
}

}  // namespace

SolvableElement SolvableElement::identity(const Ambient& ambient) {
  check_rank(ambient.rank);
  if (ambient.cls < 0) throw InvalidArgument("class must be non-negative");
  if (ambient.cls == 1) {
    return from_exponents(ambient.rank,
                          std::vector<std::int64_t>(ambient.rank, 0));
  }
  if (ambient.cls >= 2) {
    return from_matrix(ambient.rank, ambient.cls,
                       Matrix::identity({ambient.rank, ambient.cls - 1},
                                        static_cast<std::size_t>(ambient.rank)));
  }
  auto node = std::make_shared<Node>();
  node->rank = ambient.rank;
  node->cls = 0;
  node->key = "1";
  node->trivial = true;
  return SolvableElement(std::move(node));
}

SolvableElement SolvableElement::generator(const Ambient& ambient, int index) {
  if (index < 1 || index > ambient.rank) {
    throw InvalidArgument("bad generator index " + std::to_string(index));
  }
  return normalize(ambient.rank, ambient.cls, Word::generator(index));
}

SolvableElement SolvableElement::from_exponents(int rank,
                                                std::vector<std::int64_t> exps) {
  check_rank(rank);
  if (exps.size() != static_cast<std::size_t>(rank)) {
    throw InvalidArgument("exponent vector length must equal the rank");
  }
  auto node = std::make_shared<Node>();
  node->rank = rank;
  node->cls = 1;
  node->key = vector_key(exps);
  node->trivial = true;
  for (auto x : exps) node->trivial = node->trivial && x == 0;
  node->body = std::move(exps);
  return SolvableElement(std::move(node));
}

SolvableElement SolvableElement::from_matrix(int rank, int cls, Matrix matrix) {
  check_rank(rank);
  if (cls < 2) throw InvalidArgument("matrix form needs class >= 2");
  const Ambient base{rank, cls - 1};
  if (!(matrix.top.ambient() == base) ||
      matrix.coords.size() != static_cast<std::size_t>(rank)) {
    throw AmbientMismatch();
  }
  for (const auto& c : matrix.coords) {
    if (!(c.ambient() == base)) throw AmbientMismatch();
  }
  auto node = std::make_shared<Node>();
  node->rank = rank;
  node->cls = cls;
  node->key = matrix_key(matrix);
  node->trivial = matrix.is_identity();
  node->body = std::move(matrix);
  return SolvableElement(std::move(node));
}

int SolvableElement::rank() const { return node_->rank; }
int SolvableElement::cls() const { return node_->cls; }
bool SolvableElement::is_identity() const { return node_->trivial; }
const std::string& SolvableElement::key() const { return node_->key; }

const std::vector<std::int64_t>& SolvableElement::exponents() const {
  if (node_->cls != 1) throw InvalidArgument("exponents() needs class 1");
  return std::get<std::vector<std::int64_t>>(node_->body);
}

const SolvableElement::Matrix& SolvableElement::matrix() const {
  if (node_->cls < 2) throw InvalidArgument("matrix() needs class >= 2");
  return std::get<Matrix>(node_->body);
}

std::string SolvableElement::text() const {
  switch (node_->cls) {
    case 0:
      return "1";
    case 1: {
      std::string out;
      const auto& v = exponents();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'b' + std::to_string(i + 1);
        if (v[i] != 1) out += '^' + std::to_string(v[i]);
      }
      return out.empty() ? "1" : out;
    }
    default: {
      const auto& p = matrix();
      std::string out = "M(" + p.top.text();
      for (const auto& c : p.coords) out += " | " + c.text();
      return out + ")";
    }
  }
}

SolvableElement SolvableElement::inverse() const {
  switch (node_->cls) {
    case 0:
      return *this;
    case 1: {
      auto v = exponents();
      for (auto& x : v) x = checked_neg(x);
      return from_exponents(rank(), std::move(v));
    }
    default:
      return from_matrix(rank(), cls(), split_inv(matrix()));
  }
}

SolvableElement operator*(const SolvableElement& a, const SolvableElement& b) {
  if (!(a.ambient() == b.ambient())) throw AmbientMismatch();
  if (b.is_identity()) return a;
  if (a.is_identity()) return b;
  switch (a.cls()) {
    case 0:
      return a;
    case 1: {
      auto v = a.exponents();
      const auto& w = b.exponents();
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(v[i], w[i]);
      return SolvableElement::from_exponents(a.rank(), std::move(v));
    }
    default:
      return SolvableElement::from_matrix(a.rank(), a.cls(),
                                          split_mul(a.matrix(), b.matrix()));
  }
}

std::vector<SolvableElement> generators(const SolvableAmbient& ambient) {
  check_rank(ambient.rank);
  std::vector<SolvableElement> out;
  out.reserve(ambient.rank);
  if (ambient.cls <= 1) {
    for (int i = 0; i < ambient.rank; ++i) {
      if (ambient.cls == 0) {
        out.push_back(SolvableElement::identity(ambient));
      } else {
        std::vector<std::int64_t> v(ambient.rank, 0);
        v[i] = 1;
        out.push_back(SolvableElement::from_exponents(ambient.rank, std::move(v)));
      }
    }
    return out;
  }
  const auto images = generators({ambient.rank, ambient.cls - 1});
  for (int i = 1; i <= ambient.rank; ++i) {
    out.push_back(SolvableElement::from_matrix(
        ambient.rank, ambient.cls,
        generator_matrix(std::span<const SolvableElement>(images), i)));
  }
  return out;
}

SolvableElement normalize(int m, int n, const Word& w) {
  check_rank(m);
  if (n < 0) throw InvalidArgument("class must be non-negative");
  if (w.max_generator() > m) {
    throw InvalidArgument("bad generator index " +
                          std::to_string(w.max_generator()) + " for rank " +
                          std::to_string(m));
  }
  if (n == 0) return SolvableElement::identity({m, 0});
  if (n == 1) {
    std::vector<std::int64_t> v(m, 0);
    for (int l : w.letters()) {
      auto& slot = v[std::abs(l) - 1];
      slot = checked_add(slot, l > 0 ? 1 : -1);
    }
    return SolvableElement::from_exponents(m, std::move(v));
  }
  const auto images = generators({m, n - 1});
  return SolvableElement::from_matrix(
      m, n, eval_word(w, std::span<const SolvableElement>(images)));
}

bool is_trivial(const SolvableElement& e) { return e.is_identity(); }

SolvableElement commutator(const SolvableElement& a, const SolvableElement& b) {
  return a.inverse() * b.inverse() * a * b;
}

SolvableElement conjugate(const SolvableElement& a, const SolvableElement& b) {
  return b.inverse() * a * b;
}

SolvableElement power(const SolvableElement& a, std::int64_t exponent) {
  SolvableElement base = exponent < 0 ? a.inverse() : a;
  if (exponent < 0) exponent = checked_neg(exponent);
  SolvableElement result = SolvableElement::identity(a.ambient());
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

SolvableElement project(const SolvableElement& e, int k) {
  if (k < 0 || k > e.cls()) {
    throw InvalidArgument("projection class " + std::to_string(k) +
                          " out of range 0.." + std::to_string(e.cls()));
  }
  SolvableElement cur = e;
  while (cur.cls() > k) {
    cur = cur.cls() >= 2 ? cur.matrix().top
                         : SolvableElement::identity({cur.rank(), 0});
  }
  return cur;
}

bool series_member_projection(const SolvableElement& e, int i) {
  if (i < 1 || i > e.cls() + 1) {
    throw InvalidArgument("series index " + std::to_string(i) +
                          " out of range 1.." + std::to_string(e.cls() + 1));
  }
  return project(e, i - 1).is_identity();
}

bool series_member_commutator(const SolvableElement& e, int i,
                              std::span<const SolvableElement> witnesses) {
  const int n = e.cls();
  if (i < 1 || i > n + 1) {
    throw InvalidArgument("series index " + std::to_string(i) +
                          " out of range 1.." + std::to_string(n + 1));
  }
  if (witnesses.size() != static_cast<std::size_t>(n - i + 1)) {
    throw InvalidArgument("invalid witness: expected " +
                          std::to_string(n - i + 1) + " witnesses");
  }
  for (std::size_t k = 0; k < witnesses.size(); ++k) {
    const int level = i + static_cast<int>(k);
    const auto& g = witnesses[k];
    if (!(g.ambient() == e.ambient()) || !series_member_projection(g, level) ||
        series_member_projection(g, level + 1)) {
      throw InvalidArgument("invalid witness for G_" + std::to_string(level));
    }
  }
  SolvableElement c = e;
  for (const auto& g : witnesses) c = commutator(c, g);
  return c.is_identity();
}

std::vector<SolvableElement> series_witnesses(int m, int n) {
  check_rank(m);
  std::vector<SolvableElement> out;
  if (n <= 0) return out;
  if (n >= 2 && m < 2) {
    throw InvalidArgument("S(1,n) is abelian; no witnesses beyond G_1");
  }
  const SolvableAmbient ambient{m, n};
  out.push_back(SolvableElement::generator(ambient, 1));
  const auto x2 = n >= 2 ? SolvableElement::generator(ambient, 2)
                         : SolvableElement::identity(ambient);
  for (int j = 2; j <= n; ++j) {
    const auto& prev = out.back();
    out.push_back(commutator(prev, conjugate(prev, x2)));
  }
  for (int j = 1; j <= n; ++j) {
    const auto& g = out[j - 1];
    if (!series_member_projection(g, j) || series_member_projection(g, j + 1)) {
      throw Error("degenerate series witness at level " + std::to_string(j));
    }
  }
  return out;
}

std::vector<SolvableElement> ball_enumerate(int m, int n, int radius,
                                            std::uint64_t max_words) {
  check_rank(m);
  if (radius < 0) throw InvalidArgument("radius must be non-negative");
  std::uint64_t words = 1;
  for (int r = 0; r < radius; ++r) {
    if (__builtin_mul_overflow(words, static_cast<std::uint64_t>(2 * m), &words) ||
        words > max_words) {
      throw CapExceeded("ball too large: (2m)^radius exceeds " +
                        std::to_string(max_words));
    }
  }
  std::vector<SolvableElement> letters;
  for (const auto& g : generators({m, n})) {
    letters.push_back(g);
    letters.push_back(g.inverse());
  }
  std::map<std::string, SolvableElement> seen;
  auto one = SolvableElement::identity({m, n});
  seen.emplace(one.key(), one);
  std::vector<SolvableElement> frontier{one};
  for (int r = 0; r < radius && !frontier.empty(); ++r) {
    std::vector<SolvableElement> next;
    for (const auto& e : frontier) {
      for (const auto& l : letters) {
        auto p = e * l;
        if (seen.emplace(p.key(), p).second) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  std::vector<SolvableElement> out;
  out.reserve(seen.size());
  for (auto& [key, e] : seen) out.push_back(std::move(e));
  return out;
}

SolvableElement act(const SolvableElement& c, std::span<const ActionTerm> u) {
  SolvableElement result = SolvableElement::identity(c.ambient());
  for (const auto& term : u) {
    result = result * power(conjugate(c, term.lift), term.multiplicity);
  }
  return result;
}

}  // namespace rigid
