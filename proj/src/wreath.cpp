#include "rigid/wreath.hpp"

#include <utility>

#include "rigid/error.hpp"

namespace rigid {

namespace {

std::string exps_key(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string vec_text(const WreathElement::Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += v[i].get_str();
  }
  return out + ")";
}

bool is_zero(const WreathElement::Vector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

void accumulate(WreathElement::BaseMap& base, const WreathElement& at,
                const WreathElement::Vector& vec) {
  auto [it, inserted] = base.try_emplace(at.key(), WreathElement::BaseEntry{at, vec});
  if (!inserted) {
    for (std::size_t i = 0; i < vec.size(); ++i) it->second.vec[i] += vec[i];
    if (is_zero(it->second.vec)) base.erase(it);
  } else if (is_zero(vec)) {
    base.erase(it);
  }
}

}  // namespace

WreathElement WreathElement::identity(const Ambient& ambient) {
  if (ambient.rank < 1) throw InvalidArgument("rank must be positive");
  if (ambient.level < 0) throw InvalidArgument("level must be non-negative");
  if (ambient.level == 0) {
    return abelian(ambient.rank, std::vector<std::int64_t>(ambient.rank, 0));
  }
  return lift(identity({ambient.rank, ambient.level - 1}));
}

WreathElement WreathElement::abelian(int rank, std::vector<std::int64_t> exps) {
  if (rank < 1 || exps.size() != static_cast<std::size_t>(rank)) {
    throw InvalidArgument("exponent vector length must equal the rank");
  }
  auto node = std::make_shared<Node>();
  node->rank = rank;
  node->level = 0;
  node->key = exps_key(exps);
  node->trivial = true;
  for (auto x : exps) node->trivial = node->trivial && x == 0;
  node->body = std::move(exps);
  return WreathElement(std::move(node));
}

WreathElement WreathElement::from_parts(int rank, int level,
                                        const std::vector<BaseEntry>& entries,
                                        const WreathElement& top) {
  if (level < 1) throw InvalidArgument("base-function form needs level >= 1");
  const Ambient lower{rank, level - 1};
  if (!(top.ambient() == lower)) throw AmbientMismatch();
  Node::Parts parts{{}, top};
  for (const auto& e : entries) {
    if (!(e.at.ambient() == lower) ||
        e.vec.size() != static_cast<std::size_t>(rank)) {
      throw AmbientMismatch();
    }
    accumulate(parts.base, e.at, e.vec);
  }
  auto node = std::make_shared<Node>();
  node->rank = rank;
  node->level = level;
  std::string key = "<" + top.key();
  for (const auto& [k, e] : parts.base) {
    key += '|';
    key += k;
    key += ':';
    key += vec_text(e.vec);
  }
  node->key = key + ">";
  node->trivial = parts.base.empty() && top.is_identity();
  node->body = std::move(parts);
  return WreathElement(std::move(node));
}

WreathElement WreathElement::delta(const WreathElement& at, int coordinate,
                                   const BigInt& value) {
  if (coordinate < 1 || coordinate > at.rank()) {
    throw InvalidArgument("coordinate out of range");
  }
  Vector v(at.rank(), BigInt(0));
  v[coordinate - 1] = value;
  return from_parts(at.rank(), at.level() + 1, {BaseEntry{at, std::move(v)}},
                    identity(at.ambient()));
}

WreathElement WreathElement::lift(const WreathElement& top) {
  return from_parts(top.rank(), top.level() + 1, {}, top);
}

int WreathElement::rank() const { return node_->rank; }
int WreathElement::level() const { return node_->level; }
bool WreathElement::is_identity() const { return node_->trivial; }
const std::string& WreathElement::key() const { return node_->key; }

const std::vector<std::int64_t>& WreathElement::exponents() const {
  if (node_->level != 0) throw InvalidArgument("exponents() needs level 0");
  return std::get<std::vector<std::int64_t>>(node_->body);
}

const WreathElement::BaseMap& WreathElement::base() const {
  if (node_->level == 0) throw InvalidArgument("base() needs level >= 1");
  return std::get<Node::Parts>(node_->body).base;
}

const WreathElement& WreathElement::top() const {
  if (node_->level == 0) throw InvalidArgument("top() needs level >= 1");
  return std::get<Node::Parts>(node_->body).top;
}

std::string WreathElement::text() const {
  if (level() == 0) {
    std::string out;
    const auto& v = exponents();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += 'a' + std::to_string(i + 1);
      if (v[i] != 1) out += '^' + std::to_string(v[i]);
    }
    return out.empty() ? "1" : out;
  }
  std::string out = "W(" + top().text();
  for (const auto& [k, e] : base()) {
    out += "; " + e.at.text() + " -> " + vec_text(e.vec);
  }
  return out + ")";
}

WreathElement WreathElement::inverse() const {
  if (level() == 0) {
    auto v = exponents();
    for (auto& x : v) x = checked_neg(x);
    return abelian(rank(), std::move(v));
  }
  return matrix_to_function(split_inv(function_to_matrix(*this)));
}

WreathElement operator*(const WreathElement& a, const WreathElement& b) {
  if (!(a.ambient() == b.ambient())) throw AmbientMismatch();
  if (b.is_identity()) return a;
  if (a.is_identity()) return b;
  if (a.level() == 0) {
    auto v = a.exponents();
    const auto& w = b.exponents();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(v[i], w[i]);
    return WreathElement::abelian(a.rank(), std::move(v));
  }
  const auto& shift = b.top();
  std::vector<WreathElement::BaseEntry> entries;
  entries.reserve(a.base().size() + b.base().size());
  for (const auto& [k, e] : a.base()) entries.push_back({e.at * shift, e.vec});
  for (const auto& [k, e] : b.base()) entries.push_back(e);
  return WreathElement::from_parts(a.rank(), a.level(), entries, a.top() * shift);
}

WreathElement matrix_to_function(const SplitMatrix<WreathElement>& p) {
  const int rank = p.top.rank();
  if (p.rank() != static_cast<std::size_t>(rank)) throw AmbientMismatch();
  std::vector<WreathElement::BaseEntry> entries;
  for (std::size_t i = 0; i < p.rank(); ++i) {
    for (const auto& [k, term] : p.coords[i].terms()) {
      WreathElement::Vector v(rank, BigInt(0));
      v[i] = term.coeff;
      entries.push_back({term.element, std::move(v)});
    }
  }
  return WreathElement::from_parts(rank, p.top.level() + 1, entries, p.top);
}

SplitMatrix<WreathElement> function_to_matrix(const WreathElement& w) {
  if (w.level() < 1) throw InvalidArgument("function form needs level >= 1");
  auto p = SplitMatrix<WreathElement>::identity(w.top().ambient(),
                                                static_cast<std::size_t>(w.rank()));
  p.top = w.top();
  for (const auto& [k, e] : w.base()) {
    for (std::size_t i = 0; i < e.vec.size(); ++i) {
      p.coords[i].add_term(e.at, e.vec[i]);
    }
  }
  return p;
}

int wreath_level_for_class(int n) { return n <= 1 ? 0 : n - 1; }

WreathElement embed_free_solvable(const SolvableElement& e) {
  switch (e.cls()) {
    case 0:
      return WreathElement::identity({e.rank(), 0});
    case 1:
      return WreathElement::abelian(e.rank(), e.exponents());
    default: {
      const auto& p = e.matrix();
      SplitMatrix<WreathElement> q{embed_free_solvable(p.top), {}};
      for (const auto& c : p.coords) {
        RingElement<WreathElement> mapped(q.top.ambient());
        for (const auto& [k, term] : c.terms()) {
          mapped.add_term(embed_free_solvable(term.element), term.coeff);
        }
        q.coords.push_back(std::move(mapped));
      }
      return matrix_to_function(q);
    }
  }
}

}  // namespace rigid
