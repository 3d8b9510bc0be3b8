#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rigid/group_ring.hpp"
#include "rigid/word.hpp"

namespace rigid {

/// A 2x2 matrix [[b, 0], [d, 1]] with b in the base group B and d in the
/// free right ZB-module with basis t_1..t_m, stored as m coordinates.
///
/// Products follow the right-module convention
///   [[b1,0],[d1,1]] * [[b2,0],[d2,1]] = [[b1 b2, 0], [d1 b2 + d2, 1]],
/// which is the product rule d(uv) = d(u) v + d(v) for Fox derivatives.
template <class E>
struct SplitMatrix {
  E top;
  std::vector<RingElement<E>> coords;

  static SplitMatrix identity(const typename E::Ambient& base,
                              std::size_t rank) {
    return SplitMatrix{E::identity(base),
                       std::vector<RingElement<E>>(rank, RingElement<E>(base))};
  }

  std::size_t rank() const { return coords.size(); }

  bool is_identity() const {
    if (!top.is_identity()) return false;
    for (const auto& c : coords) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const SplitMatrix& a, const SplitMatrix& b) {
    return a.top.key() == b.top.key() && a.coords == b.coords;
  }
};

template <GroupElement E>
SplitMatrix<E> split_mul(const SplitMatrix<E>& p, const SplitMatrix<E>& q) {
  if (p.rank() != q.rank() || !(p.top.ambient() == q.top.ambient())) {
    throw AmbientMismatch();
  }
  SplitMatrix<E> r{p.top * q.top, {}};
  r.coords.reserve(p.rank());
  for (std::size_t i = 0; i < p.rank(); ++i) {
    r.coords.push_back(p.coords[i].translate(q.top) + q.coords[i]);
  }
  return r;
}

template <GroupElement E>
SplitMatrix<E> split_inv(const SplitMatrix<E>& p) {
  E inv = p.top.inverse();
  SplitMatrix<E> r{inv, {}};
  r.coords.reserve(p.rank());
  for (const auto& c : p.coords) r.coords.push_back(-c.translate(inv));
  return r;
}

/// The Magnus image of x_index (or its inverse): [[b_i, 0], [t_i, 1]].
template <GroupElement E>
SplitMatrix<E> generator_matrix(std::span<const E> images, int index,
                                bool inverse = false) {
  if (index < 1 || static_cast<std::size_t>(index) > images.size()) {
    throw InvalidArgument("generator index out of range: " +
                          std::to_string(index));
  }
  const E& b = images[index - 1];
  auto p = SplitMatrix<E>::identity(b.ambient(), images.size());
  p.top = b;
  p.coords[index - 1] = RingElement<E>::constant(b.ambient(), 1);
  return inverse ? split_inv(p) : p;
}

/// Magnus homomorphism x_i -> [[b_i,0],[t_i,1]] applied to a word, left to
/// right. The coordinates are the Fox derivatives of w evaluated in ZB.
template <GroupElement E>
SplitMatrix<E> eval_word(const Word& w, std::span<const E> images) {
  if (images.empty()) throw InvalidArgument("no generator images");
  std::vector<SplitMatrix<E>> letters;
  letters.reserve(2 * images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    letters.push_back(generator_matrix(images, static_cast<int>(i) + 1));
    letters.push_back(split_inv(letters.back()));
  }
  auto result = SplitMatrix<E>::identity(images[0].ambient(), images.size());
  for (int letter : w.letters()) {
    int index = letter > 0 ? letter : -letter;
    if (static_cast<std::size_t>(index) > images.size()) {
      throw InvalidArgument("generator index out of range: " +
                            std::to_string(index));
    }
    result = split_mul(result, letters[2 * (index - 1) + (letter < 0)]);
  }
  return result;
}

/// sigma(d) = sum_i (b_i - 1) d_i, landing in the fundamental ideal of ZB.
template <GroupElement E>
RingElement<E> sigma(const SplitMatrix<E>& p, std::span<const E> images) {
  if (images.size() != p.rank()) throw AmbientMismatch();
  RingElement<E> sum(p.top.ambient());
  for (std::size_t i = 0; i < p.rank(); ++i) {
    if (p.coords[i].is_zero()) continue;
    auto shifted = RingElement<E>::monomial(images[i]);
    shifted.add_term(E::identity(images[i].ambient()), -1);
    sum += shifted * p.coords[i];
  }
  return sum;
}

template <class E>
struct ModuleGenerator {
  std::vector<RingElement<E>> row;
  E image;
};

/// For each generator word a_j of a subgroup A: the module row d(a_j) and the
/// image of a_j in B. These generate the induced splitting of A.
template <GroupElement E>
std::vector<ModuleGenerator<E>> restricted_module_generators(
    std::span<const Word> generators, std::span<const E> images) {
  if (generators.empty()) throw InvalidArgument("empty generator list");
  std::vector<ModuleGenerator<E>> out;
  out.reserve(generators.size());
  for (const auto& w : generators) {
    auto p = eval_word(w, images);
    out.push_back(ModuleGenerator<E>{std::move(p.coords), std::move(p.top)});
  }
  return out;
}

}  // namespace rigid
