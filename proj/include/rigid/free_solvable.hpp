#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rigid/magnus.hpp"
#include "rigid/word.hpp"

namespace rigid {

/// Identifies the free solvable group S(rank, cls) = F_rank / F_rank^(cls).
struct SolvableAmbient {
  int rank = 1;
  int cls = 0;

  friend bool operator==(const SolvableAmbient&, const SolvableAmbient&) =
      default;
};

/// Canonical form of an element of S(m,n).
///
/// n = 0: the trivial group. n = 1: an exponent vector in Z^m.
/// n >= 2: the Magnus matrix over S(m,n-1), recursively. Equality of
/// elements is equality of these bodies, which is equality of keys.
///
/// Values are immutable and share their body.
class SolvableElement {
 public:
  using Ambient = SolvableAmbient;
  using Matrix = SplitMatrix<SolvableElement>;

  static SolvableElement identity(const Ambient& ambient);
  static SolvableElement generator(const Ambient& ambient, int index);
  static SolvableElement from_exponents(int rank, std::vector<std::int64_t> exps);
  static SolvableElement from_matrix(int rank, int cls, Matrix matrix);

  int rank() const;
  int cls() const;
  Ambient ambient() const { return {rank(), cls()}; }

  bool is_identity() const;

  /// Exponent vector; only for class 1.
  const std::vector<std::int64_t>& exponents() const;
  /// Magnus matrix over S(m, n-1); only for class >= 2.
  const Matrix& matrix() const;

  const std::string& key() const;
  std::string text() const;

  SolvableElement inverse() const;
  friend SolvableElement operator*(const SolvableElement& a,
                                   const SolvableElement& b);

  friend bool operator==(const SolvableElement& a, const SolvableElement& b) {
    return a.node_ == b.node_ || a.key() == b.key();
  }
  friend bool operator<(const SolvableElement& a, const SolvableElement& b) {
    return a.key() < b.key();
  }

  struct Node;

 private:
  explicit SolvableElement(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct SolvableElement::Node {
  int rank = 1;
  int cls = 0;
  std::variant<std::monostate, std::vector<std::int64_t>, Matrix> body;
  std::string key;
  bool trivial = true;
};

using SolvableRing = RingElement<SolvableElement>;

/// The images of x_1..x_m in S(m,n).
std::vector<SolvableElement> generators(const SolvableAmbient& ambient);

/// Canonical form of the image of w in S(m,n).
SolvableElement normalize(int m, int n, const Word& w);

/// The word problem: true iff e is the identity.
bool is_trivial(const SolvableElement& e);

SolvableElement commutator(const SolvableElement& a, const SolvableElement& b);
SolvableElement conjugate(const SolvableElement& a, const SolvableElement& b);
SolvableElement power(const SolvableElement& a, std::int64_t exponent);

/// Image in S(m,k) under the canonical epimorphism, by taking tops.
SolvableElement project(const SolvableElement& e, int k);

/// e in G_i = G^(i-1), decided by projecting to S(m, i-1).
bool series_member_projection(const SolvableElement& e, int i);

/// e in G_i, decided by [e, g_i, ..., g_n] = 1. `witnesses` holds
/// g_i, ..., g_n; each g_j must lie in G_j \ G_{j+1}.
bool series_member_commutator(const SolvableElement& e, int i,
                              std::span<const SolvableElement> witnesses);

/// Witnesses g_1 = x1, g_{j+1} = [g_j, g_j^{x2}] for S(m,n), each checked
/// to lie in G_j \ G_{j+1}. Requires m >= 2 when n >= 2.
std::vector<SolvableElement> series_witnesses(int m, int n);

/// All distinct elements of S(m,n) represented by words of length at most
/// `radius`, sorted by key.
std::vector<SolvableElement> ball_enumerate(int m, int n, int radius,
                                            std::uint64_t max_words = 1'000'000);

/// The action c^u = prod (c^{h_k})^{m_k} of u in Z[G/G_n] on c in G_n, with u
/// given by lifts h_k in G and integer multiplicities.
struct ActionTerm {
  SolvableElement lift;
  std::int64_t multiplicity;
};
SolvableElement act(const SolvableElement& c, std::span<const ActionTerm> u);

}  // namespace rigid
