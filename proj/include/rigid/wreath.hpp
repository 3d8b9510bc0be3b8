#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rigid/free_solvable.hpp"
#include "rigid/magnus.hpp"

namespace rigid {

/// Identifies the iterated wreath product W(rank, level), where
/// W(m,0) = Z^m and W(m,n) = Z^m wr W(m,n-1).
struct WreathAmbient {
  int rank = 1;
  int level = 0;

  friend bool operator==(const WreathAmbient&, const WreathAmbient&) = default;
};

/// An element of W(m,n) in base-function form: a finitely supported map
/// f: W(m,n-1) -> Z^m together with a top element of W(m,n-1). Level 0
/// elements are plain exponent vectors.
///
/// Multiplication is (f, a)(g, b) = (f.b + g, ab) with (f.b)(x) = f(x b^-1),
/// so a base value sitting at x moves to x b.
class WreathElement {
 public:
  using Ambient = WreathAmbient;
  using Vector = std::vector<BigInt>;

  struct BaseEntry;
  using BaseMap = std::map<std::string, BaseEntry>;

  static WreathElement identity(const Ambient& ambient);
  static WreathElement abelian(int rank, std::vector<std::int64_t> exps);
  /// Sums the given entries (repeated points add up) and drops zero vectors.
  static WreathElement from_parts(int rank, int level,
                                  const std::vector<BaseEntry>& entries,
                                  const WreathElement& top);
  /// The element with base value `value * e_coordinate` at `at`, trivial top.
  static WreathElement delta(const WreathElement& at, int coordinate,
                             const BigInt& value = 1);
  /// The element with empty base and the given top.
  static WreathElement lift(const WreathElement& top);

  int rank() const;
  int level() const;
  Ambient ambient() const { return {rank(), level()}; }
  bool is_identity() const;

  const std::vector<std::int64_t>& exponents() const;  // level 0
  const BaseMap& base() const;                         // level >= 1
  const WreathElement& top() const;                    // level >= 1

  const std::string& key() const;
  std::string text() const;

  WreathElement inverse() const;
  friend WreathElement operator*(const WreathElement& a, const WreathElement& b);

  friend bool operator==(const WreathElement& a, const WreathElement& b) {
    return a.node_ == b.node_ || a.key() == b.key();
  }

  struct Node;

 private:
  explicit WreathElement(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct WreathElement::BaseEntry {
  WreathElement at;
  Vector vec;
};

struct WreathElement::Node {
  struct Parts {
    BaseMap base;
    WreathElement top;
  };
  int rank = 1;
  int level = 0;
  std::variant<std::vector<std::int64_t>, Parts> body;
  std::string key;
  bool trivial = true;
};

/// A free-module row over Z W(m,n-1) read as a finitely supported function:
/// the coefficient c of g in coordinate i becomes f(g)_i = c.
WreathElement matrix_to_function(const SplitMatrix<WreathElement>& p);
SplitMatrix<WreathElement> function_to_matrix(const WreathElement& w);

/// The embedding S(m,n) -> W(m,n-1) obtained by converting every Magnus
/// level to function form. S(m,1) = Z^m maps identically onto W(m,0), and
/// the trivial group S(m,0) maps to the identity of W(m,0).
WreathElement embed_free_solvable(const SolvableElement& e);

/// Target level of embed_free_solvable for S(m,n).
int wreath_level_for_class(int n);

}  // namespace rigid
