#pragma once

#include <concepts>
#include <map>
#include <string>
#include <utility>

#include "rigid/bigint.hpp"
#include "rigid/error.hpp"

namespace rigid {

/// Elements of a group B that the integral group ring ZB can be built over.
/// `key()` must be a canonical serialization: equal elements, equal keys.
template <class E>
concept GroupElement =
    std::copyable<E> && requires(const E& a, const E& b,
                                 const typename E::Ambient& ambient) {
      { a * b } -> std::same_as<E>;
      { a.inverse() } -> std::same_as<E>;
      { a.is_identity() } -> std::same_as<bool>;
      { a.key() } -> std::convertible_to<const std::string&>;
      { a.text() } -> std::same_as<std::string>;
      { a.ambient() } -> std::same_as<typename E::Ambient>;
      { E::identity(ambient) } -> std::same_as<E>;
      { ambient == ambient } -> std::same_as<bool>;
    };

/// A finitely supported formal sum c_1 g_1 + ... + c_k g_k in ZB.
///
/// Terms are stored by canonical key, so iteration, printing and equality
/// follow key order. No stored coefficient is zero.
template <class E>
class RingElement {
 public:
  using Ambient = typename E::Ambient;

  struct Term {
    E element;
    BigInt coeff;
  };
  using TermMap = std::map<std::string, Term>;

  explicit RingElement(Ambient ambient) : ambient_(std::move(ambient)) {}

  static RingElement monomial(const E& g, const BigInt& coeff = 1) {
    RingElement r(g.ambient());
    r.add_term(g, coeff);
    return r;
  }

  static RingElement constant(const Ambient& ambient, const BigInt& coeff) {
    return monomial(E::identity(ambient), coeff);
  }

  const Ambient& ambient() const { return ambient_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient(const E& g) const {
    auto it = terms_.find(g.key());
    return it == terms_.end() ? BigInt(0) : it->second.coeff;
  }

  /// Adds coeff·g in place.
  void add_term(const E& g, const BigInt& coeff) {
    if (!(g.ambient() == ambient_)) throw AmbientMismatch();
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(g.key(), Term{g, coeff});
    if (!inserted) {
      it->second.coeff += coeff;
      if (it->second.coeff == 0) terms_.erase(it);
    }
  }

  RingElement operator-() const {
    RingElement r = *this;
    for (auto& [key, term] : r.terms_) term.coeff = -term.coeff;
    return r;
  }

  RingElement& operator+=(const RingElement& other) {
    check_ambient(other);
    for (const auto& [key, term] : other.terms_) {
      auto [it, inserted] = terms_.try_emplace(key, term);
      if (!inserted) {
        it->second.coeff += term.coeff;
        if (it->second.coeff == 0) terms_.erase(it);
      }
    }
    return *this;
  }

  RingElement& operator-=(const RingElement& other) { return *this += -other; }

  friend RingElement operator+(RingElement a, const RingElement& b) {
    a += b;
    return a;
  }

  friend RingElement operator-(RingElement a, const RingElement& b) {
    a -= b;
    return a;
  }

  /// Convolution; the group product h·k keeps the factor order.
  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    a.check_ambient(b);
    RingElement r(a.ambient_);
    for (const auto& [ka, ta] : a.terms_) {
      for (const auto& [kb, tb] : b.terms_) {
        r.add_term(ta.element * tb.element, ta.coeff * tb.coeff);
      }
    }
    return r;
  }

  RingElement scaled(const BigInt& c) const {
    RingElement r(ambient_);
    if (c == 0) return r;
    r = *this;
    for (auto& [key, term] : r.terms_) term.coeff *= c;
    return r;
  }

  /// Right translation: every support element g becomes g·by.
  RingElement translate(const E& by) const {
    if (!(by.ambient() == ambient_)) throw AmbientMismatch();
    if (by.is_identity()) return *this;
    RingElement r(ambient_);
    for (const auto& [key, term] : terms_) {
      E moved = term.element * by;
      std::string moved_key = moved.key();
      r.terms_.emplace(std::move(moved_key), Term{std::move(moved), term.coeff});
    }
    return r;
  }

  /// Left translation: every support element g becomes by·g.
  RingElement left_translate(const E& by) const {
    if (!(by.ambient() == ambient_)) throw AmbientMismatch();
    if (by.is_identity()) return *this;
    RingElement r(ambient_);
    for (const auto& [key, term] : terms_) {
      E moved = by * term.element;
      std::string moved_key = moved.key();
      r.terms_.emplace(std::move(moved_key), Term{std::move(moved), term.coeff});
    }
    return r;
  }

  /// Sum of all coefficients (the augmentation map ZB -> Z).
  BigInt augmentation() const {
    BigInt sum = 0;
    for (const auto& [key, term] : terms_) sum += term.coeff;
    return sum;
  }

  /// Canonical serialization `{key:coeff,...}` in key order.
  std::string key() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [key, term] : terms_) {
      if (!first) out += ',';
      first = false;
      out += key;
      out += ':';
      out += term.coeff.get_str();
    }
    out += '}';
    return out;
  }

  /// `c1*g1 + c2*g2 + ...` in key order, or `0`.
  std::string text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, term] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += term.coeff.get_str();
      out += '*';
      out += term.element.text();
    }
    return out;
  }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    if (!(a.ambient_ == b.ambient_) || a.terms_.size() != b.terms_.size()) {
      return false;
    }
    auto it = b.terms_.begin();
    for (const auto& [key, term] : a.terms_) {
      if (key != it->first || term.coeff != it->second.coeff) return false;
      ++it;
    }
    return true;
  }

 private:
  void check_ambient(const RingElement& other) const {
    if (!(ambient_ == other.ambient_)) throw AmbientMismatch();
  }

  Ambient ambient_;
  TermMap terms_;
};

template <GroupElement E>
RingElement<E> translate(const RingElement<E>& a, const E& g) {
  return a.translate(g);
}

template <GroupElement E>
BigInt augmentation(const RingElement<E>& a) {
  return a.augmentation();
}

}  // namespace rigid
