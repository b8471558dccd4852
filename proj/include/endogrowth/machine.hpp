#pragma once

// Normal-form machines: the per-family group arithmetic contract, and the
// generic algorithms (evaluation, endomorphism application, relator checks,
// eventual triviality) written against it.

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "endogrowth/bigint.hpp"
#include "endogrowth/endomorphism.hpp"
#include "endogrowth/errors.hpp"
#include "endogrowth/word.hpp"

namespace endogrowth {

/// Generator power with an arbitrary-precision exponent.
struct Syllable {
  std::size_t gen = 0;
  BigInt exp;
};

/// A word whose product is a given element; machines produce these from
/// normal forms so that endomorphisms can be applied element-wise.
using NormalWord = std::vector<Syllable>;

template <class M>
concept NormalFormMachine = requires(const M& m, const typename M::Element& a,
                                     const typename M::Element& b, std::size_t i) {
  typename M::Element;
  { m.family() } -> std::convertible_to<std::string>;
  { m.gens() } -> std::same_as<const GenSet&>;
  { m.identity() } -> std::same_as<typename M::Element>;
  { m.generator(i) } -> std::same_as<typename M::Element>;
  { m.multiply(a, b) } -> std::same_as<typename M::Element>;
  { m.inverse(a) } -> std::same_as<typename M::Element>;
  { m.relators() } -> std::same_as<std::vector<Word>>;
  { m.normal_word(a) } -> std::same_as<NormalWord>;
  { m.length_upper(a) } -> std::same_as<BigInt>;
  { m.format(a) } -> std::convertible_to<std::string>;
  { a == b } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
  { hash_value(a) } -> std::convertible_to<std::size_t>;
};

struct ElementHash {
  template <class E>
  std::size_t operator()(const E& e) const {
    return hash_value(e);
  }
};

template <NormalFormMachine M>
typename M::Element power(const M& m, const typename M::Element& g, const BigInt& e) {
  if constexpr (requires { { m.power(g, e) } -> std::same_as<typename M::Element>; }) {
    return m.power(g, e);
  } else {
    typename M::Element base = e < 0 ? m.inverse(g) : g;
    BigInt n = abs(e);
    typename M::Element result = m.identity();
    while (n > 0) {
      if (mpz_odd_p(n.get_mpz_t())) result = m.multiply(result, base);
      n >>= 1;
      if (n > 0) base = m.multiply(base, base);
    }
    return result;
  }
}

template <NormalFormMachine M>
typename M::Element evaluate(const M& m, const Word& w) {
  typename M::Element acc = m.identity();
  for (const auto& l : w.letters) {
    if (l.gen >= m.gens().size()) throw NameError("word uses a generator unknown to the machine");
    acc = m.multiply(acc, power(m, m.generator(l.gen), BigInt(static_cast<long>(l.exp))));
  }
  return acc;
}

template <NormalFormMachine M>
typename M::Element evaluate(const M& m, const NormalWord& w) {
  typename M::Element acc = m.identity();
  for (const auto& s : w) {
    if (s.gen >= m.gens().size()) throw NameError("word uses a generator unknown to the machine");
    acc = m.multiply(acc, power(m, m.generator(s.gen), s.exp));
  }
  return acc;
}

/// Endomorphism realized on elements: generator images are stored as
/// elements and arbitrary elements are mapped through their normal words.
template <NormalFormMachine M>
class ElementMap {
 public:
  using Element = typename M::Element;

  ElementMap(const M& m, const Endomorphism& phi) : m_(&m) {
    if (!(phi.domain() == m.gens()))
      throw FamilyError("endomorphism generating set does not match the machine");
    for (const auto& w : phi.images()) images_.push_back(evaluate(m, w));
  }
  ElementMap(const M& m, std::vector<Element> images) : m_(&m), images_(std::move(images)) {
    if (images_.size() != m.gens().size())
      throw FamilyError("image count does not match the machine");
  }

  const std::vector<Element>& images() const noexcept { return images_; }

  Element operator()(const Element& x) const { return (*this)(m_->normal_word(x)); }

  Element operator()(const NormalWord& w) const {
    Element acc = m_->identity();
    for (const auto& s : w) acc = m_->multiply(acc, power(*m_, images_.at(s.gen), s.exp));
    return acc;
  }

  Element operator()(const Word& w) const {
    Element acc = m_->identity();
    for (const auto& l : w.letters)
      acc = m_->multiply(acc, power(*m_, images_.at(l.gen), BigInt(static_cast<long>(l.exp))));
    return acc;
  }

 private:
  const M* m_;
  std::vector<Element> images_;
};

struct HomomorphismVerdict {
  bool valid = true;
  std::optional<std::size_t> relator;  // index into the machine's relators
  std::string relator_text;
  std::string witness;                 // normal form of phi(relator)
};

/// Valid iff every relator maps to the identity.
template <NormalFormMachine M>
HomomorphismVerdict check_homomorphism(const M& m, const Endomorphism& phi) {
  const ElementMap<M> map(m, phi);
  const auto rels = m.relators();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const auto img = map(rels[i]);
    if (!(img == m.identity()))
      return {false, i, format_word(m.gens(), rels[i]), m.format(img)};
  }
  return {};
}

inline constexpr std::size_t kDefaultTrivialityBound = 64;

struct EventualTriviality {
  enum class Kind { yes, no, unknown };
  Kind kind = Kind::unknown;
  std::size_t steps = 0;  // N with phi^N trivial when kind == yes
};

/// Decides whether some power of phi kills every generator. Families may
/// supply an exact nilpotency hint through `eventual_triviality_hint`.
template <NormalFormMachine M>
EventualTriviality eventually_trivial(const M& m, const Endomorphism& phi,
                                      std::size_t bound = kDefaultTrivialityBound) {
  using Element = typename M::Element;
  const ElementMap<M> map(m, phi);
  std::optional<bool> hint;
  if constexpr (requires { { m.eventual_triviality_hint(phi) } -> std::same_as<std::optional<bool>>; })
    hint = m.eventual_triviality_hint(phi);
  if (hint && !*hint) return {EventualTriviality::Kind::no, 0};
  const std::size_t limit = hint ? std::max(bound, 4 * m.gens().size() + 4) : bound;

  std::vector<Element> cur;
  for (std::size_t i = 0; i < m.gens().size(); ++i) cur.push_back(m.generator(i));
  std::vector<std::vector<Element>> history{cur};
  for (std::size_t n = 1; n <= limit; ++n) {
    for (auto& x : cur) x = map(x);
    bool trivial = true;
    for (const auto& x : cur) trivial = trivial && (x == m.identity());
    if (trivial) return {EventualTriviality::Kind::yes, n};
    for (const auto& h : history)
      if (h == cur) return {EventualTriviality::Kind::no, 0};
    history.push_back(cur);
  }
  return {EventualTriviality::Kind::unknown, 0};
}

}  // namespace endogrowth
