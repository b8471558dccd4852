#pragma once

// Integral Heisenberg groups Gamma_k = <a1, a2, a3 | [a1,a2] = a3^-k, a3 central>.

#include <optional>
#include <string>
#include <vector>

#include "endogrowth/families/common.hpp"

namespace endogrowth {

class Heisenberg {
 public:
  /// Normal form a1^m a2^n a3^l.
  struct Element {
    BigInt m, n, l;
    friend bool operator==(const Element&, const Element&) = default;
    friend bool operator<(const Element& a, const Element& b) {
      if (a.m != b.m) return a.m < b.m;
      if (a.n != b.n) return a.n < b.n;
      return a.l < b.l;
    }
    friend std::size_t hash_value(const Element& e) {
      return hash_combine(hash_combine(hash_value(e.m), hash_value(e.n)), hash_value(e.l));
    }
  };

  explicit Heisenberg(BigInt k, std::vector<std::string> names = {});

  std::string family() const { return "heisenberg"; }
  const BigInt& k() const noexcept { return k_; }
  const GenSet& gens() const noexcept { return gens_; }

  Element identity() const { return {0, 0, 0}; }
  Element generator(std::size_t i) const;
  Element multiply(const Element& a, const Element& b) const {
    return {a.m + b.m, a.n + b.n, a.l + b.l + k_ * a.n * b.m};
  }
  Element inverse(const Element& a) const { return {-a.m, -a.n, -a.l + k_ * a.n * a.m}; }
  Element power(const Element& a, const BigInt& e) const;
  std::vector<Word> relators() const;
  NormalWord normal_word(const Element& e) const;
  /// a1^m a2^n followed by a commutator representation of the a3 part.
  NormalWord short_word(const Element& e) const;
  BigInt length_upper(const Element& e) const { return syllable_length(short_word(e)); }
  std::string format(const Element& e) const;

  /// Word for a3^L built from commutators [a1^s, a2^t] = a3^(-k s t) plus a
  /// recursively represented remainder.
  NormalWord central_word(const BigInt& L) const;

  /// Abelianization matrix D1 (columns: (m, n) of phi(a1), phi(a2)).
  IntMatrix abelianization(const Endomorphism& phi) const;
  /// Builds an endomorphism; a missing a3 image is derived as a3^det(D1).
  Endomorphism endo_from_images(const std::vector<std::optional<Word>>& images) const;
  std::optional<bool> eventual_triviality_hint(const Endomorphism& phi) const;

  std::string subgroup_name() const { return "<" + gens_.name(2) + ">"; }
  bool in_subgroup(const Element& e) const { return e.m == 0 && e.n == 0; }
  BigInt inner_length(const Element& e) const { return abs(e.l); }

 private:
  BigInt k_;
  GenSet gens_;
};

}  // namespace endogrowth
