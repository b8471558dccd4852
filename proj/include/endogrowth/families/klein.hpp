#pragma once

// Klein bottle group <x, y | y x y^-1 = x^-1>, elements x^a y^b.

#include <optional>
#include <string>
#include <vector>

#include "endogrowth/families/common.hpp"

namespace endogrowth {

class Klein {
 public:
  struct Element {
    BigInt a, b;
    friend bool operator==(const Element&, const Element&) = default;
    friend bool operator<(const Element& l, const Element& r) { return l.a != r.a ? l.a < r.a : l.b < r.b; }
    friend std::size_t hash_value(const Element& e) { return hash_combine(hash_value(e.a), hash_value(e.b)); }
  };

  explicit Klein(std::vector<std::string> names = {});

  std::string family() const { return "klein_bottle"; }
  const GenSet& gens() const noexcept { return gens_; }

  Element identity() const { return {0, 0}; }
  Element generator(std::size_t i) const;
  Element multiply(const Element& l, const Element& r) const {
    return {mpz_odd_p(l.b.get_mpz_t()) ? BigInt(l.a - r.a) : BigInt(l.a + r.a), l.b + r.b};
  }
  Element inverse(const Element& e) const {
    return {mpz_odd_p(e.b.get_mpz_t()) ? BigInt(e.a) : BigInt(-e.a), -e.b};
  }
  Element power(const Element& e, const BigInt& n) const;
  std::vector<Word> relators() const;
  NormalWord normal_word(const Element& e) const;
  NormalWord short_word(const Element& e) const { return normal_word(e); }
  BigInt length_upper(const Element& e) const { return abs(e.a) + abs(e.b); }
  std::string format(const Element& e) const;

  /// Matrix of phi restricted to the invariant subgroup <x, y^2> = Z^2, in
  /// the basis (x, y^2). Throws ValidationError if the subgroup is not
  /// invariant (only possible for invalid endomorphisms).
  IntMatrix restricted_matrix(const Endomorphism& phi) const;
  std::optional<bool> eventual_triviality_hint(const Endomorphism& phi) const;

  std::string subgroup_name() const { return "<" + gens_.name(0) + ">"; }
  bool in_subgroup(const Element& e) const { return e.b == 0; }
  BigInt inner_length(const Element& e) const { return abs(e.a); }

 private:
  GenSet gens_;
};

}  // namespace endogrowth
