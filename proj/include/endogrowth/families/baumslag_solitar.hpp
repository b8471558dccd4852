#pragma once

// Baumslag-Solitar groups B(1,n) = <a, b | a^-1 b a = b^n> = Z[1/n] x| Z.

#include <optional>
#include <string>
#include <vector>

#include "endogrowth/families/common.hpp"

namespace endogrowth {

class BaumslagSolitar {
 public:
  /// (q, t) with q = num / n^e; canonical: e == 0 or n does not divide num,
  /// and num == 0 forces e == 0.
  struct Element {
    BigInt num;
    unsigned long e = 0;
    BigInt t;
    friend bool operator==(const Element&, const Element&) = default;
    friend bool operator<(const Element& l, const Element& r) {
      if (l.t != r.t) return l.t < r.t;
      if (l.e != r.e) return l.e < r.e;
      return l.num < r.num;
    }
    friend std::size_t hash_value(const Element& x) {
      return hash_combine(hash_combine(hash_value(x.num), x.e), hash_value(x.t));
    }
  };

  explicit BaumslagSolitar(BigInt n, std::vector<std::string> names = {});

  std::string family() const { return "baumslag_solitar"; }
  const BigInt& n() const noexcept { return n_; }
  const GenSet& gens() const noexcept { return gens_; }

  Element identity() const { return {0, 0, 0}; }
  Element generator(std::size_t i) const;
  Element multiply(const Element& l, const Element& r) const;
  Element inverse(const Element& x) const;
  std::vector<Word> relators() const;
  /// a^e b^num a^(t-e)
  NormalWord normal_word(const Element& x) const;
  /// Base-n digit (Horner) representation of b^num with balanced digits.
  NormalWord short_word(const Element& x) const;
  BigInt length_upper(const Element& x) const { return syllable_length(short_word(x)); }
  std::string format(const Element& x) const;

  /// Cheapest Horner word for b^N: b^d0 a^-1 b^d1 a^-1 ... b^dh a^h.
  NormalWord horner_word(const BigInt& N) const;

  std::optional<bool> eventual_triviality_hint(const Endomorphism& phi) const;

  std::string subgroup_name() const { return "<" + gens_.name(1) + ">"; }
  bool in_subgroup(const Element& x) const { return x.t == 0 && x.e == 0; }
  BigInt inner_length(const Element& x) const { return abs(x.num); }

 private:
  Element canonical(BigInt num, unsigned long e, BigInt t) const;

  BigInt n_;
  GenSet gens_;
};

}  // namespace endogrowth
