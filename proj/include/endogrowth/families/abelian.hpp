#pragma once

// Z^n and Z^a x Z_{b_1} x ... x Z_{b_t}.

#include <optional>
#include <string>
#include <vector>

#include "endogrowth/families/common.hpp"

namespace endogrowth {

class FreeAbelian {
 public:
  struct Element {
    std::vector<BigInt> x;
    friend bool operator==(const Element&, const Element&) = default;
    friend bool operator<(const Element& a, const Element& b) { return a.x < b.x; }
    friend std::size_t hash_value(const Element& e) { return hash_vector(e.x); }
  };

  explicit FreeAbelian(std::size_t rank, std::vector<std::string> names = {});

  std::string family() const { return "free_abelian"; }
  std::size_t rank() const noexcept { return rank_; }
  const GenSet& gens() const noexcept { return gens_; }

  Element identity() const { return {std::vector<BigInt>(rank_)}; }
  Element generator(std::size_t i) const;
  Element multiply(const Element& a, const Element& b) const { return {add(a.x, b.x)}; }
  Element inverse(const Element& a) const { return {negate(a.x)}; }
  Element power(const Element& a, const BigInt& e) const;
  std::vector<Word> relators() const;
  NormalWord normal_word(const Element& e) const;
  NormalWord short_word(const Element& e) const { return normal_word(e); }
  BigInt length_upper(const Element& e) const { return l1_norm(e.x); }
  std::string format(const Element& e) const { return format_vector(e.x); }

  /// Column i = exponent vector of phi(e_i).
  IntMatrix matrix_of(const Endomorphism& phi) const;
  Endomorphism endo_from_matrix(const IntMatrix& d) const;
  std::optional<bool> eventual_triviality_hint(const Endomorphism& phi) const;

  std::string subgroup_name() const { return "<" + gens_.name(0) + ">"; }
  bool in_subgroup(const Element& e) const;
  BigInt inner_length(const Element& e) const { return abs(e.x[0]); }

 private:
  std::size_t rank_;
  GenSet gens_;
};

class TorsionProduct {
 public:
  struct Element {
    std::vector<BigInt> x;  // free part
    std::vector<BigInt> r;  // residues, 0 <= r_i < b_i
    friend bool operator==(const Element&, const Element&) = default;
    friend bool operator<(const Element& a, const Element& b) {
      return a.x != b.x ? a.x < b.x : a.r < b.r;
    }
    friend std::size_t hash_value(const Element& e) { return hash_vector(e.r, hash_vector(e.x)); }
  };

  TorsionProduct(std::size_t rank, std::vector<BigInt> torsion, std::vector<std::string> names = {});

  std::string family() const { return "abelian_with_torsion"; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<BigInt>& torsion() const noexcept { return torsion_; }
  const GenSet& gens() const noexcept { return gens_; }

  Element identity() const;
  Element generator(std::size_t i) const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Element power(const Element& a, const BigInt& e) const;
  std::vector<Word> relators() const;
  NormalWord normal_word(const Element& e) const;
  /// Torsion residues written with the shorter of r and r - b.
  NormalWord short_word(const Element& e) const;
  BigInt length_upper(const Element& e) const { return syllable_length(short_word(e)); }
  std::string format(const Element& e) const;

  /// Matrix of the induced map on the free quotient Z^a.
  IntMatrix free_matrix(const Endomorphism& phi) const;
  /// Square matrix over all generators; torsion rows hold residues.
  IntMatrix matrix_of(const Endomorphism& phi) const;
  Endomorphism endo_from_matrix(const IntMatrix& d) const;
  std::optional<bool> eventual_triviality_hint(const Endomorphism& phi) const;

  std::string subgroup_name() const { return "<" + gens_.name(0) + ">"; }
  bool in_subgroup(const Element& e) const;
  BigInt inner_length(const Element& e) const { return rank_ ? BigInt(abs(e.x[0])) : BigInt(0); }

 private:
  Element canonical(Element e) const;

  std::size_t rank_;
  std::vector<BigInt> torsion_;
  GenSet gens_;
};

}  // namespace endogrowth
