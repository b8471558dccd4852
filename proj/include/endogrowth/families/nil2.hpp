#pragma once

// Torsion-free class-2 nilpotent groups given by generators t_1..t_n (the
// tau's) and central generators s_1..s_m, with [t_i, t_j] = s^gamma(i,j) for
// i > j. Some central generators may be designated as s = [t_i, t_j], i < j.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endogrowth/families/common.hpp"

namespace endogrowth {

struct Nil2Structure {
  std::size_t n = 0;                                                 // number of tau generators
  std::vector<std::string> tau_names;                                // optional, default t1..tn
  std::vector<std::string> central;                                  // central generator names
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> designated;  // per central, (i, j) with i < j
  std::map<std::pair<std::size_t, std::size_t>, std::vector<BigInt>> gamma;   // (i, j), i > j, 0-based
};

class Nil2 {
 public:
  struct Element {
    std::vector<BigInt> x;  // tau exponents
    std::vector<BigInt> z;  // central exponents
    friend bool operator==(const Element&, const Element&) = default;
    friend bool operator<(const Element& a, const Element& b) {
      return a.x != b.x ? a.x < b.x : a.z < b.z;
    }
    friend std::size_t hash_value(const Element& e) { return hash_vector(e.z, hash_vector(e.x)); }
  };

  explicit Nil2(Nil2Structure s);

  std::string family() const { return "nilpotent2"; }
  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  const GenSet& gens() const noexcept { return gens_; }
  const Nil2Structure& structure() const noexcept { return s_; }
  /// Exponent vector of [t_i, t_j] for any i != j.
  std::vector<BigInt> gamma(std::size_t i, std::size_t j) const;

  Element identity() const { return {std::vector<BigInt>(n_), std::vector<BigInt>(m_)}; }
  Element generator(std::size_t i) const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Element power(const Element& a, const BigInt& e) const;
  std::vector<Word> relators() const;
  NormalWord normal_word(const Element& e) const;
  /// Designated central powers are written as single commutators.
  NormalWord short_word(const Element& e) const;
  BigInt length_upper(const Element& e) const { return syllable_length(short_word(e)); }
  std::string format(const Element& e) const;

  /// n x n, column j = tau part of phi(t_j).
  IntMatrix abelianization(const Endomorphism& phi) const;
  /// m x m, column s = central part of phi(s_s), taken from the commutator of
  /// images for designated s. Throws ValidationError on inconsistency.
  IntMatrix central_matrix(const Endomorphism& phi) const;
  /// Missing central images are derived from commutators of tau images.
  Endomorphism endo_from_images(const std::vector<std::optional<Word>>& images) const;
  std::optional<bool> eventual_triviality_hint(const Endomorphism& phi) const;

  std::string subgroup_name() const { return "<" + gens_.name(n_) + ">"; }
  bool in_subgroup(const Element& e) const;
  BigInt inner_length(const Element& e) const { return abs(e.z[0]); }

 private:
  /// sum_{i>j} a_i b_j gamma(i,j)
  std::vector<BigInt> cross(const std::vector<BigInt>& a, const std::vector<BigInt>& b) const;

  Nil2Structure s_;
  std::size_t n_, m_;
  std::vector<std::vector<std::vector<BigInt>>> gamma_;  // gamma_[i][j] for i > j
  GenSet gens_;
};

}  // namespace endogrowth
