#pragma once

// Sol lattices Gamma_A = Z^2 x|_A Z, presented as
// <a1, a2, tau | [a1,a2], tau a_i tau^-1 = a1^A(0,i) a2^A(1,i)>.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "endogrowth/families/common.hpp"

namespace endogrowth {

enum class ShiftRange { nonnegative, both };

class Sol {
 public:
  /// a^v tau^t with v in Z^2.
  struct Element {
    BigInt v0, v1, t;
    friend bool operator==(const Element&, const Element&) = default;
    friend bool operator<(const Element& a, const Element& b) {
      if (a.v0 != b.v0) return a.v0 < b.v0;
      if (a.v1 != b.v1) return a.v1 < b.v1;
      return a.t < b.t;
    }
    friend std::size_t hash_value(const Element& e) {
      return hash_combine(hash_combine(hash_value(e.v0), hash_value(e.v1)), hash_value(e.t));
    }
  };

  /// Requires det A = 1 and trace A > 2.
  explicit Sol(IntMatrix a, std::vector<std::string> names = {},
               ShiftRange shifts = ShiftRange::nonnegative);

  std::string family() const { return "sol_lattice"; }
  const IntMatrix& A() const noexcept { return a_; }
  const IntMatrix& A_inverse() const noexcept { return a_inv_; }
  ShiftRange shifts() const noexcept { return shifts_; }
  const GenSet& gens() const noexcept { return gens_; }

  Element identity() const { return {0, 0, 0}; }
  Element generator(std::size_t i) const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  std::vector<Word> relators() const;
  NormalWord normal_word(const Element& e) const;
  /// tau^n a^(A^-n v) tau^-n tau^t with the best shift n.
  NormalWord short_word(const Element& e) const;
  BigInt length_upper(const Element& e) const;
  std::string format(const Element& e) const;

  /// A^t for any integer t (cached for |t| <= 64).
  IntMatrix A_power(const BigInt& t) const;

  /// Matrix of the endomorphism on the fiber: column i = v part of phi(a_i).
  /// Throws ValidationError if an image of a_i leaves the fiber.
  IntMatrix fiber_matrix(const Endomorphism& phi) const;
  std::optional<bool> eventual_triviality_hint(const Endomorphism& phi) const;

  std::string subgroup_name() const { return "<" + gens_.name(0) + ">"; }
  bool in_subgroup(const Element& e) const { return e.v1 == 0 && e.t == 0; }
  BigInt inner_length(const Element& e) const { return abs(e.v0); }

 private:
  std::array<BigInt, 2> apply_power(const BigInt& t, const BigInt& x0, const BigInt& x1) const;

  IntMatrix a_, a_inv_{2, 2};
  ShiftRange shifts_;
  GenSet gens_;
  std::vector<IntMatrix> cache_;  // A^t at index t + 64
};

}  // namespace endogrowth
