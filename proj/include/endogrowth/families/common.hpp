#pragma once

// Small helpers shared by the family machines.

#include <cstddef>
#include <string>
#include <vector>

#include "endogrowth/bigint.hpp"
#include "endogrowth/exactlin.hpp"
#include "endogrowth/machine.hpp"

namespace endogrowth {

/// Total letter count of a syllable word.
BigInt syllable_length(const NormalWord& w);

/// Merges adjacent syllables on equal generators and drops zero exponents.
NormalWord reduce(const NormalWord& w);

/// Throws ResourceError when an exponent does not fit in 64 bits.
Word to_word(const NormalWord& w);

/// Word for gz^L in a class-2 group where [gi^s, gj^t] = gz^(c s t), c > 0:
/// greedy commutators of near-square shape plus a recursive remainder.
NormalWord commutator_power_word(const BigInt& L, const BigInt& c, std::size_t gi, std::size_t gj,
                                 std::size_t gz);

/// {prefix}1 .. {prefix}n
std::vector<std::string> numbered_names(const std::string& prefix, std::size_t n);

/// Uses `names` when given, otherwise `defaults`; sizes must agree.
GenSet make_gens(const std::vector<std::string>& names, std::vector<std::string> defaults);

std::size_t hash_vector(const std::vector<BigInt>& v, std::size_t seed = 0);

/// "(a,b,c)"
std::string format_vector(const std::vector<BigInt>& v);

std::vector<BigInt> add(const std::vector<BigInt>& a, const std::vector<BigInt>& b);
std::vector<BigInt> negate(std::vector<BigInt> a);

/// Distinguished infinite cyclic (or free abelian) subgroup used for distortion
/// profiles: membership plus the exact word length w.r.t. its own generators.
template <class M>
concept HasSubgroup = NormalFormMachine<M> && requires(const M& m, const typename M::Element& e) {
  { m.subgroup_name() } -> std::convertible_to<std::string>;
  { m.in_subgroup(e) } -> std::same_as<bool>;
  { m.inner_length(e) } -> std::same_as<BigInt>;
};

}  // namespace endogrowth
