#include "endogrowth/families/sol.hpp"

#include "endogrowth/errors.hpp"
#include "endogrowth/solgr.hpp"

namespace endogrowth {

namespace {
constexpr long kCache = 64;
constexpr long kMaxTauPower = 1L << 16;
}  // namespace

Sol::Sol(IntMatrix a, std::vector<std::string> names, ShiftRange shifts)
    : a_(std::move(a)), shifts_(shifts), gens_(make_gens(names, {"a1", "a2", "tau"})) {
  if (a_.rows() != 2 || a_.cols() != 2) throw ValidationError("sol_lattice: A must be 2x2");
  if (a_.det() != 1) throw ValidationError("sol_lattice: A must have determinant 1");
  if (a_.trace() <= 2) throw ValidationError("sol_lattice: A must have trace > 2");
  a_inv_ = unimodular_inverse(a_);
  cache_.resize(2 * kCache + 1, IntMatrix::identity(2));
  for (long t = 1; t <= kCache; ++t) {
    cache_[kCache + t] = cache_[kCache + t - 1] * a_;
    cache_[kCache - t] = cache_[kCache - t + 1] * a_inv_;
  }
}

IntMatrix Sol::A_power(const BigInt& t) const {
  if (abs(t) <= kCache) return cache_[static_cast<std::size_t>(kCache + t.get_si())];
  if (abs(t) > kMaxTauPower)
    throw ResourceError("sol_lattice: tau exponent " + t.get_str() + " too large for exact arithmetic", 0, 0);
  const long n = t.get_si();
  return n > 0 ? mat_pow(a_, static_cast<unsigned long>(n)) : mat_pow(a_inv_, static_cast<unsigned long>(-n));
}

std::array<BigInt, 2> Sol::apply_power(const BigInt& t, const BigInt& x0, const BigInt& x1) const {
  if (t == 0) return {x0, x1};
  const IntMatrix p = A_power(t);
  return {p(0, 0) * x0 + p(0, 1) * x1, p(1, 0) * x0 + p(1, 1) * x1};
}

Sol::Element Sol::generator(std::size_t i) const {
  switch (i) {
    case 0: return {1, 0, 0};
    case 1: return {0, 1, 0};
    case 2: return {0, 0, 1};
    default: throw NameError("generator index out of range");
  }
}

Sol::Element Sol::multiply(const Element& a, const Element& b) const {
  if (b.v0 == 0 && b.v1 == 0) return {a.v0, a.v1, a.t + b.t};
  const auto w = apply_power(a.t, b.v0, b.v1);
  return {a.v0 + w[0], a.v1 + w[1], a.t + b.t};
}

Sol::Element Sol::inverse(const Element& a) const {
  const auto w = apply_power(-a.t, a.v0, a.v1);
  return {-w[0], -w[1], -a.t};
}

std::vector<Word> Sol::relators() const {
  std::vector<Word> rels{commutator(Word{{0, 1}}, Word{{1, 1}})};
  for (std::size_t i = 0; i < 2; ++i) {
    Word w{{2, 1}, {i, 1}, {2, -1}};
    if (a_(1, i) != 0) w.letters.push_back({1, -to_int64(a_(1, i))});
    if (a_(0, i) != 0) w.letters.push_back({0, -to_int64(a_(0, i))});
    rels.push_back(std::move(w));
  }
  return rels;
}

NormalWord Sol::normal_word(const Element& e) const {
  NormalWord w;
  if (e.v0 != 0) w.push_back({0, e.v0});
  if (e.v1 != 0) w.push_back({1, e.v1});
  if (e.t != 0) w.push_back({2, e.t});
  return w;
}

NormalWord Sol::short_word(const Element& e) const {
  const std::vector<BigInt> y{e.v0, e.v1};
  NormalWord w = sol_fiber_word(a_, y, sol_length_upper(a_, y, shifts_));
  if (e.t != 0) w.push_back({2, e.t});
  return reduce(w);
}

BigInt Sol::length_upper(const Element& e) const { return syllable_length(short_word(e)); }

std::string Sol::format(const Element& e) const {
  return "((" + e.v0.get_str() + "," + e.v1.get_str() + ")," + e.t.get_str() + ")";
}

IntMatrix Sol::fiber_matrix(const Endomorphism& phi) const {
  const ElementMap<Sol> map(*this, phi);
  IntMatrix m(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    const Element& img = map.images()[i];
    if (img.t != 0)
      throw ValidationError("sol_lattice: image of " + gens_.name(i) + " leaves the fiber Z^2");
    m(0, i) = img.v0;
    m(1, i) = img.v1;
  }
  return m;
}

std::optional<bool> Sol::eventual_triviality_hint(const Endomorphism& phi) const {
  // The tau exponent is a homomorphism to Z; it multiplies by m under phi.
  const Element img = evaluate(*this, phi.image(2));
  return img.t == 0;
}

}  // namespace endogrowth
