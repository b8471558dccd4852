#include "endogrowth/families/klein.hpp"

#include "endogrowth/errors.hpp"

namespace endogrowth {

Klein::Klein(std::vector<std::string> names) : gens_(make_gens(names, {"x", "y"})) {}

Klein::Element Klein::generator(std::size_t i) const {
  switch (i) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    default: throw NameError("generator index out of range");
  }
}

Klein::Element Klein::power(const Element& e, const BigInt& n) const {
  // Odd b: (x^a y^b)^2 = y^2b, so the x part survives only for odd n.
  if (mpz_odd_p(e.b.get_mpz_t())) return {mpz_odd_p(n.get_mpz_t()) ? e.a : BigInt(0), e.b * n};
  return {e.a * n, e.b * n};
}

std::vector<Word> Klein::relators() const { return {Word{{1, 1}, {0, 1}, {1, -1}, {0, 1}}}; }

NormalWord Klein::normal_word(const Element& e) const {
  NormalWord w;
  if (e.a != 0) w.push_back({0, e.a});
  if (e.b != 0) w.push_back({1, e.b});
  return w;
}

std::string Klein::format(const Element& e) const {
  return "(" + e.a.get_str() + "," + e.b.get_str() + ")";
}

IntMatrix Klein::restricted_matrix(const Endomorphism& phi) const {
  const ElementMap<Klein> map(*this, phi);
  const Element fx = map.images()[0];
  const Element fy2 = multiply(map.images()[1], map.images()[1]);
  if (mpz_odd_p(fx.b.get_mpz_t()))
    throw ValidationError("klein_bottle: <x, y^2> is not invariant under this map");
  // y^(2c) is the basis vector (0, 1) in coordinates (x, y^2).
  return IntMatrix::from_rows({{fx.a, fy2.a}, {fx.b / 2, fy2.b / 2}});
}

std::optional<bool> Klein::eventual_triviality_hint(const Endomorphism& phi) const {
  return is_nilpotent(restricted_matrix(phi));
}

}  // namespace endogrowth
