#include "endogrowth/families/heisenberg.hpp"

#include "endogrowth/errors.hpp"

namespace endogrowth {

Heisenberg::Heisenberg(BigInt k, std::vector<std::string> names)
    : k_(std::move(k)), gens_(make_gens(names, {"a1", "a2", "a3"})) {
  if (k_ < 1) throw ValidationError("heisenberg: k must be at least 1");
  if (!fits_int64(k_)) throw ValidationError("heisenberg: k too large");
}

Heisenberg::Element Heisenberg::generator(std::size_t i) const {
  switch (i) {
    case 0: return {1, 0, 0};
    case 1: return {0, 1, 0};
    case 2: return {0, 0, 1};
    default: throw NameError("generator index out of range");
  }
}

Heisenberg::Element Heisenberg::power(const Element& a, const BigInt& e) const {
  // g^e = (e m, e n, e l + k n m e(e-1)/2)
  const BigInt tri = e * (e - 1) / 2;
  return {e * a.m, e * a.n, e * a.l + k_ * a.n * a.m * tri};
}

std::vector<Word> Heisenberg::relators() const {
  const Word a1{{0, 1}}, a2{{1, 1}}, a3{{2, 1}};
  return {concat(commutator(a1, a2), Word{{2, to_int64(k_)}}), commutator(a1, a3), commutator(a2, a3)};
}

NormalWord Heisenberg::normal_word(const Element& e) const {
  NormalWord w;
  if (e.m != 0) w.push_back({0, e.m});
  if (e.n != 0) w.push_back({1, e.n});
  if (e.l != 0) w.push_back({2, e.l});
  return w;
}

NormalWord Heisenberg::central_word(const BigInt& L) const {
  // [a2^s, a1^t] = a3^(k s t)
  return commutator_power_word(L, k_, 1, 0, 2);
}

NormalWord Heisenberg::short_word(const Element& e) const {
  NormalWord w;
  if (e.m != 0) w.push_back({0, e.m});
  if (e.n != 0) w.push_back({1, e.n});
  const NormalWord c = central_word(e.l);
  w.insert(w.end(), c.begin(), c.end());
  return reduce(w);
}

std::string Heisenberg::format(const Element& e) const {
  return "(" + e.m.get_str() + "," + e.n.get_str() + "," + e.l.get_str() + ")";
}

IntMatrix Heisenberg::abelianization(const Endomorphism& phi) const {
  const ElementMap<Heisenberg> map(*this, phi);
  IntMatrix d(2, 2);
  for (std::size_t j = 0; j < 2; ++j) {
    d(0, j) = map.images()[j].m;
    d(1, j) = map.images()[j].n;
  }
  return d;
}

Endomorphism Heisenberg::endo_from_images(const std::vector<std::optional<Word>>& images) const {
  if (images.size() != 3) throw ValidationError("heisenberg: expected 3 image slots");
  if (!images[0] || !images[1]) throw ValidationError("heisenberg: images of the first two generators are required");
  std::vector<Word> ws{*images[0], *images[1], images[2].value_or(Word{})};
  if (!images[2]) {
    const Element x = evaluate(*this, ws[0]), y = evaluate(*this, ws[1]);
    const BigInt det = x.m * y.n - x.n * y.m;
    if (det != 0) ws[2] = Word{{2, to_int64(det)}};
  }
  return Endomorphism(gens_, std::move(ws));
}

std::optional<bool> Heisenberg::eventual_triviality_hint(const Endomorphism& phi) const {
  return is_nilpotent(abelianization(phi));
}

}  // namespace endogrowth
