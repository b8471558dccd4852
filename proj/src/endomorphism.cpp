#include "endogrowth/endomorphism.hpp"

#include "endogrowth/errors.hpp"

namespace endogrowth {

Endomorphism::Endomorphism(GenSet domain, std::vector<Word> images)
    : domain_(std::move(domain)), images_(std::move(images)) {
  if (images_.size() != domain_.size())
    throw ValidationError("endomorphism needs one image per generator");
  for (auto& w : images_) {
    for (const auto& l : w.letters)
      if (l.gen >= domain_.size())
        throw ValidationError("image word uses a generator outside the domain");
    w = reduce(w);
  }
}

Endomorphism Endomorphism::identity(const GenSet& gens) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < gens.size(); ++i) images.push_back(Word{{i, 1}});
  return Endomorphism(gens, std::move(images));
}

Endomorphism Endomorphism::trivial(const GenSet& gens) {
  return Endomorphism(gens, std::vector<Word>(gens.size()));
}

Word Endomorphism::apply(const Word& w, std::size_t budget) const {
  Word out;
  auto push = [&](const Letter& l) {
    if (!out.letters.empty() && out.letters.back().gen == l.gen) {
      std::int64_t e = 0;
      if (__builtin_add_overflow(out.letters.back().exp, l.exp, &e))
        throw ResourceError("exponent overflow while substituting", 0, out.letters.size());
      if (e == 0)
        out.letters.pop_back();
      else
        out.letters.back().exp = e;
    } else {
      out.letters.push_back(l);
    }
    if (out.letters.size() > budget)
      throw ResourceError("substituted word exceeds the syllable budget", 0, out.letters.size());
  };
  for (const auto& l : w.letters) {
    const Word& img = images_.at(l.gen);
    if (img.letters.empty()) continue;
    if (img.letters.size() == 1) {
      std::int64_t e = 0;
      if (__builtin_mul_overflow(img.letters[0].exp, l.exp, &e))
        throw ResourceError("exponent overflow while substituting", 0, out.letters.size());
      push({img.letters[0].gen, e});
      continue;
    }
    const Word piece = l.exp > 0 ? img : img.inverse();
    const std::uint64_t reps = static_cast<std::uint64_t>(l.exp > 0 ? l.exp : -l.exp);
    if (reps > budget) throw ResourceError("substituted word exceeds the syllable budget", 0, reps);
    for (std::uint64_t r = 0; r < reps; ++r)
      for (const auto& pl : piece.letters) push(pl);
  }
  return out;
}

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner, std::size_t budget) {
  if (!(outer.domain() == inner.domain()))
    throw FamilyError("composing endomorphisms of different generating sets");
  std::vector<Word> images;
  images.reserve(inner.images().size());
  for (const auto& w : inner.images()) images.push_back(outer.apply(w, budget));
  return Endomorphism(inner.domain(), std::move(images));
}

Word endo_power_image(const Endomorphism& phi, std::size_t gen, unsigned k, std::size_t budget) {
  if (gen >= phi.domain().size()) throw NameError("generator index out of range");
  Word w{{gen, 1}};
  for (unsigned i = 0; i < k; ++i) w = phi.apply(w, budget);
  return w;
}

}  // namespace endogrowth
