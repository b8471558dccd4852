#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "endogrowth/word.hpp"

namespace endogrowth {

/// Maximum number of syllables a substituted word may reach before the
/// substitution is abandoned with a ResourceError.
inline constexpr std::size_t kDefaultWordBudget = std::size_t{1} << 22;

/// An assignment generator -> image word over the same generating set.
class Endomorphism {
 public:
  Endomorphism(GenSet domain, std::vector<Word> images);

  static Endomorphism identity(const GenSet& gens);
  static Endomorphism trivial(const GenSet& gens);

  const GenSet& domain() const noexcept { return domain_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image(std::size_t gen) const { return images_.at(gen); }

  /// Substitutes every letter of w by its image and freely reduces.
  Word apply(const Word& w, std::size_t budget = kDefaultWordBudget) const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  GenSet domain_;
  std::vector<Word> images_;
};

/// outer o inner, i.e. x -> outer(inner(x)).
Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner,
                     std::size_t budget = kDefaultWordBudget);

/// phi^k(g) as a reduced word, reducing after every substitution round.
Word endo_power_image(const Endomorphism& phi, std::size_t gen, unsigned k,
                      std::size_t budget = kDefaultWordBudget);

}  // namespace endogrowth
