#pragma once

// Words over a finite generating set.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace endogrowth {

/// Ordered list of unique generator names.
class GenSet {
 public:
  GenSet() = default;
  explicit GenSet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws NameError for unknown names.
  std::size_t index(std::string_view name) const;

  friend bool operator==(const GenSet&, const GenSet&) = default;

 private:
  std::vector<std::string> names_;
};

struct Letter {
  std::size_t gen = 0;
  std::int64_t exp = 1;  // nonzero
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Product of generator powers; not necessarily reduced.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  Word(std::initializer_list<Letter> ls) : letters(ls) {}
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  bool empty() const noexcept { return letters.empty(); }
  /// Number of letters from S u S^-1, i.e. sum of |exponents|.
  std::uint64_t length() const;
  Word inverse() const;

  friend bool operator==(const Word&, const Word&) = default;
};

Word concat(const Word& a, const Word& b);

/// Free reduction: merges adjacent letters on the same generator and drops
/// zero exponents.
Word reduce(const Word& w);

/// Parses whitespace-separated tokens `name` or `name^INT`. The empty string
/// and the single token `1` denote the empty word.
Word parse_word(const GenSet& gens, std::string_view text);
std::string format_word(const GenSet& gens, const Word& w);

/// Commutator [u, v] = u^-1 v^-1 u v.
Word commutator(const Word& u, const Word& v);

}  // namespace endogrowth
