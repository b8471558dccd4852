#include "endogrowth/word.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>

#include "endogrowth/errors.hpp"

namespace endogrowth {

GenSet::GenSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw NameError("generator names must be nonempty");
    for (char c : n)
      if (c == '^' || std::isspace(static_cast<unsigned char>(c)))
        throw NameError("generator name '" + n + "' contains whitespace or '^'");
    if (n == "1") throw NameError("'1' is reserved for the identity");
    if (!seen.insert(n).second) throw NameError("duplicate generator name '" + n + "'");
  }
}

std::optional<std::size_t> GenSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t GenSet::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw NameError("unknown generator '" + std::string(name) + "'");
}

std::uint64_t Word::length() const {
  std::uint64_t n = 0;
  for (const auto& l : letters) n += static_cast<std::uint64_t>(l.exp < 0 ? -l.exp : l.exp);
  return n;
}

Word Word::inverse() const {
  Word w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back({it->gen, -it->exp});
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

Word reduce(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (const auto& l : w.letters) {
    if (l.exp == 0) continue;
    if (!out.letters.empty() && out.letters.back().gen == l.gen) {
      std::int64_t e = 0;
      if (__builtin_add_overflow(out.letters.back().exp, l.exp, &e))
        throw ValidationError("word exponent overflow during reduction");
      if (e == 0)
        out.letters.pop_back();
      else
        out.letters.back().exp = e;
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

Word parse_word(const GenSet& gens, std::string_view text) {
  Word w;
  std::istringstream is{std::string(text)};
  std::string tok;
  std::vector<std::string> tokens;
  while (is >> tok) tokens.push_back(tok);
  if (tokens.size() == 1 && tokens[0] == "1") return w;
  for (const auto& t : tokens) {
    const auto caret = t.find('^');
    const std::string name = t.substr(0, caret);
    std::int64_t exp = 1;
    if (caret != std::string::npos) {
      const std::string num = t.substr(caret + 1);
      const char* first = num.data();
      const char* last = num.data() + num.size();
      if (!num.empty() && *first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, exp);
      if (ec != std::errc() || ptr != last || first == last)
        throw ValidationError("bad exponent in token '" + t + "'");
      if (exp == 0) throw ValidationError("zero exponent in token '" + t + "'");
    }
    w.letters.push_back({gens.index(name), exp});
  }
  return w;
}

std::string format_word(const GenSet& gens, const Word& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += gens.name(l.gen);
    if (l.exp != 1) out += '^' + std::to_string(l.exp);
  }
  return out;
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(u.inverse(), v.inverse()), concat(u, v));
}

}  // namespace endogrowth
