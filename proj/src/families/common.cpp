#include "endogrowth/families/common.hpp"

#include <map>

#include "endogrowth/errors.hpp"

namespace endogrowth {

BigInt syllable_length(const NormalWord& w) {
  BigInt n = 0;
  for (const auto& s : w) n += abs(s.exp);
  return n;
}

Word to_word(const NormalWord& w) {
  Word out;
  for (const auto& s : w) {
    if (!fits_int64(s.exp)) throw ResourceError("exponent " + s.exp.get_str() + " does not fit in a word", 0, 0);
    if (s.exp != 0) out.letters.push_back({s.gen, to_int64(s.exp)});
  }
  return out;
}

NormalWord reduce(const NormalWord& w) {
  NormalWord out;
  for (const auto& s : w) {
    if (s.exp == 0) continue;
    if (!out.empty() && out.back().gen == s.gen) {
      out.back().exp += s.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

std::vector<std::string> numbered_names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

GenSet make_gens(const std::vector<std::string>& names, std::vector<std::string> defaults) {
  if (names.empty()) return GenSet(std::move(defaults));
  if (names.size() != defaults.size())
    throw ValidationError("expected " + std::to_string(defaults.size()) + " generator names, got " +
                          std::to_string(names.size()));
  return GenSet(names);
}

std::size_t hash_vector(const std::vector<BigInt>& v, std::size_t seed) {
  for (const auto& x : v) seed = hash_combine(seed, hash_value(x));
  return seed;
}

std::string format_vector(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s + ')';
}

std::vector<BigInt> add(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

std::vector<BigInt> negate(std::vector<BigInt> a) {
  for (auto& x : a) x = -x;
  return a;
}

namespace {

struct Piece {
  BigInt cost;
  BigInt s, t;  // commutator exponents; s == 0 means a plain power of gz
  BigInt rem;   // what is left after the commutator, possibly negative
};

}  // namespace

NormalWord commutator_power_word(const BigInt& L, const BigInt& c, std::size_t gi, std::size_t gj,
                                 std::size_t gz) {
  std::map<BigInt, Piece> memo;
  auto plan = [&](auto&& self, const BigInt& x) -> Piece {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    Piece best{x, 0, 0, 0};
    const BigInt r = sqrt(x / c);
    for (BigInt s = r; s <= r + 1; ++s) {
      if (s < 1) continue;
      const BigInt cs = c * s;
      const BigInt lo = x / cs;
      for (BigInt t = lo; t <= lo + 1; ++t) {
        if (t < 1) continue;
        const BigInt base = 2 * s + 2 * t;
        if (base >= best.cost) continue;
        const BigInt rem = x - cs * t;
        if (abs(rem) >= x) continue;
        const Piece sub = self(self, abs(rem));
        if (base + sub.cost < best.cost) best = {base + sub.cost, s, t, rem};
      }
    }
    memo.emplace(x, best);
    return best;
  };

  NormalWord w;
  int sign = sgn(L);
  BigInt x = abs(L);
  while (x != 0) {
    const Piece p = plan(plan, x);
    if (p.s == 0) {
      w.push_back({gz, sign * x});
      break;
    }
    if (sign > 0)  // [gi^s, gj^t]
      w.insert(w.end(), {{gi, -p.s}, {gj, -p.t}, {gi, p.s}, {gj, p.t}});
    else  // [gj^t, gi^s]
      w.insert(w.end(), {{gj, -p.t}, {gi, -p.s}, {gj, p.t}, {gi, p.s}});
    if (p.rem < 0) sign = -sign;
    x = abs(p.rem);
  }
  return w;
}

}  // namespace endogrowth
