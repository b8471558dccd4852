#include "endogrowth/families/baumslag_solitar.hpp"

#include <algorithm>
#include <map>

#include "endogrowth/errors.hpp"

namespace endogrowth {

namespace {

unsigned long shift_amount(const BigInt& x) {
  if (x < 0 || !x.fits_ulong_p() || x > (1UL << 20))
    throw ResourceError("baumslag_solitar: exponent shift " + x.get_str() + " too large", 0, 0);
  return x.get_ui();
}

}  // namespace

BaumslagSolitar::BaumslagSolitar(BigInt n, std::vector<std::string> names)
    : n_(std::move(n)), gens_(make_gens(names, {"a", "b"})) {
  if (n_ < 2) throw ValidationError("baumslag_solitar: n must be at least 2");
  if (!fits_int64(n_)) throw ValidationError("baumslag_solitar: n too large");
}

BaumslagSolitar::Element BaumslagSolitar::canonical(BigInt num, unsigned long e, BigInt t) const {
  if (num == 0) return {0, 0, std::move(t)};
  BigInt q, r;
  while (e > 0) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), n_.get_mpz_t());
    if (r != 0) break;
    num = q;
    --e;
  }
  return {std::move(num), e, std::move(t)};
}

BaumslagSolitar::Element BaumslagSolitar::generator(std::size_t i) const {
  switch (i) {
    case 0: return {0, 0, 1};
    case 1: return {1, 0, 0};
    default: throw NameError("generator index out of range");
  }
}

BaumslagSolitar::Element BaumslagSolitar::multiply(const Element& l, const Element& r) const {
  if (r.num == 0) return {l.num, l.e, l.t + r.t};
  // n^-t q' = r.num / n^(r.e + t)
  const BigInt shifted = BigInt(static_cast<unsigned long>(r.e)) + l.t;
  BigInt rnum = r.num;
  unsigned long re = 0;
  if (shifted >= 0) {
    re = shift_amount(shifted);
  } else {
    rnum *= ipow(n_, shift_amount(-shifted));
  }
  const unsigned long E = std::max(l.e, re);
  BigInt num = l.num * ipow(n_, E - l.e) + rnum * ipow(n_, E - re);
  return canonical(std::move(num), E, l.t + r.t);
}

BaumslagSolitar::Element BaumslagSolitar::inverse(const Element& x) const {
  // (q, t)^-1 = (-n^t q, -t)
  const BigInt ex = BigInt(static_cast<unsigned long>(x.e)) - x.t;
  if (ex >= 0) return canonical(-x.num, shift_amount(ex), -x.t);
  return canonical(-x.num * ipow(n_, shift_amount(-ex)), 0, -x.t);
}

std::vector<Word> BaumslagSolitar::relators() const {
  return {Word{{0, -1}, {1, 1}, {0, 1}, {1, -to_int64(n_)}}};
}

NormalWord BaumslagSolitar::normal_word(const Element& x) const {
  NormalWord w;
  const BigInt e(static_cast<unsigned long>(x.e));
  if (e != 0) w.push_back({0, e});
  if (x.num != 0) w.push_back({1, x.num});
  if (x.t - e != 0) w.push_back({0, x.t - e});
  return w;
}

NormalWord BaumslagSolitar::horner_word(const BigInt& N) const {
  struct State {
    BigInt value;
    BigInt cost;  // sum |d_i| + 2 * level
    long parent;  // index into the previous level
    BigInt digit; // digit that led here from the parent
  };
  std::vector<std::vector<State>> levels{{{N, 0, -1, 0}}};
  BigInt best = abs(N);
  std::size_t best_level = 0, best_index = 0;
  for (std::size_t lvl = 0;; ++lvl) {
    std::map<BigInt, State> next;
    for (std::size_t i = 0; i < levels[lvl].size(); ++i) {
      const State& s = levels[lvl][i];
      if (s.cost + abs(s.value) < best) {
        best = s.cost + abs(s.value);
        best_level = lvl;
        best_index = i;
      }
      if (s.value == 0) continue;
      BigInt r;
      mpz_fdiv_r(r.get_mpz_t(), s.value.get_mpz_t(), n_.get_mpz_t());
      for (const BigInt& d : {r, BigInt(r - n_)}) {
        if (r == 0 && d != 0) continue;
        const BigInt v = (s.value - d) / n_;
        const BigInt c = s.cost + abs(d) + 2;
        if (c >= best) continue;
        auto it = next.find(v);
        if (it == next.end() || c < it->second.cost) next[v] = {v, c, static_cast<long>(i), d};
      }
    }
    if (next.empty()) break;
    levels.emplace_back();
    for (auto& [v, s] : next) levels.back().push_back(std::move(s));
  }
  // Rebuild digits from the chosen state back to the root.
  std::vector<BigInt> digits;
  const BigInt top = levels[best_level][best_index].value;
  for (long lvl = static_cast<long>(best_level), i = static_cast<long>(best_index); lvl > 0; --lvl) {
    const State& s = levels[static_cast<std::size_t>(lvl)][static_cast<std::size_t>(i)];
    digits.push_back(s.digit);
    i = s.parent;
  }
  std::reverse(digits.begin(), digits.end());
  NormalWord w;
  for (const auto& d : digits) {
    if (d != 0) w.push_back({1, d});
    w.push_back({0, -1});
  }
  if (top != 0) w.push_back({1, top});
  if (!digits.empty()) w.push_back({0, BigInt(static_cast<unsigned long>(digits.size()))});
  return w;
}

NormalWord BaumslagSolitar::short_word(const Element& x) const {
  NormalWord w;
  const BigInt e(static_cast<unsigned long>(x.e));
  if (e != 0) w.push_back({0, e});
  const NormalWord h = horner_word(x.num);
  w.insert(w.end(), h.begin(), h.end());
  if (x.t - e != 0) w.push_back({0, x.t - e});
  return reduce(w);
}

std::string BaumslagSolitar::format(const Element& x) const {
  std::string q = x.num.get_str();
  if (x.e) q += "/" + n_.get_str() + "^" + std::to_string(x.e);
  return "(" + q + "," + x.t.get_str() + ")";
}

std::optional<bool> BaumslagSolitar::eventual_triviality_hint(const Endomorphism& phi) const {
  // t is a homomorphism to Z; phi(b) is forced into the fiber, so t(phi^k(a))
  // = t(phi(a))^k and a zero exponent makes phi^2 trivial.
  const Element img = evaluate(*this, phi.image(0));
  return img.t == 0;
}

}  // namespace endogrowth
