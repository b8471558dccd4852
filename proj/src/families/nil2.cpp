#include "endogrowth/families/nil2.hpp"

#include <set>

#include "endogrowth/errors.hpp"

namespace endogrowth {

namespace {

std::vector<std::string> all_names(const Nil2Structure& s) {
  std::vector<std::string> names = s.tau_names.empty() ? numbered_names("t", s.n) : s.tau_names;
  if (names.size() != s.n) throw ValidationError("nilpotent2: tau name count does not match n_gens");
  names.insert(names.end(), s.central.begin(), s.central.end());
  return names;
}

bool all_zero(const std::vector<BigInt>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

Nil2::Nil2(Nil2Structure s)
    : s_(std::move(s)), n_(s_.n), m_(s_.central.size()), gens_(all_names(s_)) {
  if (n_ < 2) throw ValidationError("nilpotent2: need at least two tau generators");
  if (m_ < 1) throw ValidationError("nilpotent2: need at least one central generator");
  if (s_.designated.empty()) s_.designated.resize(m_);
  if (s_.designated.size() != m_) throw ValidationError("nilpotent2: designation list size mismatch");

  gamma_.assign(n_, std::vector<std::vector<BigInt>>(n_, std::vector<BigInt>(m_)));
  for (const auto& [ij, v] : s_.gamma) {
    const auto [i, j] = ij;
    if (i >= n_ || j >= n_ || i <= j) throw ValidationError("nilpotent2: gamma keys must be (i, j) with i > j");
    if (v.size() != m_) throw ValidationError("nilpotent2: gamma vectors need one entry per central generator");
    gamma_[i][j] = v;
  }
  std::set<std::pair<std::size_t, std::size_t>> used;
  for (std::size_t c = 0; c < m_; ++c) {
    if (!s_.designated[c]) continue;
    const auto [i, j] = *s_.designated[c];
    if (i >= n_ || j >= n_ || i >= j)
      throw ValidationError("nilpotent2: designated pair for " + s_.central[c] + " must be (i, j) with i < j");
    if (!used.insert({i, j}).second) throw ValidationError("nilpotent2: designated pairs must be distinct");
    // s_c = [t_i, t_j] means [t_j, t_i] = s_c^-1.
    std::vector<BigInt> expect(m_);
    expect[c] = -1;
    if (s_.gamma.count({j, i}) && gamma_[j][i] != expect)
      throw ValidationError("nilpotent2: gamma of a designated pair must be the matching unit vector");
    gamma_[j][i] = expect;
  }
}

std::vector<BigInt> Nil2::gamma(std::size_t i, std::size_t j) const {
  if (i == j) return std::vector<BigInt>(m_);
  if (i > j) return gamma_[i][j];
  return negate(gamma_[j][i]);
}

Nil2::Element Nil2::generator(std::size_t i) const {
  if (i >= n_ + m_) throw NameError("generator index out of range");
  Element e = identity();
  if (i < n_)
    e.x[i] = 1;
  else
    e.z[i - n_] = 1;
  return e;
}

std::vector<BigInt> Nil2::cross(const std::vector<BigInt>& a, const std::vector<BigInt>& b) const {
  std::vector<BigInt> out(m_);
  BigInt c;
  for (std::size_t i = 1; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < i; ++j) {
      if (b[j] == 0) continue;
      c = a[i] * b[j];
      for (std::size_t s = 0; s < m_; ++s)
        if (gamma_[i][j][s] != 0) out[s] += c * gamma_[i][j][s];
    }
  }
  return out;
}

Nil2::Element Nil2::multiply(const Element& a, const Element& b) const {
  Element r{add(a.x, b.x), add(a.z, b.z)};
  const auto c = cross(a.x, b.x);
  for (std::size_t s = 0; s < m_; ++s) r.z[s] += c[s];
  return r;
}

Nil2::Element Nil2::inverse(const Element& a) const {
  Element r{negate(a.x), negate(a.z)};
  const auto c = cross(a.x, a.x);
  for (std::size_t s = 0; s < m_; ++s) r.z[s] += c[s];
  return r;
}

Nil2::Element Nil2::power(const Element& a, const BigInt& e) const {
  // g^e = (e x, e z + e(e-1)/2 cross(x, x))
  const BigInt tri = e * (e - 1) / 2;
  const auto c = cross(a.x, a.x);
  Element r = a;
  for (auto& v : r.x) v *= e;
  for (std::size_t s = 0; s < m_; ++s) r.z[s] = e * r.z[s] + tri * c[s];
  return r;
}

std::vector<Word> Nil2::relators() const {
  std::vector<Word> rels;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      // [t_i, t_j] s^gamma(j,i)
      Word w = commutator(Word{{i, 1}}, Word{{j, 1}});
      for (std::size_t s = 0; s < m_; ++s)
        if (gamma_[j][i][s] != 0) w.letters.push_back({n_ + s, to_int64(gamma_[j][i][s])});
      rels.push_back(std::move(w));
    }
  for (std::size_t s = 0; s < m_; ++s)
    for (std::size_t g = 0; g < n_ + s; ++g) rels.push_back(commutator(Word{{n_ + s, 1}}, Word{{g, 1}}));
  return rels;
}

NormalWord Nil2::normal_word(const Element& e) const {
  NormalWord w;
  for (std::size_t i = 0; i < n_; ++i)
    if (e.x[i] != 0) w.push_back({i, e.x[i]});
  for (std::size_t s = 0; s < m_; ++s)
    if (e.z[s] != 0) w.push_back({n_ + s, e.z[s]});
  return w;
}

NormalWord Nil2::short_word(const Element& e) const {
  NormalWord w;
  for (std::size_t i = 0; i < n_; ++i)
    if (e.x[i] != 0) w.push_back({i, e.x[i]});
  for (std::size_t s = 0; s < m_; ++s) {
    if (e.z[s] == 0) continue;
    if (const auto& d = s_.designated[s]) {
      const NormalWord c = commutator_power_word(e.z[s], 1, d->first, d->second, n_ + s);
      w.insert(w.end(), c.begin(), c.end());
    } else {
      w.push_back({n_ + s, e.z[s]});
    }
  }
  return reduce(w);
}

std::string Nil2::format(const Element& e) const { return format_vector(e.x) + format_vector(e.z); }

IntMatrix Nil2::abelianization(const Endomorphism& phi) const {
  const ElementMap<Nil2> map(*this, phi);
  IntMatrix d(n_, n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t i = 0; i < n_; ++i) d(i, j) = map.images()[j].x[i];
  return d;
}

IntMatrix Nil2::central_matrix(const Endomorphism& phi) const {
  const ElementMap<Nil2> map(*this, phi);
  const auto& img = map.images();
  IntMatrix d(m_, m_);
  for (std::size_t s = 0; s < m_; ++s) {
    Element col = img[n_ + s];
    if (const auto& des = s_.designated[s]) {
      const Element& u = img[des->first];
      const Element& v = img[des->second];
      const Element c = multiply(multiply(inverse(u), inverse(v)), multiply(u, v));
      if (!(c == col))
        throw ValidationError("homomorphism violation: image of " + gens_.name(n_ + s) +
                              " differs from the commutator of images " + format(c));
      col = c;
    } else if (!all_zero(col.x)) {
      throw ValidationError("homomorphism violation: image of central generator " + gens_.name(n_ + s) +
                            " is not central");
    }
    for (std::size_t r = 0; r < m_; ++r) d(r, s) = col.z[r];
  }
  return d;
}

Endomorphism Nil2::endo_from_images(const std::vector<std::optional<Word>>& images) const {
  if (images.size() != n_ + m_) throw ValidationError("nilpotent2: wrong number of image slots");
  std::vector<Word> ws(n_ + m_);
  std::vector<Element> tau_img;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!images[i]) throw ValidationError("nilpotent2: image of " + gens_.name(i) + " is required");
    ws[i] = *images[i];
    tau_img.push_back(evaluate(*this, ws[i]));
  }
  for (std::size_t s = 0; s < m_; ++s) {
    if (images[n_ + s]) {
      ws[n_ + s] = *images[n_ + s];
      continue;
    }
    if (const auto& d = s_.designated[s]) {
      ws[n_ + s] = commutator(ws[d->first], ws[d->second]);
      continue;
    }
    // s^c = [t_a, t_b] for some pair whose gamma is supported on s alone.
    bool done = false;
    for (std::size_t a = 1; a < n_ && !done; ++a)
      for (std::size_t b = 0; b < a && !done; ++b) {
        const auto& g = gamma_[a][b];
        bool single = g[s] != 0;
        for (std::size_t r = 0; r < m_ && single; ++r) single = r == s || g[r] == 0;
        if (!single) continue;
        const Element& u = tau_img[a];
        const Element& v = tau_img[b];
        const Element c = multiply(multiply(inverse(u), inverse(v)), multiply(u, v));
        Word w;
        for (std::size_t r = 0; r < m_; ++r) {
          if (c.z[r] % g[s] != 0)
            throw ValidationError("nilpotent2: cannot derive image of " + gens_.name(n_ + s) +
                                  " (commutator not divisible)");
          const BigInt q = c.z[r] / g[s];
          if (q != 0) w.letters.push_back({n_ + r, to_int64(q)});
        }
        ws[n_ + s] = std::move(w);
        done = true;
      }
    if (!done) throw ValidationError("nilpotent2: image of " + gens_.name(n_ + s) + " is required");
  }
  return Endomorphism(gens_, std::move(ws));
}

std::optional<bool> Nil2::eventual_triviality_hint(const Endomorphism& phi) const {
  if (!is_nilpotent(abelianization(phi))) return false;
  const ElementMap<Nil2> map(*this, phi);
  IntMatrix d(m_, m_);
  for (std::size_t s = 0; s < m_; ++s) {
    const Element& img = map.images()[n_ + s];
    if (!all_zero(img.x)) return std::nullopt;
    for (std::size_t r = 0; r < m_; ++r) d(r, s) = img.z[r];
  }
  return is_nilpotent(d);
}

bool Nil2::in_subgroup(const Element& e) const {
  if (!all_zero(e.x)) return false;
  for (std::size_t s = 1; s < m_; ++s)
    if (e.z[s] != 0) return false;
  return true;
}

}  // namespace endogrowth
