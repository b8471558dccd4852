#include "endogrowth/families/abelian.hpp"

#include "endogrowth/errors.hpp"

namespace endogrowth {

namespace {

std::vector<Word> commutator_relators(std::size_t n) {
  std::vector<Word> rels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) rels.push_back(commutator(Word{{i, 1}}, Word{{j, 1}}));
  return rels;
}

BigInt mod_nonneg(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

// ---- FreeAbelian ------------------------------------------------------------

FreeAbelian::FreeAbelian(std::size_t rank, std::vector<std::string> names)
    : rank_(rank), gens_(make_gens(names, numbered_names("e", rank))) {
  if (rank == 0) throw ValidationError("free_abelian: rank must be at least 1");
}

FreeAbelian::Element FreeAbelian::generator(std::size_t i) const {
  if (i >= rank_) throw NameError("generator index out of range");
  Element e = identity();
  e.x[i] = 1;
  return e;
}

FreeAbelian::Element FreeAbelian::power(const Element& a, const BigInt& e) const {
  Element r = a;
  for (auto& v : r.x) v *= e;
  return r;
}

std::vector<Word> FreeAbelian::relators() const { return commutator_relators(rank_); }

NormalWord FreeAbelian::normal_word(const Element& e) const {
  NormalWord w;
  for (std::size_t i = 0; i < rank_; ++i)
    if (e.x[i] != 0) w.push_back({i, e.x[i]});
  return w;
}

IntMatrix FreeAbelian::matrix_of(const Endomorphism& phi) const {
  const ElementMap<FreeAbelian> map(*this, phi);
  IntMatrix d(rank_, rank_);
  for (std::size_t j = 0; j < rank_; ++j)
    for (std::size_t i = 0; i < rank_; ++i) d(i, j) = map.images()[j].x[i];
  return d;
}

Endomorphism FreeAbelian::endo_from_matrix(const IntMatrix& d) const {
  if (d.rows() != rank_ || d.cols() != rank_)
    throw DimensionError("free_abelian: endomorphism matrix must be " + std::to_string(rank_) + "x" +
                         std::to_string(rank_));
  std::vector<Word> images;
  for (std::size_t j = 0; j < rank_; ++j) {
    Word w;
    for (std::size_t i = 0; i < rank_; ++i)
      if (d(i, j) != 0) w.letters.push_back({i, to_int64(d(i, j))});
    images.push_back(std::move(w));
  }
  return Endomorphism(gens_, std::move(images));
}

std::optional<bool> FreeAbelian::eventual_triviality_hint(const Endomorphism& phi) const {
  return is_nilpotent(matrix_of(phi));
}

bool FreeAbelian::in_subgroup(const Element& e) const {
  for (std::size_t i = 1; i < rank_; ++i)
    if (e.x[i] != 0) return false;
  return true;
}

// ---- TorsionProduct ---------------------------------------------------------

TorsionProduct::TorsionProduct(std::size_t rank, std::vector<BigInt> torsion,
                               std::vector<std::string> names)
    : rank_(rank), torsion_(std::move(torsion)) {
  if (rank_ + torsion_.size() == 0) throw ValidationError("abelian_with_torsion: no generators");
  for (const auto& b : torsion_)
    if (b < 2 || !fits_int64(b))
      throw ValidationError("abelian_with_torsion: torsion orders must be integers >= 2");
  auto defaults = numbered_names("e", rank_);
  for (auto& n : numbered_names("t", torsion_.size())) defaults.push_back(n);
  gens_ = make_gens(names, std::move(defaults));
}

TorsionProduct::Element TorsionProduct::canonical(Element e) const {
  for (std::size_t i = 0; i < torsion_.size(); ++i) e.r[i] = mod_nonneg(e.r[i], torsion_[i]);
  return e;
}

TorsionProduct::Element TorsionProduct::identity() const {
  return {std::vector<BigInt>(rank_), std::vector<BigInt>(torsion_.size())};
}

TorsionProduct::Element TorsionProduct::generator(std::size_t i) const {
  if (i >= gens_.size()) throw NameError("generator index out of range");
  Element e = identity();
  if (i < rank_)
    e.x[i] = 1;
  else
    e.r[i - rank_] = 1;
  return e;
}

TorsionProduct::Element TorsionProduct::multiply(const Element& a, const Element& b) const {
  return canonical({add(a.x, b.x), add(a.r, b.r)});
}

TorsionProduct::Element TorsionProduct::inverse(const Element& a) const {
  return canonical({negate(a.x), negate(a.r)});
}

TorsionProduct::Element TorsionProduct::power(const Element& a, const BigInt& e) const {
  Element r = a;
  for (auto& v : r.x) v *= e;
  for (auto& v : r.r) v *= e;
  return canonical(std::move(r));
}

std::vector<Word> TorsionProduct::relators() const {
  auto rels = commutator_relators(gens_.size());
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    rels.push_back(Word{{rank_ + i, to_int64(torsion_[i])}});
  return rels;
}

NormalWord TorsionProduct::normal_word(const Element& e) const {
  NormalWord w;
  for (std::size_t i = 0; i < rank_; ++i)
    if (e.x[i] != 0) w.push_back({i, e.x[i]});
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    if (e.r[i] != 0) w.push_back({rank_ + i, e.r[i]});
  return w;
}

NormalWord TorsionProduct::short_word(const Element& e) const {
  NormalWord w = normal_word(e);
  for (auto& s : w) {
    if (s.gen < rank_) continue;
    const BigInt& b = torsion_[s.gen - rank_];
    if (2 * s.exp > b) s.exp -= b;
  }
  return w;
}

std::string TorsionProduct::format(const Element& e) const {
  std::string s = format_vector(e.x);
  if (!torsion_.empty()) s += format_vector(e.r);
  return s;
}

IntMatrix TorsionProduct::free_matrix(const Endomorphism& phi) const {
  const ElementMap<TorsionProduct> map(*this, phi);
  IntMatrix d(std::max<std::size_t>(rank_, 1), std::max<std::size_t>(rank_, 1));
  for (std::size_t j = 0; j < rank_; ++j)
    for (std::size_t i = 0; i < rank_; ++i) d(i, j) = map.images()[j].x[i];
  return d;
}

IntMatrix TorsionProduct::matrix_of(const Endomorphism& phi) const {
  const ElementMap<TorsionProduct> map(*this, phi);
  const std::size_t n = gens_.size();
  IntMatrix d(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < rank_; ++i) d(i, j) = map.images()[j].x[i];
    for (std::size_t i = 0; i < torsion_.size(); ++i) d(rank_ + i, j) = map.images()[j].r[i];
  }
  return d;
}

Endomorphism TorsionProduct::endo_from_matrix(const IntMatrix& d) const {
  const std::size_t n = gens_.size();
  if (d.rows() != n || d.cols() != n)
    throw DimensionError("abelian_with_torsion: endomorphism matrix must be " + std::to_string(n) + "x" +
                         std::to_string(n));
  std::vector<Word> images;
  for (std::size_t j = 0; j < n; ++j) {
    Word w;
    for (std::size_t i = 0; i < n; ++i)
      if (d(i, j) != 0) w.letters.push_back({i, to_int64(d(i, j))});
    images.push_back(std::move(w));
  }
  return Endomorphism(gens_, std::move(images));
}

std::optional<bool> TorsionProduct::eventual_triviality_hint(const Endomorphism& phi) const {
  // Once the free block is nilpotent the orbit lives in a finite set and
  // iteration with cycle detection decides the question.
  if (rank_ > 0 && !is_nilpotent(free_matrix(phi))) return false;
  return std::nullopt;
}

bool TorsionProduct::in_subgroup(const Element& e) const {
  if (rank_ == 0) return e == identity();
  for (std::size_t i = 1; i < rank_; ++i)
    if (e.x[i] != 0) return false;
  for (const auto& v : e.r)
    if (v != 0) return false;
  return true;
}

}  // namespace endogrowth
