#pragma once

// Cayley balls by breadth-first search over normal forms, L_k tables, the
// empirical growth-rate estimator and subgroup distortion profiles.

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "endogrowth/bigint.hpp"
#include "endogrowth/errors.hpp"
#include "endogrowth/machine.hpp"

namespace endogrowth {

inline constexpr std::size_t kDefaultCap = 5'000'000;

/// B(R): every element of word length <= R with its exact length. Elements
/// are stored once, in BFS order, grouped by sphere.
template <NormalFormMachine M>
class Ball {
 public:
  using Element = typename M::Element;

  std::size_t radius() const noexcept { return offsets_.size() - 2; }
  std::size_t size() const noexcept { return store_->elems.size(); }
  /// Elements of length exactly r.
  std::size_t sphere_size(std::size_t r) const { return offsets_.at(r + 1) - offsets_.at(r); }
  /// |B(r)|
  std::size_t count(std::size_t r) const { return offsets_.at(r + 1); }
  const std::vector<Element>& elements() const noexcept { return store_->elems; }
  const Element& element(std::size_t i) const { return store_->elems[i]; }
  /// Length of the i-th stored element.
  unsigned length_at(std::size_t i) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), i);
    return static_cast<unsigned>(it - offsets_.begin() - 1);
  }
  std::optional<unsigned> length(const Element& e) const {
    auto it = store_->index.find(e);
    if (it == store_->index.end()) return std::nullopt;
    return length_at(*it);
  }
  bool capped() const noexcept { return capped_; }

 private:
  template <NormalFormMachine MM>
  friend Ball<MM> grow_ball(const MM&, std::size_t, std::size_t);

  struct Store;
  // Indices into Store::elems, hashed and compared through the elements;
  // transparent so lookups by Element need no temporary copy.
  struct IndexHash {
    using is_transparent = void;
    const Store* s;
    std::size_t operator()(std::uint32_t i) const { return hash_value(s->elems[i]); }
    std::size_t operator()(const Element& e) const { return hash_value(e); }
  };
  struct IndexEq {
    using is_transparent = void;
    const Store* s;
    bool operator()(std::uint32_t a, std::uint32_t b) const { return s->elems[a] == s->elems[b]; }
    bool operator()(const Element& a, std::uint32_t b) const { return a == s->elems[b]; }
    bool operator()(std::uint32_t a, const Element& b) const { return s->elems[a] == b; }
  };
  struct Store {
    std::vector<Element> elems;
    std::unordered_set<std::uint32_t, IndexHash, IndexEq> index;
    Store() : index(16, IndexHash{this}, IndexEq{this}) {}
  };

  std::unique_ptr<Store> store_ = std::make_unique<Store>();
  std::vector<std::size_t> offsets_{0};  // offsets_[r] = first index of sphere r
  bool capped_ = false;
};

/// Generators and inverses in the fixed order g1, g1^-1, g2, g2^-1, ...
template <NormalFormMachine M>
std::vector<typename M::Element> step_elements(const M& m) {
  std::vector<typename M::Element> s;
  for (std::size_t i = 0; i < m.gens().size(); ++i) {
    s.push_back(m.generator(i));
    s.push_back(m.inverse(m.generator(i)));
  }
  return s;
}

/// BFS up to radius R, stopping early (with capped() set and radius() the
/// largest completed radius) once more than `cap` elements would be stored.
template <NormalFormMachine M>
Ball<M> grow_ball(const M& m, std::size_t R, std::size_t cap = kDefaultCap) {
  Ball<M> ball;
  auto& elems = ball.store_->elems;
  auto& index = ball.store_->index;
  elems.push_back(m.identity());
  index.insert(0);
  ball.offsets_.push_back(1);
  const auto steps = step_elements(m);
  for (std::size_t r = 0; r < R; ++r) {
    const std::size_t lo = ball.offsets_[r], hi = ball.offsets_[r + 1];
    for (std::size_t i = lo; i < hi; ++i) {
      for (const auto& s : steps) {
        auto y = m.multiply(elems[i], s);
        if (index.find(y) != index.end()) continue;
        elems.push_back(std::move(y));
        index.insert(static_cast<std::uint32_t>(elems.size() - 1));
        if (elems.size() > cap) {
          // Roll back the partial sphere.
          for (std::size_t j = hi; j < elems.size(); ++j) index.erase(static_cast<std::uint32_t>(j));
          elems.resize(hi);
          ball.capped_ = true;
          return ball;
        }
      }
    }
    ball.offsets_.push_back(elems.size());
  }
  return ball;
}

/// As grow_ball, but exceeding the cap is a ResourceError carrying the
/// largest completed radius.
template <NormalFormMachine M>
Ball<M> enumerate_ball(const M& m, std::size_t R, std::size_t cap = kDefaultCap) {
  Ball<M> b = grow_ball(m, R, cap);
  if (b.capped())
    throw ResourceError("ball of radius " + std::to_string(R) + " exceeds the cap of " + std::to_string(cap) +
                            " elements (completed radius " + std::to_string(b.radius()) + ")",
                        b.radius(), b.size());
  return b;
}

/// Exact word length by BFS with early stop; nullopt when e is not within R.
template <NormalFormMachine M>
std::optional<unsigned> word_length(const M& m, const typename M::Element& e, std::size_t R,
                                    std::size_t cap = kDefaultCap) {
  using Element = typename M::Element;
  if (e == m.identity()) return 0u;
  std::unordered_set<Element, ElementHash> seen{m.identity()};
  std::vector<Element> frontier{m.identity()};
  const auto steps = step_elements(m);
  for (std::size_t r = 1; r <= R; ++r) {
    std::vector<Element> next;
    for (const auto& x : frontier)
      for (const auto& s : steps) {
        Element y = m.multiply(x, s);
        if (y == e) return static_cast<unsigned>(r);
        if (seen.insert(y).second) {
          next.push_back(std::move(y));
          if (seen.size() > cap)
            throw ResourceError("word length search exceeds the cap of " + std::to_string(cap) + " elements",
                                r - 1, seen.size());
        }
      }
    frontier = std::move(next);
  }
  return std::nullopt;
}

// ---- growth tables ----------------------------------------------------------

enum class Provenance { exact, upper_bound };

std::string to_string(Provenance p);

struct GrowthRow {
  unsigned k = 0;
  BigInt L;                            // max over generators
  Provenance provenance = Provenance::exact;
  std::vector<BigInt> per_gen;         // L(phi^k(s_i))
  std::vector<Provenance> per_gen_provenance;
};

struct GrowthEstimate {
  std::vector<std::string> gen_names;
  std::vector<GrowthRow> rows;  // k = 1..kmax in order
};

struct GrowthSummary {
  std::vector<double> roots;         // L_k^(1/k)
  std::vector<double> running_inf;   // min_{j<=k} L_j^(1/j)
  double estimate = 0;               // running_inf at the last k
  bool certified = false;            // every entry exact, so estimate >= GR is proven
  std::vector<double> per_gen_limit; // L(phi^kmax(s_i))^(1/kmax)
  double max_lim = 0;                // max of per_gen_limit
  std::string trend;                 // strictly_decreasing | nonincreasing | constant | fluctuating
};

GrowthSummary gr_estimate(const GrowthEstimate& table);

/// Computes L_k for k = 1..kmax. Lengths come from B(R) when the image lies in
/// it (exact) and from the family length functional otherwise (upper bound).
template <NormalFormMachine M>
GrowthEstimate L_k_table(const M& m, const Endomorphism& phi, unsigned kmax, std::size_t R,
                         std::size_t cap = kDefaultCap) {
  const ElementMap<M> map(m, phi);
  const Ball<M> ball = enumerate_ball(m, R, cap);
  GrowthEstimate table;
  table.gen_names = m.gens().names();
  std::vector<typename M::Element> cur;
  for (std::size_t i = 0; i < m.gens().size(); ++i) cur.push_back(m.generator(i));
  for (unsigned k = 1; k <= kmax; ++k) {
    GrowthRow row;
    row.k = k;
    row.L = 0;
    for (auto& x : cur) {
      x = map(x);
      BigInt len;
      Provenance p = Provenance::exact;
      if (auto l = ball.length(x)) {
        len = *l;
      } else {
        len = m.length_upper(x);
        p = Provenance::upper_bound;
      }
      if (len > row.L) row.L = len;
      if (p == Provenance::upper_bound) row.provenance = Provenance::upper_bound;
      row.per_gen.push_back(len);
      row.per_gen_provenance.push_back(p);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

/// L_k from the family length functional alone (every entry an upper bound).
template <NormalFormMachine M>
GrowthEstimate L_k_upper_table(const M& m, const Endomorphism& phi, unsigned kmax) {
  const ElementMap<M> map(m, phi);
  GrowthEstimate table;
  table.gen_names = m.gens().names();
  std::vector<typename M::Element> cur;
  for (std::size_t i = 0; i < m.gens().size(); ++i) cur.push_back(m.generator(i));
  for (unsigned k = 1; k <= kmax; ++k) {
    GrowthRow row;
    row.k = k;
    row.L = 0;
    row.provenance = Provenance::upper_bound;
    for (auto& x : cur) {
      x = map(x);
      BigInt len = x == m.identity() ? BigInt(0) : m.length_upper(x);
      if (len > row.L) row.L = len;
      row.per_gen.push_back(len);
      row.per_gen_provenance.push_back(Provenance::upper_bound);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

// ---- distortion -------------------------------------------------------------

struct DistortionRow {
  std::size_t n = 0;
  std::size_t count = 0;  // |B(n)|
  BigInt delta;           // max inner length over subgroup elements in B(n)
  std::string witness;    // formatted element attaining delta
};

struct DistortionTable {
  std::string subgroup;
  std::vector<DistortionRow> rows;
};

template <NormalFormMachine M>
DistortionTable distortion(const M& m, const std::function<bool(const typename M::Element&)>& in_subgroup,
                           const std::function<BigInt(const typename M::Element&)>& inner_length,
                           std::size_t R, std::size_t cap = kDefaultCap) {
  const Ball<M> ball = enumerate_ball(m, R, cap);
  DistortionTable table;
  BigInt best = 0;
  const typename M::Element* witness = &ball.element(0);
  for (std::size_t n = 0; n <= R; ++n) {
    for (std::size_t i = n == 0 ? 0 : ball.count(n - 1); i < ball.count(n); ++i) {
      const auto& e = ball.element(i);
      if (!in_subgroup(e)) continue;
      const BigInt l = inner_length(e);
      if (l > best || (l == best && e < *witness)) {
        best = l;
        witness = &e;
      }
    }
    table.rows.push_back({n, ball.count(n), best, m.format(*witness)});
  }
  return table;
}

std::string growth_csv(const GrowthEstimate& table, const GrowthSummary& summary);
std::string distortion_csv(const DistortionTable& table);

}  // namespace endogrowth
