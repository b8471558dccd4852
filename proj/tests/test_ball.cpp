#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "endogrowth/ball.hpp"
#include "endogrowth/families/any.hpp"

using namespace endogrowth;

namespace {

// Plain BFS over an arbitrary ordered state type; returns sphere sizes.
template <class S, class Step>
std::vector<std::size_t> oracle_spheres(const S& start, const std::vector<Step>& steps, std::size_t R,
                                        std::map<S, unsigned>* lengths = nullptr) {
  std::set<S> seen{start};
  std::vector<S> frontier{start};
  std::vector<std::size_t> spheres{1};
  if (lengths) (*lengths)[start] = 0;
  for (std::size_t r = 1; r <= R; ++r) {
    std::vector<S> next;
    for (const auto& x : frontier)
      for (const auto& step : steps) {
        S y = step(x);
        if (seen.insert(y).second) {
          if (lengths) (*lengths)[y] = static_cast<unsigned>(r);
          next.push_back(y);
        }
      }
    spheres.push_back(next.size());
    frontier = std::move(next);
  }
  return spheres;
}

template <class M>
std::vector<std::size_t> library_spheres(const Ball<M>& b) {
  std::vector<std::size_t> s;
  for (std::size_t r = 0; r <= b.radius(); ++r) s.push_back(b.sphere_size(r));
  return s;
}

// B(1,n) as pairs (q, t) acting by x -> q + n^-t x, right multiplication by
// a^{+-1} and b^{+-1}.
using BsState = std::pair<mpq_class, long>;
struct BsStateLess {
  bool operator()(const BsState& a, const BsState& b) const {
    return a.second != b.second ? a.second < b.second : cmp(a.first, b.first) < 0;
  }
};

}  // namespace

TEST_CASE("Z^2 balls are diamonds") {
  const FreeAbelian z2(2);
  const auto b = enumerate_ball(z2, 12);
  for (std::size_t r = 0; r <= 12; ++r) CHECK(b.count(r) == 2 * r * r + 2 * r + 1);
  CHECK(b.length(FreeAbelian::Element{{3, -2}}) == 5u);
  CHECK_FALSE(b.length(FreeAbelian::Element{{13, 0}}).has_value());
  CHECK_FALSE(b.capped());
}

TEST_CASE("Heisenberg balls against an independent BFS") {
  const Heisenberg h(1);
  CHECK(enumerate_ball(h, 1).size() == 7);
  using T = std::array<long, 3>;
  std::vector<std::function<T(const T&)>> steps;
  // right multiplication in the unitriangular model: (m, n, l) * g
  for (int s : {1, -1}) {
    steps.push_back([s](const T& x) { return T{x[0] + s, x[1], x[2] + x[1] * s}; });
    steps.push_back([s](const T& x) { return T{x[0], x[1] + s, x[2]}; });
    steps.push_back([s](const T& x) { return T{x[0], x[1], x[2] + s}; });
  }
  std::map<T, unsigned> lengths;
  const auto oracle = oracle_spheres(T{0, 0, 0}, steps, 8, &lengths);
  const auto b = enumerate_ball(h, 8);
  CHECK(library_spheres(b) == oracle);
  CHECK(std::vector<std::size_t>(oracle.begin(), oracle.begin() + 5) == std::vector<std::size_t>{1, 6, 22, 54, 106});
  for (const auto& [x, l] : lengths) CHECK(b.length(Heisenberg::Element{x[0], x[1], x[2]}) == l);
  CHECK(enumerate_ball(h, 10).size() == 4533);

  // polynomial growth of degree 4: doubling the radius multiplies by about 16
  const double ratio = static_cast<double>(enumerate_ball(h, 10).size()) / enumerate_ball(h, 5).size();
  CHECK(std::log2(ratio) > 3.0);
  CHECK(std::log2(ratio) < 4.5);
}

TEST_CASE("Baumslag-Solitar balls against rational affine BFS") {
  for (long n : {2, 3}) {
    const BaumslagSolitar bs(n);
    std::vector<std::function<BsState(const BsState&)>> steps;
    for (int s : {1, -1}) {
      // (q, t) a^s = (q, t + s); (q, t) b^s = (q + s n^-t, t)
      steps.push_back([s](const BsState& x) { return BsState{x.first, x.second + s}; });
      steps.push_back([s, n](const BsState& x) {
        mpq_class step = s;
        for (long i = 0; i < std::abs(x.second); ++i) step = x.second > 0 ? mpq_class(step / n) : mpq_class(step * n);
        return BsState{mpq_class(x.first + step), x.second};
      });
    }
    // std::set with a custom comparator, same BFS
    std::set<BsState, BsStateLess> seen{BsState{0, 0}};
    std::vector<BsState> frontier{BsState{0, 0}};
    std::vector<std::size_t> oracle{1};
    for (int r = 1; r <= 9; ++r) {
      std::vector<BsState> next;
      for (const auto& x : frontier)
        for (const auto& st : steps) {
          BsState y = st(x);
          if (seen.insert(y).second) next.push_back(y);
        }
      oracle.push_back(next.size());
      frontier = std::move(next);
    }
    CHECK(library_spheres(enumerate_ball(bs, 9)) == oracle);
    if (n == 2) {
      CHECK(std::vector<std::size_t>(oracle.begin(), oracle.begin() + 7) ==
            std::vector<std::size_t>{1, 4, 12, 26, 50, 98, 184});
    }
  }
  CHECK(enumerate_ball(BaumslagSolitar(2), 12).size() == 13513);
}

TEST_CASE("word_length examples") {
  const BaumslagSolitar bs(2);
  const auto b = bs.generator(1);
  const auto b2 = bs.multiply(b, b);
  const auto b4 = bs.multiply(b2, b2);
  // a^-1 b a = b^2 has length 3, but the plain power b b is shorter
  CHECK(evaluate(bs, parse_word(bs.gens(), "a^-1 b a")) == b2);
  CHECK(word_length(bs, b2, 3) == 2u);
  CHECK(enumerate_ball(bs, 3).length(b2) == 2u);
  CHECK(word_length(bs, b4, 6) == 4u);
  CHECK(evaluate(bs, parse_word(bs.gens(), "a^-2 b a^2")) == b4);

  const Heisenberg h1(1);
  CHECK(word_length(h1, Heisenberg::Element{0, 0, -1}, 3) == 1u);
  const Heisenberg h2(2);
  const Heisenberg::Element c{0, 0, -2};
  CHECK(evaluate(h2, parse_word(h2.gens(), "a1^-1 a2^-1 a1 a2")) == c);
  CHECK(word_length(h2, c, 5) == 2u);  // a3^-1 a3^-1 beats the commutator
  CHECK(word_length(h2, h2.identity(), 0) == 0u);
  CHECK_FALSE(word_length(h2, Heisenberg::Element{0, 0, 9}, 2).has_value());

  // word_length agrees with the ball on every element of a small ball
  const auto ball = enumerate_ball(h2, 5);
  for (std::size_t i = 0; i < ball.size(); i += 7) CHECK(word_length(h2, ball.element(i), 5) == ball.length_at(i));
}

TEST_CASE("distortion tables") {
  const FreeAbelian z2(2);
  const auto t = distortion<FreeAbelian>(
      z2, [&](const auto& e) { return z2.in_subgroup(e); }, [&](const auto& e) { return z2.inner_length(e); }, 12);
  REQUIRE(t.rows.size() == 13);
  for (const auto& row : t.rows) CHECK(row.delta == row.n);

  const BaumslagSolitar bs(2);
  const auto d = distortion<BaumslagSolitar>(
      bs, [&](const auto& e) { return bs.in_subgroup(e); }, [&](const auto& e) { return bs.inner_length(e); }, 9);
  CHECK(d.rows[3].delta == 3);
  for (std::size_t i = 1; i < d.rows.size(); ++i) CHECK(d.rows[i].delta >= d.rows[i - 1].delta);
  // the doubling b^k = a^-1 b^(k/2) a makes the ratio delta(n) / n grow
  const long expected[] = {0, 1, 2, 3, 4, 6, 8, 12, 16, 24};
  for (std::size_t n = 0; n <= 9; ++n) CHECK(d.rows[n].delta == expected[n]);
  CHECK(d.rows[9].delta >= 2 * 9);

  const Heisenberg h(1);
  const auto w = parse_word(h.gens(), "a1^5 a2^5 a1^-5 a2^-5");
  CHECK(w.length() == 20);
  CHECK(abs(evaluate(h, w).l) == 25);
  const auto g = distortion<Heisenberg>(
      h, [&](const auto& e) { return h.in_subgroup(e); }, [&](const auto& e) { return h.inner_length(e); }, 12);
  for (std::size_t i = 1; i < g.rows.size(); ++i) CHECK(g.rows[i].delta >= g.rows[i - 1].delta);
  CHECK(g.rows[12].delta >= 9);  // [a1^3, a2^3]
}

TEST_CASE("L_k tables and estimates") {
  const TorsionProduct counter(1, {BigInt(2)}, {"alpha", "beta"});
  const Endomorphism phi(counter.gens(), {Word{}, Word{{1, 1}}});
  const auto t = L_k_table(counter, phi, 32, 4);
  for (const auto& row : t.rows) {
    CHECK(row.L == 1);
    CHECK(row.provenance == Provenance::exact);
  }
  const auto s = gr_estimate(t);
  for (double x : s.running_inf) CHECK(x == 1.0);
  CHECK(s.certified);
  CHECK(s.trend == "constant");

  const FreeAbelian z2(2);
  const auto diag = L_k_table(z2, z2.endo_from_matrix(IntMatrix{{2, 0}, {0, 1}}), 12, 6);
  for (const auto& row : diag.rows) CHECK(row.L == ipow(BigInt(2), row.k));
  for (double x : gr_estimate(diag).running_inf) CHECK(std::abs(x - 2.0) < 1e-12);
  CHECK_FALSE(gr_estimate(diag).certified);  // 2^k leaves B(6) at k = 3

  const BaumslagSolitar bs(2);
  const Endomorphism sq(bs.gens(), {Word{{0, 1}}, Word{{1, 2}}});
  const auto bt = L_k_table(bs, sq, 4, 10);
  const unsigned expected[] = {2, 4, 6, 8};
  for (const auto& row : bt.rows) {
    CHECK(row.provenance == Provenance::exact);
    CHECK(row.L == expected[row.k - 1]);
    CHECK(row.L <= 2 * row.k + 1);
  }
  const auto bsum = gr_estimate(bt);
  CHECK(bsum.trend == "strictly_decreasing");
  for (std::size_t i = 1; i < bsum.running_inf.size(); ++i) CHECK(bsum.running_inf[i] <= bsum.running_inf[i - 1]);

  // upper-bound entries never undercut the exact lengths
  const Heisenberg h(1);
  const Endomorphism ex1(h.gens(), {parse_word(h.gens(), "a1^2 a2"), parse_word(h.gens(), "a1 a2"), Word{{2, 1}}});
  const auto exact = L_k_table(h, ex1, 3, 9);
  const auto upper = L_k_upper_table(h, ex1, 3);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t g = 0; g < 3; ++g) CHECK(upper.rows[k].per_gen[g] >= exact.rows[k].per_gen[g]);
}

TEST_CASE("caps raise a resource error carrying the completed radius") {
  const Heisenberg h(1);
  try {
    enumerate_ball(h, 10, 100);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(e.completed_radius() == 3);  // |B(3)| = 83, |B(4)| = 189
    CHECK(std::string(e.what()).find("radius 10") != std::string::npos);
  }
  const auto partial = grow_ball(h, 10, 100);
  CHECK(partial.capped());
  CHECK(partial.radius() == 3);
  CHECK_THROWS_AS(word_length(h, Heisenberg::Element{0, 0, 1000}, 50, 1000), ResourceError);
}
