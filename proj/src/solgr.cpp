#include "endogrowth/solgr.hpp"

#include <cmath>
#include <limits>

#include "endogrowth/errors.hpp"

namespace endogrowth {

namespace {

using Vec = std::vector<BigInt>;

Vec apply2(const IntMatrix& m, const Vec& v) {
  return {m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}

/// Lower bound on ||z||_1 for every future iterate z in a direction where the
/// functional f is multiplied by a factor > 1 at each step, returned as a
/// natural log (-inf when no useful bound is available).
long double log_lower_bound(const Vec& v, long double f0, long double f1) {
  const std::size_t bits = std::max(mpz_sizeinbase(v[0].get_mpz_t(), 2), mpz_sizeinbase(v[1].get_mpz_t(), 2));
  const std::size_t shift = bits > 60 ? bits - 60 : 0;
  BigInt s0, s1;
  mpz_tdiv_q_2exp(s0.get_mpz_t(), v[0].get_mpz_t(), shift);
  mpz_tdiv_q_2exp(s1.get_mpz_t(), v[1].get_mpz_t(), shift);
  const long double x0 = s0.get_d(), x1 = s1.get_d();
  const long double fx = f0 * x0 + f1 * x1;
  // Generous margin for rounding in f and for the truncated low bits.
  const long double slack = 1e-12L * (std::fabs(f0 * x0) + std::fabs(f1 * x1)) + (std::fabs(f0) + std::fabs(f1)) * 2;
  const long double mag = std::fabs(fx) - slack;
  if (mag <= 0) return -std::numeric_limits<long double>::infinity();
  return std::log(mag) + static_cast<long double>(shift) * std::log(2.0L) -
         std::log(std::max(std::fabs(f0), std::fabs(f1)));
}

struct Search {
  BigInt best;
  long shift = 0;
};

/// Walks n = 1, 2, ... applying `step` (A^-1 or A) and updating the minimum.
void walk(const IntMatrix& step, int sign, Vec w, long double f0, long double f1, Search& s) {
  for (long n = 1;; ++n) {
    if (BigInt(2 * n) >= s.best) return;
    w = apply2(step, w);
    const BigInt cost = 2 * n + l1_norm(w);
    if (cost < s.best) {
      s.best = cost;
      s.shift = sign * n;
    }
    const BigInt room = s.best - 2 * n;
    if (room <= 0) return;
    const long double lb = log_lower_bound(w, f0, f1);
    if (lb >= std::log(room.get_d())) return;
  }
}

}  // namespace

LengthMin sol_length_upper(const IntMatrix& A, const std::vector<BigInt>& y, ShiftRange shifts) {
  if (A.rows() != 2 || A.cols() != 2 || y.size() != 2) throw DimensionError("sol_length_upper: 2x2 data expected");
  Search s{l1_norm(y), 0};
  if (s.best == 0) return {0, 0};
  const long double a = A(0, 0).get_d(), c = A(1, 0).get_d();
  const long double tr = A.trace().get_d();
  const long double alpha = (tr + std::sqrt(tr * tr - 4)) / 2, beta = 1 / alpha;
  // Left eigenvectors (c, lambda - a): f_beta grows by alpha under A^-1,
  // f_alpha grows by alpha under A.
  walk(unimodular_inverse(A), 1, y, c, beta - a, s);
  if (shifts == ShiftRange::both) walk(A, -1, y, c, alpha - a, s);
  return {s.best, s.shift};
}

NormalWord sol_fiber_word(const IntMatrix& A, const std::vector<BigInt>& y, const LengthMin& lm) {
  const long n = lm.shift;
  const IntMatrix step = n >= 0 ? unimodular_inverse(A) : A;
  Vec w = y;
  for (long i = 0; i < std::labs(n); ++i) w = apply2(step, w);
  NormalWord out;
  if (n != 0) out.push_back({2, BigInt(n)});
  if (w[0] != 0) out.push_back({0, w[0]});
  if (w[1] != 0) out.push_back({1, w[1]});
  if (n != 0) out.push_back({2, BigInt(-n)});
  return out;
}

std::string to_string(SolType t) {
  switch (t) {
    case SolType::I: return "I";
    case SolType::II: return "II";
    default: return "III";
  }
}

SolEndo classify_endo(const Sol& g, const Endomorphism& phi) {
  const auto verdict = check_homomorphism(g, phi);
  if (!verdict.valid)
    throw ValidationError("not an endomorphism: relator " + verdict.relator_text + " maps to " + verdict.witness);
  SolEndo e;
  e.M = g.fiber_matrix(phi);
  const Sol::Element tau = evaluate(g, phi.image(2));
  e.p = tau.v0;
  e.q = tau.v1;
  e.m = tau.t;
  const IntMatrix& A = g.A();
  if (e.m == 1) {
    e.type = SolType::I;
    if (!(A * e.M == e.M * A)) throw ClassificationError("type I requires AM = MA");
  } else if (e.m == -1) {
    e.type = SolType::II;
    if (!(e.M * A == g.A_inverse() * e.M)) throw ClassificationError("type II requires MA = A^-1 M");
  } else {
    e.type = SolType::III;
    if (!e.M.is_zero()) throw ClassificationError("type III requires theta(a_i) = 1");
  }
  return e;
}

Endomorphism sol_endo_from_shortcut(const Sol& g, const IntMatrix& M, const BigInt& p, const BigInt& q,
                                    const BigInt& tau_exp) {
  if (M.rows() != 2 || M.cols() != 2) throw DimensionError("sol shortcut: M must be 2x2");
  std::vector<Word> images;
  for (std::size_t i = 0; i < 2; ++i) {
    Word w;
    if (M(0, i) != 0) w.letters.push_back({0, to_int64(M(0, i))});
    if (M(1, i) != 0) w.letters.push_back({1, to_int64(M(1, i))});
    images.push_back(std::move(w));
  }
  Word t;
  if (p != 0) t.letters.push_back({0, to_int64(p)});
  if (q != 0) t.letters.push_back({1, to_int64(q)});
  if (tau_exp != 0) t.letters.push_back({2, to_int64(tau_exp)});
  images.push_back(std::move(t));
  return Endomorphism(g.gens(), std::move(images));
}

EigenData eigen_data(const IntMatrix& A, const IntMatrix& M) {
  if (A.rows() != 2 || M.rows() != 2 || A.cols() != 2 || M.cols() != 2)
    throw DimensionError("eigen_data: 2x2 matrices expected");
  EigenData d;
  if (A(0, 1) != 0)
    d.y = mpq_class(M(0, 1), A(0, 1));
  else
    d.y = mpq_class(M(1, 0), A(1, 0));
  d.y.canonicalize();
  d.x = mpq_class(M(0, 0)) - d.y * mpq_class(A(0, 0));
  const bool ok = mpq_class(M(0, 1)) == d.y * A(0, 1) && mpq_class(M(1, 0)) == d.y * A(1, 0) &&
                  mpq_class(M(1, 1)) == d.x + d.y * A(1, 1);
  if (!ok) throw ValidationError("eigen_data: M does not commute with A, eigendirections cannot be labeled");
  const long double tr = A.trace().get_d();
  const long double alpha = (tr + std::sqrt(tr * tr - 4)) / 2;
  const long double beta = 1 / alpha;
  const long double x = d.x.get_d(), y = d.y.get_d();
  d.alpha = static_cast<double>(alpha);
  d.beta = static_cast<double>(beta);
  d.mu = static_cast<double>(x + y * alpha);
  d.nu = static_cast<double>(x + y * beta);
  d.err = 1e-13 * (std::fabs(x) + std::fabs(y) * alpha + 1);
  d.trace_m = M.trace();
  d.det_m = M.det();
  return d;
}

namespace {

/// GR for a type I endomorphism with nonzero fiber matrix M.
SolClosed closed_type_one(const IntMatrix& A, const IntMatrix& M, double tol) {
  SolClosed r;
  r.char_poly_A = char_poly(A);
  r.char_poly_M = char_poly(M);
  const EigenData ed = eigen_data(A, M);
  r.eigen = ed;
  if (ed.det_m == 0)
    throw InvariantError("mu * nu = 0 with M != 0, impossible for a valid endomorphism");
  const int ys = sgn(ed.y), ts = sgn(ed.trace_m);
  r.tie = ys == 0 || ts == 0;
  // |mu|^2 - |nu|^2 = (mu - nu)(mu + nu) = y (alpha - beta) tr M
  const bool nu_branch = r.tie || ys * ts < 0;
  const long double root_det = std::sqrt(static_cast<long double>(BigInt(abs(ed.det_m)).get_d()));
  r.two_sided_value = static_cast<double>(root_det);
  if (nu_branch) {
    r.branch = "|nu|";
    const auto roots = certified_roots(r.char_poly_M, tol);
    const CertifiedRoot* best = nullptr;
    for (const auto& c : roots)
      if (!best || std::abs(c.value - std::complex<double>(ed.nu)) < std::abs(best->value - std::complex<double>(ed.nu)))
        best = &c;
    r.value = std::abs(best->value);
    r.abs_error = best->radius;
  } else {
    r.branch = "sqrt|mu nu|";
    r.value = static_cast<double>(root_det);
    r.abs_error = 4 * std::numeric_limits<double>::epsilon() * r.value;
  }
  return r;
}

}  // namespace

SolClosed gr_sol_closed(const Sol& g, const SolEndo& e, double tol) {
  if (e.type == SolType::III || e.M.is_zero()) {
    SolClosed r;
    r.char_poly_A = char_poly(g.A());
    r.char_poly_M = char_poly(e.M);
    r.branch = "|m|";
    r.value = BigInt(abs(e.m)).get_d();
    r.two_sided_value = r.value;
    return r;
  }
  if (e.type == SolType::I) return closed_type_one(g.A(), e.M, tol);
  // Type II: theta^2 is of type I with fiber matrix M^2.
  SolClosed sq = closed_type_one(g.A(), e.M * e.M, tol / 4);
  SolClosed r = sq;
  r.char_poly_M = char_poly(e.M);
  r.via_square = true;
  r.branch = "sqrt(GR(theta^2)), " + sq.branch;
  r.value = std::sqrt(sq.value);
  r.abs_error = sq.value > 0 ? sq.abs_error / (2 * std::sqrt(std::max(sq.value - sq.abs_error, 1e-300))) : 0;
  r.two_sided_value = std::sqrt(sq.two_sided_value);
  return r;
}

GrowthEstimate gr_sol_empirical(const Sol& g, const SolEndo& e, unsigned kmax, ShiftRange shifts) {
  GrowthEstimate table;
  table.gen_names = g.gens().names();
  const IntMatrix& A = g.A();
  auto fiber_len = [&](const BigInt& v0, const BigInt& v1) {
    return sol_length_upper(A, {v0, v1}, shifts).value;
  };
  auto push_row = [&](unsigned k, std::vector<BigInt> lens) {
    GrowthRow row;
    row.k = k;
    row.L = 0;
    row.provenance = Provenance::upper_bound;
    for (const auto& l : lens)
      if (l > row.L) row.L = l;
    row.per_gen = std::move(lens);
    row.per_gen_provenance.assign(row.per_gen.size(), Provenance::upper_bound);
    table.rows.push_back(std::move(row));
  };

  if (e.type == SolType::III) {
    // theta^k(tau) = (a^p tau^m)^(m^(k-1)) once theta kills the fiber.
    const BigInt first = fiber_len(e.p, e.q) + abs(e.m);
    BigInt tau_len = first;
    for (unsigned k = 1; k <= kmax; ++k) {
      if (k > 1) tau_len *= abs(e.m);
      push_row(k, {0, 0, tau_len});
    }
    return table;
  }

  const Endomorphism phi = sol_endo_from_shortcut(g, e.M, e.p, e.q, e.m);
  const ElementMap<Sol> map(g, phi);
  std::vector<Sol::Element> cur{g.generator(0), g.generator(1), g.generator(2)};
  Vec mj{e.p, e.q};  // M^j p
  BigInt telescoped = 0;
  for (unsigned k = 1; k <= kmax; ++k) {
    std::vector<BigInt> lens;
    for (auto& x : cur) {
      x = map(x);
      lens.push_back(fiber_len(x.v0, x.v1) + abs(x.t));
    }
    if (e.type == SolType::I) {
      // a^p (tau a^(A^-1 M p) tau^-1) ... tau, each factor at its own best shift
      telescoped += fiber_len(mj[0], mj[1]);
      mj = apply2(e.M, mj);
      if (telescoped + 1 < lens[2]) lens[2] = telescoped + 1;
    }
    push_row(k, std::move(lens));
  }
  return table;
}

}  // namespace endogrowth
