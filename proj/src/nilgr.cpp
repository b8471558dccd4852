#include "endogrowth/nilgr.hpp"

#include <algorithm>
#include <cmath>

#include "endogrowth/errors.hpp"

namespace endogrowth {

namespace {

/// Error of x^(1/w) given |x - x_true| <= err.
double root_error(double x, double err, unsigned w) {
  if (w == 1) return err;
  const double lo = std::max(x - err, 0.0);
  return std::max(std::pow(x + err, 1.0 / w) - std::pow(x, 1.0 / w), std::pow(x, 1.0 / w) - std::pow(lo, 1.0 / w));
}

template <class G>
typename G::Element commutator_of(const G& g, const typename G::Element& u, const typename G::Element& v) {
  return g.multiply(g.multiply(g.inverse(u), g.inverse(v)), g.multiply(u, v));
}

template <class G>
NilReport nil_report(const G& g, const Endomorphism& phi, double tol) {
  NilReport r;
  r.d1 = abelianization_matrix(g, phi);
  r.sp1 = spectral_radius(r.d1, tol);
  r.value = r.sp1.value;
  r.abs_error = r.sp1.abs_error;
  r.block_max = r.value;
  try {
    r.d2 = induced_center_matrix(g, phi);
  } catch (const ValidationError& e) {
    r.d2_note = e.what();
  }
  if (r.d2) {
    r.sp2 = spectral_radius(*r.d2, tol);
    r.block_max = std::max(r.block_max, std::sqrt(r.sp2->value));
    const double slack = 1e-9 + r.sp2->abs_error + 2 * r.sp1.value * r.sp1.abs_error + tol;
    r.ko_holds = r.sp2->value <= r.sp1.value * r.sp1.value + slack;
  }
  return r;
}

}  // namespace

BlocksResult gr_from_blocks(const BlockList& blocks, double tol) {
  if (blocks.empty()) throw ValidationError("block list is empty");
  BlocksResult out;
  unsigned prev = 0;
  for (const auto& b : blocks) {
    if (prev == 0 ? b.weight != 1 : b.weight <= prev)
      throw ValidationError("block weights must increase strictly from 1");
    if (b.matrix.rows() != b.matrix.cols()) throw DimensionError("blocks must be square");
    prev = b.weight;
    BlockCertificate c;
    c.weight = b.weight;
    c.sp = spectral_radius(b.matrix, tol);
    c.root = std::pow(c.sp.value, 1.0 / b.weight);
    const double err = root_error(c.sp.value, c.sp.abs_error, b.weight);
    if (c.root > out.value || (c.root == out.value && err > out.abs_error)) {
      out.value = c.root;
      out.abs_error = err;
    }
    out.blocks.push_back(std::move(c));
  }
  return out;
}

IntMatrix abelianization_matrix(const Heisenberg& g, const Endomorphism& phi) {
  require_endomorphism(g, phi);
  return g.abelianization(phi);
}

IntMatrix abelianization_matrix(const Nil2& g, const Endomorphism& phi) {
  require_endomorphism(g, phi);
  return g.abelianization(phi);
}

IntMatrix induced_center_matrix(const Heisenberg& g, const Endomorphism& phi) {
  require_endomorphism(g, phi);
  const ElementMap<Heisenberg> map(g, phi);
  // [a1, a2] = a3^-k, so [phi(a1), phi(a2)] = phi(a3)^-k.
  const auto c = commutator_of(g, map.images()[0], map.images()[1]);
  if (c.m != 0 || c.n != 0 || !mpz_divisible_p(c.l.get_mpz_t(), g.k().get_mpz_t()))
    throw ValidationError("heisenberg: commutator of images is not a power of a3^k");
  IntMatrix d(1, 1);
  d(0, 0) = -c.l / g.k();
  return d;
}

IntMatrix induced_center_matrix(const Nil2& g, const Endomorphism& phi) {
  require_endomorphism(g, phi);
  return g.central_matrix(phi);
}

NilReport gr_nilpotent_closed(const Heisenberg& g, const Endomorphism& phi, double tol) {
  return nil_report(g, phi, tol);
}

NilReport gr_nilpotent_closed(const Nil2& g, const Endomorphism& phi, double tol) {
  return nil_report(g, phi, tol);
}

LinearClosed gr_abelian_closed(const FreeAbelian& g, const Endomorphism& phi, double tol) {
  LinearClosed r;
  r.method = "sp(D)";
  r.matrix = g.matrix_of(phi);
  r.sp = spectral_radius(r.matrix, tol);
  r.value = r.sp.value;
  r.abs_error = r.sp.abs_error;
  return r;
}

LinearClosed gr_torsion_closed(const TorsionProduct& g, const Endomorphism& phi, double tol) {
  require_endomorphism(g, phi);
  LinearClosed r;
  r.matrix = g.free_matrix(phi);
  r.sp = spectral_radius(r.matrix, tol);
  if (g.rank() > 0 && !is_nilpotent(r.matrix)) {
    // A non-nilpotent integer matrix has sp >= 1, which dominates the torsion part.
    r.method = "sp(D_free)";
    r.value = r.sp.value;
    r.abs_error = r.sp.abs_error;
    return r;
  }
  const auto et = eventually_trivial(g, phi);
  if (et.kind == EventualTriviality::Kind::unknown)
    throw UncertifiedError("abelian_with_torsion: eventual triviality undecided");
  r.torsion_nontrivial = et.kind == EventualTriviality::Kind::no;
  r.method = "eventual triviality (D_free nilpotent)";
  r.value = *r.torsion_nontrivial ? 1.0 : 0.0;
  return r;
}

LinearClosed gr_klein_closed(const Klein& g, const Endomorphism& phi, double tol) {
  require_endomorphism(g, phi);
  LinearClosed r;
  r.method = "sp(restriction to <x, y^2>)";
  r.matrix = g.restricted_matrix(phi);
  r.sp = spectral_radius(r.matrix, tol);
  r.value = r.sp.value;
  r.abs_error = r.sp.abs_error;
  return r;
}

}  // namespace endogrowth
