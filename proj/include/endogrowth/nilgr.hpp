#pragma once

// Closed-form growth rates for the linear families: nilpotent groups through
// their linearization blocks, free abelian groups, abelian groups with
// torsion and the Klein bottle group through a finite-index subgroup.

#include <optional>
#include <string>
#include <vector>

#include "endogrowth/exactlin.hpp"
#include "endogrowth/families/abelian.hpp"
#include "endogrowth/families/heisenberg.hpp"
#include "endogrowth/families/klein.hpp"
#include "endogrowth/families/nil2.hpp"
#include "endogrowth/machine.hpp"

namespace endogrowth {

struct Block {
  unsigned weight = 1;
  IntMatrix matrix = IntMatrix::zero(1, 1);
};

/// Diagonal blocks D_1..D_c with weights 1..c, strictly increasing from 1.
using BlockList = std::vector<Block>;

struct BlockCertificate {
  unsigned weight = 1;
  SpectralResult sp;
  double root = 0;  // sp^(1/weight)
};

struct BlocksResult {
  double value = 0;
  double abs_error = 0;
  std::vector<BlockCertificate> blocks;
};

/// max_j sp(D_j)^(1/j)
BlocksResult gr_from_blocks(const BlockList& blocks, double tol = kDefaultSpectralTol);

/// Exponent sums of the tau-generator images; phi is validated first.
IntMatrix abelianization_matrix(const Heisenberg& g, const Endomorphism& phi);
IntMatrix abelianization_matrix(const Nil2& g, const Endomorphism& phi);

/// Induced map on the central generators, read off commutators of images.
IntMatrix induced_center_matrix(const Heisenberg& g, const Endomorphism& phi);
IntMatrix induced_center_matrix(const Nil2& g, const Endomorphism& phi);

struct NilReport {
  IntMatrix d1 = IntMatrix::zero(1, 1);
  std::optional<IntMatrix> d2;  // absent when some central image is not central
  std::string d2_note;
  SpectralResult sp1;
  std::optional<SpectralResult> sp2;
  double value = 0;  // GR = sp(D1)
  double abs_error = 0;
  double block_max = 0;  // max(sp(D1), sp(D2)^(1/2)) as a cross-check
  bool ko_holds = true;  // sp(D2) <= sp(D1)^2 + tol
};

NilReport gr_nilpotent_closed(const Heisenberg& g, const Endomorphism& phi, double tol = kDefaultSpectralTol);
NilReport gr_nilpotent_closed(const Nil2& g, const Endomorphism& phi, double tol = kDefaultSpectralTol);

/// Closed form for an abelian-type family.
struct LinearClosed {
  double value = 0;
  double abs_error = 0;
  std::string method;
  IntMatrix matrix = IntMatrix::zero(1, 1);  // the matrix whose spectral radius is taken
  SpectralResult sp;
  std::optional<bool> torsion_nontrivial;  // torsion groups only
};

/// sp(D)
LinearClosed gr_abelian_closed(const FreeAbelian& g, const Endomorphism& phi, double tol = kDefaultSpectralTol);
/// sp(D_free) unless D_free is nilpotent; then 1 or 0 by eventual triviality.
LinearClosed gr_torsion_closed(const TorsionProduct& g, const Endomorphism& phi, double tol = kDefaultSpectralTol);
/// sp of the restriction to <x, y^2>, which equals max(|q|, |r|).
LinearClosed gr_klein_closed(const Klein& g, const Endomorphism& phi, double tol = kDefaultSpectralTol);

/// Throws ValidationError naming the violated relator.
template <NormalFormMachine M>
void require_endomorphism(const M& m, const Endomorphism& phi) {
  const auto v = check_homomorphism(m, phi);
  if (!v.valid) throw ValidationError("not an endomorphism: relator " + v.relator_text + " maps to " + v.witness);
}

}  // namespace endogrowth
