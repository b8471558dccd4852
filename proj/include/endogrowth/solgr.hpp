#pragma once

// Sol-lattice endomorphisms: classification into types I/II/III, the closed
// form for GR, fiber length functionals and the empirical estimator.

#include <optional>
#include <string>
#include <vector>

#include "endogrowth/ball.hpp"
#include "endogrowth/exactlin.hpp"
#include "endogrowth/families/sol.hpp"

namespace endogrowth {

/// Length of the word tau^n a^(A^-n y) tau^-n minimized over the shift n.
struct LengthMin {
  BigInt value;
  long shift = 0;
};

/// min over n of 2|n| + ||A^-n y||_1, n >= 0 by default. The search stops once
/// 2n alone, or a certified lower bound on the growing eigencomponent, reaches
/// the incumbent.
LengthMin sol_length_upper(const IntMatrix& A, const std::vector<BigInt>& y,
                           ShiftRange shifts = ShiftRange::nonnegative);

/// The word realizing a LengthMin (generators a1 = 0, a2 = 1, tau = 2).
NormalWord sol_fiber_word(const IntMatrix& A, const std::vector<BigInt>& y, const LengthMin& lm);

enum class SolType { I, II, III };
std::string to_string(SolType t);

/// theta(a^v) = a^(M v), theta(tau) = a1^p a2^q tau^m with m = 1 (type I),
/// m = -1 (type II) or |m| != 1 and M = 0 (type III).
struct SolEndo {
  SolType type = SolType::I;
  IntMatrix M = IntMatrix::zero(2, 2);
  BigInt p, q;
  BigInt m = 1;
};

/// Validates phi against the relators and sorts it into a type.
SolEndo classify_endo(const Sol& g, const Endomorphism& phi);

/// Endomorphism from the shortcut form {M, p, q, tau_exp}.
Endomorphism sol_endo_from_shortcut(const Sol& g, const IntMatrix& M, const BigInt& p, const BigInt& q,
                                    const BigInt& tau_exp);

/// Eigenvalues of A (alpha > 1 > beta) and of a matrix M commuting with A,
/// labeled by eigendirection: mu acts on the alpha-eigenvector of A, nu on the
/// beta-eigenvector. M = x I + y A with rational x, y.
struct EigenData {
  double alpha = 0, beta = 0;
  double mu = 0, nu = 0;
  double err = 0;  // bound on the floating error of mu and nu
  BigInt trace_m, det_m;
  mpq_class x, y;
};

/// Throws ValidationError when M does not commute with A.
EigenData eigen_data(const IntMatrix& A, const IntMatrix& M);

struct SolClosed {
  double value = 0;
  double abs_error = 0;
  std::string branch;          // "|m|", "|nu|", "sqrt|mu nu|"
  bool via_square = false;     // type II: computed as sqrt(GR(theta^2))
  bool tie = false;            // |mu| == |nu| decided exactly
  std::optional<EigenData> eigen;
  IntPolynomial char_poly_A, char_poly_M;
  /// GR if the length minimization were allowed shifts of both signs.
  double two_sided_value = 0;
};

SolClosed gr_sol_closed(const Sol& g, const SolEndo& e, double tol = kDefaultSpectralTol);

/// L_k upper bounds from the fiber length functional (every entry flagged as
/// an upper bound). For type I the tau entry is the smaller of the direct
/// and the telescoped word.
GrowthEstimate gr_sol_empirical(const Sol& g, const SolEndo& e, unsigned kmax,
                                ShiftRange shifts = ShiftRange::nonnegative);

}  // namespace endogrowth
