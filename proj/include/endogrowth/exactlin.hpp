#pragma once

// Exact integer linear algebra and certified spectral radii.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "endogrowth/bigint.hpp"

namespace endogrowth {

/// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
  /// Matrix whose i-th column is cols[i].
  static IntMatrix from_columns(const std::vector<std::vector<BigInt>>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<BigInt> column(std::size_t j) const;
  std::vector<BigInt> row(std::size_t i) const;

  IntMatrix transpose() const;
  BigInt trace() const;
  /// Fraction-free (Bareiss) determinant.
  BigInt det() const;
  bool is_zero() const;

  /// this * v for a column vector v.
  std::vector<BigInt> apply(const std::vector<BigInt>& v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const BigInt& s, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string str() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

/// Polynomial over the integers; coefficients in ascending degree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& coeff(std::size_t i) const;
  const BigInt& leading() const;

  IntPolynomial derivative() const;
  BigInt evaluate(const BigInt& x) const;
  IntMatrix evaluate(const IntMatrix& m) const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Human-readable form in the variable `x`, highest degree first.
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Content (gcd of coefficients, sign of the leading coefficient).
BigInt content(const IntPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);
/// Exact quotient a / b in Z[x]; throws InvariantError if b does not divide a.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);
/// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(IntPolynomial a, IntPolynomial b);
/// Yun decomposition: p = lc * prod_i f_i^(i+1), each f_i squarefree.
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);

/// One root of a characteristic polynomial with its certified disk.
struct CertifiedRoot {
  std::complex<double> value;
  double radius = 0.0;         // the true root lies within this distance
  std::size_t multiplicity = 1;
};

struct SpectralResult {
  double value = 0.0;          // approximate max root modulus
  double abs_error = 0.0;      // |true - value| <= abs_error
  IntPolynomial char_poly;
  std::vector<CertifiedRoot> roots;  // each distinct root with multiplicity
};

inline constexpr double kDefaultSpectralTol = 1e-9;

/// det(x I - m), monic. Berkowitz recurrence, division free.
IntPolynomial char_poly(const IntMatrix& m);

/// Certified roots (with multiplicity) of a nonzero integer polynomial.
std::vector<CertifiedRoot> certified_roots(const IntPolynomial& p, double tol);

/// Spectral radius certified to within `tol`; throws UncertifiedError if the
/// root isolation cannot reach that accuracy.
SpectralResult spectral_radius(const IntMatrix& m, double tol = kDefaultSpectralTol);

/// Max root modulus of an arbitrary nonzero integer polynomial.
SpectralResult max_root_modulus(const IntPolynomial& p, double tol = kDefaultSpectralTol);

/// Matrix of 2x2 minors on the lexicographically ordered basis e_i ^ e_j, i < j.
IntMatrix exterior_square(const IntMatrix& m);

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

IntMatrix mat_pow(const IntMatrix& m, unsigned long n);

/// Sum of absolute values of column i.
BigInt col_abs_sum(const IntMatrix& m, std::size_t i);

/// Sum of absolute values of a vector.
BigInt l1_norm(const std::vector<BigInt>& v);

/// Inverse of a unimodular matrix (det = +-1), exact.
IntMatrix unimodular_inverse(const IntMatrix& m);

bool is_nilpotent(const IntMatrix& m);

}  // namespace endogrowth
