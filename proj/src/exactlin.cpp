#include "endogrowth/exactlin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "endogrowth/errors.hpp"

namespace endogrowth {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0)
    throw DimensionError("matrix dimensions must be positive");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0)
    throw DimensionError("matrix dimensions must be positive");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::zero(std::size_t rows, std::size_t cols) {
  return IntMatrix(rows, cols);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw DimensionError("matrix dimensions must be positive");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<BigInt>>& cols) {
  if (cols.empty() || cols.front().empty())
    throw DimensionError("matrix dimensions must be positive");
  IntMatrix m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows_) throw DimensionError("ragged matrix columns");
    for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t j) const {
  std::vector<BigInt> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<BigInt> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

BigInt IntMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of a non-square matrix");
  BigInt t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

BigInt IntMatrix::det() const {
  if (!is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  std::vector<BigInt> a = data_;
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
    }
    prev = at(k, k);
  }
  BigInt d = at(n - 1, n - 1);
  return sign < 0 ? BigInt(-d) : d;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& v) const {
  if (v.size() != cols_) throw DimensionError("vector length does not match matrix");
  std::vector<BigInt> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = std::move(s);
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionError("matrix sum shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionError("matrix difference shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

IntMatrix operator*(const BigInt& s, const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::coeff(std::size_t i) const {
  static const BigInt zero = 0;
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw DimensionError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntMatrix IntPolynomial::evaluate(const IntMatrix& m) const {
  if (!m.is_square()) throw DimensionError("polynomial evaluated at non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix acc = IntMatrix::zero(n, n);
  const IntMatrix id = IntMatrix::identity(n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + (*it) * id;
  return acc;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (!p.is_zero() && p.leading() < 0) g = -g;
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  const BigInt g = content(p);
  std::vector<BigInt> c = p.coeffs();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DimensionError("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InvariantError("polynomial division is not exact");
  std::vector<BigInt> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<BigInt> q(rem.size() - db);
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt top = rem[i + db];
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t()))
      throw InvariantError("polynomial division is not exact over the integers");
    mpz_divexact(top.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= top * b.coeffs()[j];
    q[i] = std::move(top);
  }
  for (const auto& r : rem)
    if (r != 0) throw InvariantError("polynomial division is not exact");
  return IntPolynomial(std::move(q));
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const BigInt& lb = b.leading();
  while (r.size() > db && !r.empty()) {
    const BigInt lr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= lr * b.coeffs()[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPolynomial(std::move(r));
}

}  // namespace

IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  return primitive_part(a);
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  const IntPolynomial f = primitive_part(p);
  const IntPolynomial df = f.derivative();
  IntPolynomial a = gcd(f, df);
  IntPolynomial b = exact_divide(f, a);
  IntPolynomial c = exact_divide(df, a);
  IntPolynomial d = c - b.derivative();
  std::vector<IntPolynomial> out;
  while (b.degree() >= 1) {
    IntPolynomial g = gcd(b, d);
    out.push_back(g);
    b = exact_divide(b, g);
    c = exact_divide(d, g);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() < 1) out.pop_back();
  return out;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial

IntPolynomial char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // Descending coefficients of the char poly of the leading r x r block.
  std::vector<BigInt> poly{1, -m(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // q_0 = 1, q_1 = -a_rr, q_{k+2} = -R A^k C for the leading block A.
    std::vector<BigInt> q(r + 2);
    q[0] = 1;
    q[1] = -m(r, r);
    std::vector<BigInt> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = m(i, r);
    for (std::size_t k = 2; k <= r + 1; ++k) {
      BigInt s = 0;
      for (std::size_t j = 0; j < r; ++j) s += m(r, j) * col[j];
      q[k] = -s;
      std::vector<BigInt> next(r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * col[j];
      col = std::move(next);
    }
    std::vector<BigInt> grown(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) grown[i] += q[i - j] * poly[j];
    poly = std::move(grown);
  }
  std::reverse(poly.begin(), poly.end());
  return IntPolynomial(std::move(poly));
}

// ---------------------------------------------------------------------------
// Certified roots

namespace {

template <class R>
struct Cx {
  R re{0}, im{0};
};

template <class R> Cx<R> operator+(const Cx<R>& a, const Cx<R>& b) { return {a.re + b.re, a.im + b.im}; }
template <class R> Cx<R> operator-(const Cx<R>& a, const Cx<R>& b) { return {a.re - b.re, a.im - b.im}; }
template <class R> Cx<R> operator*(const Cx<R>& a, const Cx<R>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class R> Cx<R> operator/(const Cx<R>& a, const Cx<R>& b) {
  const R d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
template <class R> R modulus(const Cx<R>& a) {
  using std::sqrt;
  return sqrt(a.re * a.re + a.im * a.im);
}

template <class R> R to_real(const BigInt& x);
template <> long double to_real<long double>(const BigInt& x) {
  if (x.fits_slong_p()) return static_cast<long double>(x.get_si());
  return std::stold(x.get_str());
}
template <class R> R to_real(const BigInt& x) { return R(x.get_str()); }

template <class R> double to_double(const R& x) { return static_cast<double>(x); }

template <class R>
struct RootWork {
  std::vector<R> coeffs;  // ascending
  std::vector<Cx<R>> z;
};

template <class R>
void horner(const std::vector<R>& c, const Cx<R>& z, Cx<R>& f, Cx<R>& df) {
  f = {c.back(), R(0)};
  df = {R(0), R(0)};
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    df = df * z + f;
    f = f * z + Cx<R>{c[i], R(0)};
  }
}

// Aberth-Ehrlich simultaneous iteration.
template <class R>
void aberth(RootWork<R>& w, const R& eps, int max_iter) {
  const std::size_t d = w.z.size();
  for (int it = 0; it < max_iter; ++it) {
    R worst(0);
    for (std::size_t i = 0; i < d; ++i) {
      Cx<R> f, df;
      horner(w.coeffs, w.z[i], f, df);
      if (modulus(f) == R(0)) continue;
      const Cx<R> ratio = f / df;
      Cx<R> sum{R(0), R(0)};
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) sum = sum + Cx<R>{R(1), R(0)} / (w.z[i] - w.z[j]);
      const Cx<R> step = ratio / (Cx<R>{R(1), R(0)} - ratio * sum);
      w.z[i] = w.z[i] - step;
      const R rel = modulus(step) / (R(1) + modulus(w.z[i]));
      if (rel > worst) worst = rel;
    }
    if (worst < eps) return;
  }
}

// Weierstrass inclusion disks; radius < 0 marks a root not isolated.
template <class R>
std::vector<double> inclusion_radii(const RootWork<R>& w, const R& unit_roundoff) {
  const std::size_t d = w.z.size();
  std::vector<R> rad(d);
  const R lead = w.coeffs.back() < R(0) ? R(-w.coeffs.back()) : w.coeffs.back();
  for (std::size_t i = 0; i < d; ++i) {
    Cx<R> f, df;
    horner(w.coeffs, w.z[i], f, df);
    const R zabs = modulus(w.z[i]);
    R bound(0), pw(1);
    for (const auto& c : w.coeffs) {
      bound += (c < R(0) ? R(-c) : c) * pw;
      pw *= zabs;
    }
    const R slack = R(8) * R(static_cast<long>(d + 2)) * unit_roundoff * bound;
    R denom = lead;
    for (std::size_t j = 0; j < d; ++j)
      if (j != i) denom *= modulus(w.z[i] - w.z[j]);
    if (denom == R(0)) {
      rad[i] = R(-1);
      continue;
    }
    rad[i] = R(static_cast<long>(d)) * (modulus(f) + slack) / denom *
             (R(1) + R(8) * R(static_cast<long>(d)) * unit_roundoff);
  }
  std::vector<double> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (rad[i] < R(0)) {
      out[i] = -1.0;
      continue;
    }
    bool isolated = true;
    for (std::size_t j = 0; j < d && isolated; ++j)
      if (j != i && rad[j] >= R(0) && modulus(w.z[i] - w.z[j]) <= rad[i] + rad[j])
        isolated = false;
    // Round the radius up by a relative ulp of double.
    const double r = to_double(rad[i]);
    out[i] = isolated ? r * (1 + 1e-15) + std::numeric_limits<double>::denorm_min() : -1.0;
  }
  return out;
}

template <class R>
bool certify_level(const IntPolynomial& p, std::vector<std::complex<double>>& seeds,
                   double tol, std::vector<double>& radii, const R& eps, int iters) {
  RootWork<R> w;
  for (const auto& c : p.coeffs()) w.coeffs.push_back(to_real<R>(c));
  for (const auto& s : seeds) w.z.push_back({R(s.real()), R(s.imag())});
  aberth(w, eps, iters);
  radii = inclusion_radii(w, eps);
  for (std::size_t i = 0; i < seeds.size(); ++i)
    seeds[i] = {to_double(w.z[i].re), to_double(w.z[i].im)};
  return std::all_of(radii.begin(), radii.end(), [&](double r) { return r >= 0 && r <= tol; });
}

std::vector<std::complex<double>> companion_seeds(const IntPolynomial& p) {
  const std::size_t d = static_cast<std::size_t>(p.degree());
  std::vector<std::complex<double>> seeds;
  const double lead = p.leading().get_d();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d),
                                               static_cast<Eigen::Index>(d));
  for (std::size_t i = 1; i < d; ++i)
    comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < d; ++i)
    comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) =
        -p.coeff(i).get_d() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  bool ok = es.info() == Eigen::Success;
  if (ok) {
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const auto ev = es.eigenvalues()[i];
      if (!std::isfinite(ev.real()) || !std::isfinite(ev.imag())) ok = false;
      seeds.emplace_back(ev.real(), ev.imag());
    }
  }
  if (!ok) {
    seeds.clear();
    // Cauchy bound circle.
    double bound = 0;
    for (std::size_t i = 0; i < d; ++i)
      bound = std::max(bound, std::fabs(p.coeff(i).get_d() / lead));
    bound += 1;
    for (std::size_t i = 0; i < d; ++i) {
      const double ang = 2 * M_PI * (static_cast<double>(i) + 0.25) / static_cast<double>(d);
      seeds.emplace_back(bound * std::cos(ang), bound * std::sin(ang));
    }
  }
  // Aberth needs pairwise distinct starting points.
  for (std::size_t i = 0; i < seeds.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(seeds[i] - seeds[j]) < 1e-12 * (1 + std::abs(seeds[i])))
        seeds[i] += std::complex<double>(1e-6 * (1 + std::abs(seeds[i])), 1e-6 * static_cast<double>(i + 1));
  return seeds;
}

// Roots of a squarefree polynomial with p(0) != 0.
std::vector<CertifiedRoot> squarefree_roots(const IntPolynomial& p, double tol) {
  const std::size_t d = static_cast<std::size_t>(p.degree());
  std::vector<CertifiedRoot> out;
  if (d == 1) {
    // -c0 / c1, correctly rounded up to a few ulps.
    mpq_class q(-p.coeff(0), p.coeff(1));
    q.canonicalize();
    const double v = q.get_d();
    out.push_back({{v, 0.0}, std::fabs(v) * 4e-16 + std::numeric_limits<double>::denorm_min(), 1});
    return out;
  }
  std::vector<std::complex<double>> z = companion_seeds(p);
  std::vector<double> radii;
  using boost::multiprecision::cpp_bin_float_50;
  using boost::multiprecision::cpp_bin_float_100;
  bool ok = certify_level<long double>(p, z, tol, radii,
                                       std::numeric_limits<long double>::epsilon(), 200);
  if (!ok)
    ok = certify_level<cpp_bin_float_50>(p, z, tol, radii,
                                         std::numeric_limits<cpp_bin_float_50>::epsilon(), 400);
  if (!ok)
    ok = certify_level<cpp_bin_float_100>(
        p, z, tol, radii, std::numeric_limits<cpp_bin_float_100>::epsilon(), 800);
  if (!ok)
    throw UncertifiedError("could not isolate the roots of " + p.str() +
                           " to the requested tolerance");
  for (std::size_t i = 0; i < d; ++i) {
    std::complex<double> v = z[i];
    // Conjugate-symmetric cleanup for roots certified to be real.
    if (std::fabs(v.imag()) <= radii[i]) v = {v.real(), 0.0};
    out.push_back({v, radii[i], 1});
  }
  return out;
}

}  // namespace

std::vector<CertifiedRoot> certified_roots(const IntPolynomial& p, double tol) {
  if (p.is_zero()) throw DimensionError("roots of the zero polynomial");
  if (!(tol > 0)) throw DimensionError("tolerance must be positive");
  std::vector<CertifiedRoot> out;
  const auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    IntPolynomial f = factors[i];
    if (f.degree() < 1) continue;
    if (f.coeff(0) == 0) {
      out.push_back({{0.0, 0.0}, 0.0, i + 1});
      std::vector<BigInt> c(f.coeffs().begin() + 1, f.coeffs().end());
      f = IntPolynomial(std::move(c));
      if (f.degree() < 1) continue;
    }
    for (auto r : squarefree_roots(f, tol)) {
      r.multiplicity = i + 1;
      out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
    const double ma = std::abs(a.value), mb = std::abs(b.value);
    if (ma != mb) return ma > mb;
    if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
    return a.value.imag() > b.value.imag();
  });
  return out;
}

SpectralResult max_root_modulus(const IntPolynomial& p, double tol) {
  if (!(tol > 0)) throw DimensionError("tolerance must be positive");
  SpectralResult r;
  r.char_poly = p;
  r.roots = certified_roots(p, tol);
  for (const auto& root : r.roots) {
    r.value = std::max(r.value, std::abs(root.value));
    r.abs_error = std::max(r.abs_error, root.radius);
  }
  if (r.abs_error > tol) throw UncertifiedError("spectral radius not certified within tolerance");
  return r;
}

SpectralResult spectral_radius(const IntMatrix& m, double tol) {
  if (!m.is_square()) throw DimensionError("spectral radius of a non-square matrix");
  return max_root_modulus(char_poly(m), tol);
}

// ---------------------------------------------------------------------------
// Structured products and powers

IntMatrix exterior_square(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("exterior square of a non-square matrix");
  const std::size_t n = m.rows();
  if (n < 2) throw DimensionError("exterior square needs size >= 2");
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) basis.emplace_back(i, j);
  IntMatrix out(basis.size(), basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const auto [p, q] = basis[r];
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const auto [i, j] = basis[c];
      out(r, c) = m(p, i) * m(q, j) - m(p, j) * m(q, i);
    }
  }
  return out;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

IntMatrix mat_pow(const IntMatrix& m, unsigned long n) {
  if (!m.is_square()) throw DimensionError("power of a non-square matrix");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

BigInt col_abs_sum(const IntMatrix& m, std::size_t i) {
  if (i >= m.cols()) throw DimensionError("column index out of range");
  BigInt s = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) s += abs(m(r, i));
  return s;
}

BigInt l1_norm(const std::vector<BigInt>& v) {
  BigInt s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const BigInt d = m.det();
  if (d != 1 && d != -1) throw DimensionError("matrix is not unimodular");
  const std::size_t n = m.rows();
  if (n == 1) return IntMatrix::from_rows({{d}});
  // adj(m) / det, cofactors via Bareiss determinants of minors.
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      BigInt cof = minor.det();
      if ((i + j) % 2) cof = -cof;
      inv(j, i) = cof * d;
    }
  return inv;
}

bool is_nilpotent(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("nilpotency of a non-square matrix");
  return mat_pow(m, m.rows()).is_zero();
}

}  // namespace endogrowth
