#pragma once

#include <array>
#include <complex>
#include <map>
#include <vector>

namespace spherefp::specfun {

/// Univariate real polynomial; coefficients stored in ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial monomial(int degree, double coeff = 1.0);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  /// Coefficient of t^k; 0 beyond the stored range.
  double coeff(int k) const;
  const std::vector<double>& coeffs() const { return c_; }

  double operator()(double t) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(double s);

 private:
  void trim();
  std::vector<double> c_;
};

Polynomial operator*(double s, Polynomial p);
Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);

/// m!! = m (m-2) (m-4) ...; equals 1 for m <= 0.
double double_factorial(int m);

/// Parity indicator: 1 for even l, 0 for odd l.
int eta(int l);

/// Surface area of the (d-1)-sphere in R^d: 2 pi^{d/2} / Gamma(d/2).
double surface_area(int d);

/// Dimension of the space of degree-l spherical harmonics on S^{d-1}.
double harmonic_dimension(int l, int d);

/// Gegenbauer polynomial C_l^nu as its explicit finite sum. nu > 0.
Polynomial gegenbauer(int l, double nu);

/// Reproducing kernel F_l of the degree-l harmonics on S^{d-1}:
/// sum_m Y*_{l,m}(x) Y_{l,m}(y) = F_l(x . y). For d >= 3 this is
/// (2l+d-2) / ((d-2) omega_d) C_l^{(d-2)/2}; d = 2 is the Fourier limit
/// T_l / pi (and 1 / (2 pi) for l = 0).
Polynomial addition_poly(int l, int d);

/// Expansion of t^l in the kernels F: t^l = sum_k B[k] F_{l-2k}(t).
struct PowerExpansion {
  int l = 0;
  int dim = 0;
  std::vector<double> B;  // index k = 0 .. floor(l/2), all entries >= 0

  double coefficient(int k) const { return B.at(static_cast<std::size_t>(k)); }
};

/// Solves the triangular degree-matching system for the B coefficients.
PowerExpansion power_expansion(int l, int d);

/// Coefficient of the uniform-distribution frame potential: the lower bound
/// is coeff * N^2 (or coeff * (sum f)^2 for weighted sums). Equals
/// (l-1)!!(d-2)!!/(l+d-2)!! for even l and 0 for odd l.
double uniform_fp_coeff(int l, int d);

/// d = 3 expansion coefficient of cos^l in the degree-k kernels:
/// Gamma_{l,k} = 4 pi l! eta_{l-k} / (2^{(l-k)/2} ((l-k)/2)! (l+k+1)!!).
double gamma_lk(int l, int k);

/// Complex orthonormal spherical harmonic Y_{l,m}(theta, phi) with the
/// Condon-Shortley phase, via the stable normalized Legendre recurrence.
std::complex<double> sph_harm(int l, int m, double theta, double phi);

/// Coefficients kappa of the harmonic expansion of the squared triple
/// product [(P1 x P2) . P3]^2 over (l_i, m_i) with l_i <= 2.
class KappaTable {
 public:
  using Key = std::array<int, 6>;  // l1, m1, l2, m2, l3, m3

  /// 0 for sextuples not in the table.
  double operator()(int l1, int m1, int l2, int m2, int l3, int m3) const;

  const std::map<Key, double>& entries() const { return entries_; }

 private:
  friend const KappaTable& kappa_table();
  KappaTable();
  std::map<Key, double> entries_;
};

const KappaTable& kappa_table();

}  // namespace spherefp::specfun
