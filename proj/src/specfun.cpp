#include "spherefp/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spherefp/errors.hpp"

namespace spherefp::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Gamma(nu + n) / Gamma(nu) for integer n >= 0; switches to log-Gamma once
// the rising product risks overflow.
double gamma_ratio(double nu, int n) {
  if (n <= 30) {
    double p = 1.0;
    for (int j = 0; j < n; ++j) p *= nu + j;
    return p;
  }
  return std::exp(std::lgamma(nu + n) - std::lgamma(nu));
}

double factorial(int n) {
  if (n <= 20) {
    double p = 1.0;
    for (int j = 2; j <= n; ++j) p *= j;
    return p;
  }
  return std::exp(std::lgamma(n + 1.0));
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int degree, double coeff) {
  std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c.back() = coeff;
  return Polynomial(std::move(c));
}

double Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0.0;
  return c_[static_cast<std::size_t>(k)];
}

double Polynomial::operator()(double t) const {
  double v = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (double& v : c_) v *= s;
  trim();
  return *this;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

Polynomial operator*(double s, Polynomial p) {
  p *= s;
  return p;
}

Polynomial operator+(Polynomial a, const Polynomial& b) {
  a += b;
  return a;
}

Polynomial operator-(Polynomial a, const Polynomial& b) {
  a -= b;
  return a;
}

double double_factorial(int m) {
  if (m <= 0) return 1.0;
  double p = 1.0;
  for (int v = m; v > 1; v -= 2) p *= v;
  return p;
}

int eta(int l) { return (l % 2 == 0) ? 1 : 0; }

double surface_area(int d) {
  if (d < 2) throw std::invalid_argument("surface_area: d must be >= 2");
  return 2.0 * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d);
}

double harmonic_dimension(int l, int d) {
  if (l < 0 || d < 2) throw std::invalid_argument("harmonic_dimension: need l >= 0, d >= 2");
  if (l == 0) return 1.0;
  if (d == 2) return 2.0;
  // (2l+d-2) (l+d-3)! / (l! (d-2)!)
  double v = 2.0 * l + d - 2.0;
  for (int j = 1; j <= d - 3; ++j) v *= (l + j) / static_cast<double>(j);
  return v / (d - 2);
}

Polynomial gegenbauer(int l, double nu) {
  if (l < 0) throw std::invalid_argument("gegenbauer: l must be >= 0");
  if (!(nu > 0.0)) throw std::invalid_argument("gegenbauer: nu must be > 0");
  std::vector<double> c(static_cast<std::size_t>(l) + 1, 0.0);
  for (int k = 0; k <= l / 2; ++k) {
    double term = std::pow(2.0, l - 2 * k) * gamma_ratio(nu, l - k) /
                  (factorial(k) * factorial(l - 2 * k));
    if (k % 2 != 0) term = -term;
    c[static_cast<std::size_t>(l - 2 * k)] = term;
  }
  return Polynomial(std::move(c));
}

Polynomial addition_poly(int l, int d) {
  if (l < 0 || d < 2) throw std::invalid_argument("addition_poly: need l >= 0, d >= 2");
  if (d == 2) {
    // Fourier limit of the Gegenbauer expression: T_l / pi, constant 1/(2 pi).
    if (l == 0) return Polynomial({1.0 / (2.0 * kPi)});
    Polynomial tprev({1.0});   // T_0
    Polynomial t({0.0, 1.0});  // T_1
    for (int n = 1; n < l; ++n) {
      // T_{n+1} = 2 t T_n - T_{n-1}
      std::vector<double> shifted(t.coeffs().size() + 1, 0.0);
      for (std::size_t k = 0; k < t.coeffs().size(); ++k) shifted[k + 1] = 2.0 * t.coeffs()[k];
      Polynomial next{std::move(shifted)};
      next -= tprev;
      tprev = std::move(t);
      t = std::move(next);
    }
    return (1.0 / kPi) * t;
  }
  const double nu = 0.5 * (d - 2);
  const double scale = (2.0 * l + d - 2.0) / ((d - 2.0) * surface_area(d));
  return scale * gegenbauer(l, nu);
}

PowerExpansion power_expansion(int l, int d) {
  if (l < 0 || d < 2) throw std::invalid_argument("power_expansion: need l >= 0, d >= 2");
  PowerExpansion out;
  out.l = l;
  out.dim = d;
  out.B.assign(static_cast<std::size_t>(l / 2) + 1, 0.0);

  Polynomial residual = Polynomial::monomial(l);
  double scale = 1.0;
  for (int k = 0; k <= l / 2; ++k) {
    const int m = l - 2 * k;
    Polynomial fm = addition_poly(m, d);
    const double lead = fm.coeff(m);
    if (lead == 0.0) throw NumericalError("power_expansion: singular kernel system");
    const double bk = residual.coeff(m) / lead;
    out.B[static_cast<std::size_t>(k)] = bk;
    residual -= bk * fm;
    scale = std::max(scale, std::abs(bk) * std::abs(lead));
  }
  for (int k = 0; k <= l; ++k) {
    if (std::abs(residual.coeff(k)) > 1e-9 * scale)
      throw NumericalError("power_expansion: degree-matching system did not close");
  }
  // The coefficients are nonnegative; clear negative round-off dust.
  for (double& b : out.B) {
    if (b < 0.0 && b > -1e-12 * scale) b = 0.0;
  }
  return out;
}

double uniform_fp_coeff(int l, int d) {
  if (l < 0 || d < 2) throw std::invalid_argument("uniform_fp_coeff: need l >= 0, d >= 2");
  if (l % 2 != 0) return 0.0;
  if (l + d <= 30) return double_factorial(l - 1) * double_factorial(d - 2) / double_factorial(l + d - 2);
  return std::exp(std::lgamma(0.5 * d) + std::lgamma(0.5 * (l + 1)) - 0.5 * std::log(kPi) -
                  std::lgamma(0.5 * (d + l)));
}

double gamma_lk(int l, int k) {
  if (l < 0 || k < 0) throw std::invalid_argument("gamma_lk: indices must be >= 0");
  if (k > l) throw std::invalid_argument("gamma_lk: k must be <= l");
  if ((l - k) % 2 != 0) return 0.0;
  const int half = (l - k) / 2;
  if (l + k <= 30) {
    return 4.0 * kPi * factorial(l) /
           (std::pow(2.0, half) * factorial(half) * double_factorial(l + k + 1));
  }
  // (l+k+1)!! with l+k even: (2q+1)!! = 2^{q+1} Gamma(q + 3/2) / sqrt(pi), q = (l+k)/2.
  const int q = (l + k) / 2;
  const double log_dfact = (q + 1.0) * std::log(2.0) + std::lgamma(q + 1.5) - 0.5 * std::log(kPi);
  return std::exp(std::log(4.0 * kPi) + std::lgamma(l + 1.0) - half * std::log(2.0) -
                  std::lgamma(half + 1.0) - log_dfact);
}

std::complex<double> sph_harm(int l, int m, double theta, double phi) {
  if (l < 0) throw std::invalid_argument("sph_harm: l must be >= 0");
  if (std::abs(m) > l) throw std::invalid_argument("sph_harm: |m| must be <= l");
  const int ma = std::abs(m);
  const double x = std::cos(theta);
  const double s = std::sin(theta);

  // Normalized associated Legendre P~_l^m with Condon-Shortley phase:
  // Y_{l,m} = P~_l^m(cos theta) e^{i m phi} for m >= 0.
  double pmm = std::sqrt(1.0 / (4.0 * kPi));
  for (int q = 1; q <= ma; ++q) pmm *= -std::sqrt((2.0 * q + 1.0) / (2.0 * q)) * s;

  double p = pmm;
  if (l > ma) {
    double pm1 = pmm;
    double pm2 = 0.0;
    for (int n = ma + 1; n <= l; ++n) {
      const double a = std::sqrt((4.0 * n * n - 1.0) / (static_cast<double>(n) * n - static_cast<double>(ma) * ma));
      double prev_a = 0.0;
      if (n - 1 > ma)
        prev_a = std::sqrt(((n - 1.0) * (n - 1.0) - static_cast<double>(ma) * ma) /
                           (4.0 * (n - 1.0) * (n - 1.0) - 1.0));
      p = a * (x * pm1 - prev_a * pm2);
      pm2 = pm1;
      pm1 = p;
    }
  }

  const std::complex<double> e{std::cos(ma * phi), std::sin(ma * phi)};
  std::complex<double> y = p * e;
  if (m < 0) {
    y = std::conj(y);
    if (ma % 2 != 0) y = -y;
  }
  return y;
}

KappaTable::KappaTable() {
  const double p32 = std::pow(kPi, 1.5);
  const double s5 = std::sqrt(5.0);

  auto put = [this](std::initializer_list<Key> keys, double value) {
    for (const Key& k : keys) entries_[k] = value;
  };

  put({{0, 0, 0, 0, 0, 0}}, 16.0 * p32 / 9.0);
  put({{2, -1, 2, -1, 2, 2},
       {2, -2, 2, 1, 2, 1},
       {2, 1, 2, -2, 2, 1},
       {2, -1, 2, 2, 2, -1},
       {2, 2, 2, -1, 2, -1},
       {2, 1, 2, 1, 2, -2}},
      (16.0 / 15.0) * std::sqrt(2.0 / 15.0) * p32);
  put({{0, 0, 2, -1, 2, 1},
       {2, -1, 0, 0, 2, 1},
       {0, 0, 2, 1, 2, -1},
       {2, 1, 0, 0, 2, -1},
       {2, -1, 2, 1, 0, 0},
       {2, 1, 2, -1, 0, 0}},
      16.0 * p32 / 45.0);
  put({{2, 0, 2, 0, 2, 0}}, 32.0 * p32 / (45.0 * s5));
  put({{2, -1, 2, 0, 2, 1},
       {2, 0, 2, -1, 2, 1},
       {2, -1, 2, 1, 2, 0},
       {2, 1, 2, -1, 2, 0},
       {2, 0, 2, 1, 2, -1},
       {2, 1, 2, 0, 2, -1}},
      -16.0 * p32 / (45.0 * s5));
  put({{2, -2, 2, 0, 2, 2},
       {2, 0, 2, -2, 2, 2},
       {2, -2, 2, 2, 2, 0},
       {2, 2, 2, -2, 2, 0},
       {2, 0, 2, 2, 2, -2},
       {2, 2, 2, 0, 2, -2}},
      -32.0 * p32 / (45.0 * s5));
  put({{0, 0, 2, -2, 2, 2},
       {2, -2, 0, 0, 2, 2},
       {0, 0, 2, 0, 2, 0},
       {2, 0, 0, 0, 2, 0},
       {0, 0, 2, 2, 2, -2},
       {2, 2, 0, 0, 2, -2},
       {2, -2, 2, 2, 0, 0},
       {2, 0, 2, 0, 0, 0},
       {2, 2, 2, -2, 0, 0}},
      -16.0 * p32 / 45.0);
}

double KappaTable::operator()(int l1, int m1, int l2, int m2, int l3, int m3) const {
  const auto it = entries_.find(Key{l1, m1, l2, m2, l3, m3});
  return it == entries_.end() ? 0.0 : it->second;
}

const KappaTable& kappa_table() {
  static const KappaTable table;
  return table;
}

}  // namespace spherefp::specfun
