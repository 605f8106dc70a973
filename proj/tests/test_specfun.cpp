#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "spherefp/errors.hpp"
#include "spherefp/specfun.hpp"

using namespace spherefp;
using specfun::Polynomial;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Independent oracle: Legendre recurrence (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}.
double legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  if (n == 0) return p0;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

// Independent oracle: three-term Gegenbauer recurrence evaluated pointwise.
double gegenbauer_rec(int l, double nu, double t) {
  double c0 = 1.0;
  if (l == 0) return c0;
  double c1 = 2.0 * nu * t;
  for (int k = 2; k <= l; ++k) {
    const double c2 = (2.0 * t * (k + nu - 1.0) * c1 - (k + 2.0 * nu - 2.0) * c0) / k;
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

}  // namespace

TEST_SUITE("specfun") {

TEST_CASE("polynomial basics") {
  Polynomial p({1.0, 0.0, -2.0});  // 1 - 2 t^2
  CHECK(p.degree() == 2);
  CHECK(p(0.5) == doctest::Approx(0.5));
  CHECK(p.coeff(5) == 0.0);
  p -= Polynomial({1.0, 0.0, -2.0});
  CHECK(p.degree() == -1);
  CHECK(p(3.0) == 0.0);
}

TEST_CASE("double factorial and parity") {
  CHECK(specfun::double_factorial(-1) == 1.0);
  CHECK(specfun::double_factorial(0) == 1.0);
  CHECK(specfun::double_factorial(5) == 15.0);
  CHECK(specfun::double_factorial(6) == 48.0);
  CHECK(specfun::eta(4) == 1);
  CHECK(specfun::eta(7) == 0);
}

TEST_CASE("sphere surface areas") {
  CHECK(specfun::surface_area(2) == doctest::Approx(2.0 * kPi).epsilon(1e-14));
  CHECK(specfun::surface_area(3) == doctest::Approx(4.0 * kPi).epsilon(1e-14));
  // omega_4 = 2 pi^2
  CHECK(specfun::surface_area(4) == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-14));
}

TEST_CASE("harmonic space dimensions") {
  CHECK(specfun::harmonic_dimension(0, 3) == 1.0);
  CHECK(specfun::harmonic_dimension(5, 3) == 11.0);  // 2l+1
  CHECK(specfun::harmonic_dimension(3, 2) == 2.0);   // cos, sin
  CHECK(specfun::harmonic_dimension(2, 4) == 9.0);   // (l+1)^2
}

TEST_CASE("gegenbauer explicit sum against the recurrence oracle") {
  CHECK(specfun::gegenbauer(0, 0.5)(0.3) == doctest::Approx(1.0));
  // C_2^{1/2} = P_2 = (3t^2 - 1)/2
  const Polynomial c2 = specfun::gegenbauer(2, 0.5);
  CHECK(c2.coeff(0) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(c2.coeff(1) == doctest::Approx(0.0));
  CHECK(c2.coeff(2) == doctest::Approx(1.5).epsilon(1e-14));
  // C_3^1 = 8 t^3 - 4 t
  const Polynomial c31 = specfun::gegenbauer(3, 1.0);
  CHECK(c31.coeff(3) == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(c31.coeff(1) == doctest::Approx(-4.0).epsilon(1e-14));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int l = 0; l <= 10; ++l) {
    for (double nu : {0.5, 1.0, 1.5, 2.5}) {
      const Polynomial c = specfun::gegenbauer(l, nu);
      for (int rep = 0; rep < 5; ++rep) {
        const double t = unif(rng);
        CHECK(c(t) == doctest::Approx(gegenbauer_rec(l, nu, t)).epsilon(1e-11));
      }
    }
  }

  CHECK_THROWS_AS(specfun::gegenbauer(2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(specfun::gegenbauer(-1, 0.5), std::invalid_argument);
}

TEST_CASE("addition kernel F_l") {
  // F_0 on S^2 is the constant 1/(4 pi).
  const Polynomial f0 = specfun::addition_poly(0, 3);
  CHECK(f0(0.3) == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-14));
  // F_2 on S^2 is (5/(4 pi)) P_2.
  const Polynomial f2 = specfun::addition_poly(2, 3);
  for (double t : {-0.9, -0.2, 0.4, 1.0})
    CHECK(f2(t) == doctest::Approx(5.0 / (4.0 * kPi) * legendre(2, t)).epsilon(1e-13));

  // d = 2 Fourier limit: F_l = T_l / pi, F_0 = 1/(2 pi).
  CHECK(specfun::addition_poly(0, 2)(0.7) == doctest::Approx(1.0 / (2.0 * kPi)));
  const Polynomial f32 = specfun::addition_poly(3, 2);
  for (double theta : {0.3, 1.1, 2.9})
    CHECK(f32(std::cos(theta)) == doctest::Approx(std::cos(3 * theta) / kPi).epsilon(1e-12));
}

TEST_CASE("addition theorem against spherical harmonics") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto random_angles = [&](double& theta, double& phi) {
    double x = normal(rng), y = normal(rng), z = normal(rng);
    const double r = std::sqrt(x * x + y * y + z * z);
    theta = std::acos(z / r);
    phi = std::atan2(y, x);
    if (phi < 0) phi += 2.0 * kPi;
  };
  for (int rep = 0; rep < 20; ++rep) {
    double t1, p1, t2, p2;
    random_angles(t1, p1);
    random_angles(t2, p2);
    const double dot = std::sin(t1) * std::sin(t2) * std::cos(p1 - p2) + std::cos(t1) * std::cos(t2);
    for (int l = 0; l <= 8; ++l) {
      std::complex<double> sum = 0.0;
      for (int m = -l; m <= l; ++m)
        sum += std::conj(specfun::sph_harm(l, m, t1, p1)) * specfun::sph_harm(l, m, t2, p2);
      CHECK(std::abs(sum.imag()) < 1e-12);
      // sum_m Y*Y = (2l+1)/(4 pi) P_l(x . y) = F_l(x . y)
      CHECK(sum.real() ==
            doctest::Approx((2.0 * l + 1.0) / (4.0 * kPi) * legendre(l, dot)).epsilon(1e-12));
      CHECK(sum.real() == doctest::Approx(specfun::addition_poly(l, 3)(dot)).epsilon(1e-12));
    }
  }
}

TEST_CASE("spherical harmonic values and argument checks") {
  CHECK(specfun::sph_harm(0, 0, 1.1, 2.2).real() == doctest::Approx(1.0 / std::sqrt(4.0 * kPi)));
  for (double theta : {0.2, 1.0, 2.4}) {
    CHECK(specfun::sph_harm(1, 0, theta, 0.4).real() ==
          doctest::Approx(std::sqrt(3.0 / (4.0 * kPi)) * std::cos(theta)).epsilon(1e-13));
  }
  // C_{l,-m} = (-1)^m conj(C_{l,m}) comes from Y_{l,-m} = (-1)^m Y*_{l,m}.
  const auto yp = specfun::sph_harm(3, 2, 0.9, 1.7);
  const auto ym = specfun::sph_harm(3, -2, 0.9, 1.7);
  CHECK(std::abs(ym - std::conj(yp)) < 1e-14);
  CHECK_THROWS_AS(specfun::sph_harm(2, 3, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("power expansion basics") {
  // 1 = B_0^0 F_0 with F_0 = 1/omega_d.
  CHECK(specfun::power_expansion(0, 3).coefficient(0) == doctest::Approx(4.0 * kPi).epsilon(1e-13));
  // t = B_0^1 F_1 with F_1 = (3/(4 pi)) t.
  CHECK(specfun::power_expansion(1, 3).coefficient(0) ==
        doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-13));
}

TEST_CASE("power expansion polynomial identity") {
  for (int d : {2, 3, 4, 5, 6}) {
    for (int l = 0; l <= 12; ++l) {
      const auto pe = specfun::power_expansion(l, d);
      for (double b : pe.B) CHECK(b >= 0.0);
      for (int g = 0; g <= 100; ++g) {
        const double t = -1.0 + 0.02 * g;
        double sum = 0.0;
        for (int k = 0; k <= l / 2; ++k)
          sum += pe.B[static_cast<std::size_t>(k)] * specfun::addition_poly(l - 2 * k, d)(t);
        CHECK(std::abs(std::pow(t, l) - sum) <= 1e-10);
      }
    }
  }
}

TEST_CASE("uniform coefficient closed form") {
  CHECK(specfun::uniform_fp_coeff(2, 3) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(specfun::uniform_fp_coeff(2, 2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(specfun::uniform_fp_coeff(3, 5) == 0.0);
  CHECK(specfun::uniform_fp_coeff(4, 3) == doctest::Approx(0.2).epsilon(1e-15));
  // Gamma-function form agrees with the double-factorial form.
  for (int d : {2, 3, 4, 5, 6, 12}) {
    for (int l = 0; l <= 16; l += 2) {
      const double gamma_form = std::exp(std::lgamma(0.5 * d) + std::lgamma(0.5 * (l + 1)) -
                                         0.5 * std::log(kPi) - std::lgamma(0.5 * (d + l)));
      CHECK(specfun::uniform_fp_coeff(l, d) == doctest::Approx(gamma_form).epsilon(1e-12));
    }
  }
}

TEST_CASE("both bound routes agree") {
  // B_{l/2}^l equals the closed-form coefficient times the F_0 normalization
  // omega_d, so the uniform bound value is identical through either route.
  for (int d : {2, 3, 4, 5, 6}) {
    const double omega = specfun::surface_area(d);
    for (int l = 0; l <= 12; l += 2) {
      const auto pe = specfun::power_expansion(l, d);
      const double via_expansion = pe.B.back() / omega;
      CHECK(via_expansion ==
            doctest::Approx(specfun::uniform_fp_coeff(l, d)).epsilon(1e-12));
    }
  }
}

TEST_CASE("gamma_lk values and cross-check with the d = 3 expansion") {
  CHECK(specfun::gamma_lk(0, 0) == doctest::Approx(4.0 * kPi).epsilon(1e-14));
  CHECK(specfun::gamma_lk(2, 0) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-14));
  CHECK(specfun::gamma_lk(2, 1) == 0.0);
  CHECK_THROWS_AS(specfun::gamma_lk(2, 3), std::invalid_argument);

  // cos^l = sum_k Gamma_{l,k} F_k at d = 3, so B_k^l = Gamma_{l, l-2k}.
  for (int l = 0; l <= 12; ++l) {
    const auto pe = specfun::power_expansion(l, 3);
    for (int k = 0; k <= l / 2; ++k) {
      CHECK(pe.B[static_cast<std::size_t>(k)] ==
            doctest::Approx(specfun::gamma_lk(l, l - 2 * k)).epsilon(1e-12));
    }
  }
}

TEST_CASE("kappa table entries") {
  const auto& kappa = specfun::kappa_table();
  const double p32 = std::pow(kPi, 1.5);
  CHECK(kappa(0, 0, 0, 0, 0, 0) == doctest::Approx(16.0 * p32 / 9.0).epsilon(1e-15));
  CHECK(kappa(2, 0, 2, 0, 2, 0) == doctest::Approx(32.0 * p32 / (45.0 * std::sqrt(5.0))).epsilon(1e-15));
  CHECK(kappa(1, 0, 0, 0, 0, 0) == 0.0);
  CHECK(kappa.entries().size() == 35);
  // every entry conserves m1 + m2 + m3 = 0
  for (const auto& [key, value] : kappa.entries()) {
    CHECK(key[1] + key[3] + key[5] == 0);
    CHECK(value != 0.0);
  }
}

TEST_CASE("kappa expansion reproduces the squared triple product") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto random_point = [&](double& theta, double& phi, double* v) {
    double x = normal(rng), y = normal(rng), z = normal(rng);
    const double r = std::sqrt(x * x + y * y + z * z);
    v[0] = x / r;
    v[1] = y / r;
    v[2] = z / r;
    theta = std::acos(v[2]);
    phi = std::atan2(v[1], v[0]);
    if (phi < 0) phi += 2.0 * kPi;
  };
  const auto& kappa = specfun::kappa_table();
  for (int rep = 0; rep < 100; ++rep) {
    double t1, p1, t2, p2, t3, p3;
    double a[3], b[3], c[3];
    random_point(t1, p1, a);
    random_point(t2, p2, b);
    random_point(t3, p3, c);
    const double cross[3] = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                             a[0] * b[1] - a[1] * b[0]};
    const double triple = cross[0] * c[0] + cross[1] * c[1] + cross[2] * c[2];
    const double lhs = triple * triple;

    std::complex<double> rhs = 0.0;
    for (const auto& [key, value] : kappa.entries()) {
      rhs += value * specfun::sph_harm(key[0], key[1], t1, p1) *
             specfun::sph_harm(key[2], key[3], t2, p2) *
             specfun::sph_harm(key[4], key[5], t3, p3);
    }
    CHECK(std::abs(rhs.imag()) < 1e-10);
    CHECK(rhs.real() == doctest::Approx(lhs).epsilon(1e-10));
  }
}

}  // TEST_SUITE
