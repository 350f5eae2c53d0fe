// Copyright 2026 The digraph-energy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Coulson-type integral for digraph energy.
//
// With Phi(x) = x^m Q(x), Q(0) != 0 and d = n - m, the integrand is
//   n - ix Phi'(ix)/Phi(ix) = P(ix) / Q(ix),   P(x) = sum_k (d - k) q_k x^k,
// which avoids the cancellation in n - (...) for large |x|. For |x| > 1 both
// P and Q are evaluated in u = 1/(ix) on reversed coefficients.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "digraph_energy/errors.hpp"
#include "digraph_energy/spectrum.hpp"

namespace digraph_energy {

namespace {

constexpr int kGaussPoints = 20;

struct GaussRule {
  std::array<long double, kGaussPoints> nodes{};
  std::array<long double, kGaussPoints> weights{};
};

GaussRule make_gauss_legendre() {
  GaussRule rule;
  constexpr long double kPi = std::numbers::pi_v<long double>;
  for (int i = 0; i < kGaussPoints; ++i) {
    long double x = std::cos(kPi * (i + 0.75L) / (kGaussPoints + 0.5L));
    long double derivative = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1;
      long double p1 = x;
      for (int k = 2; k <= kGaussPoints; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      derivative = kGaussPoints * (x * p1 - p0) / (x * x - 1);
      const long double step = p1 / derivative;
      x -= step;
      if (std::fabs(step) < 1e-19L) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2 / ((1 - x * x) * derivative * derivative);
  }
  return rule;
}

const GaussRule& gauss_rule() {
  static const GaussRule rule = make_gauss_legendre();
  return rule;
}

class CoulsonIntegrand {
 public:
  explicit CoulsonIntegrand(const CharPoly& phi) {
    int m = 0;
    while (m < phi.degree() && phi.coeffs[m] == 0) ++m;
    degree_ = phi.degree() - m;
    for (int k = 0; k <= degree_; ++k) {
      const long double qk = phi.coeffs[m + k].convert_to<long double>();
      q_.push_back(qk);
      p_.push_back(static_cast<long double>(degree_ - k) * qk);
    }
  }

  /// Re[P(ix)/Q(ix)] * (1 + x^2) at x = tan(theta).
  long double operator()(long double theta) const {
    const long double x = std::tan(theta);
    using Complex = std::complex<long double>;
    Complex num = 0;
    Complex den = 0;
    long double bound = 0;
    if (std::fabs(x) <= 1) {
      const Complex z(0, x);
      for (int k = degree_; k >= 0; --k) {
        num = num * z + p_[k];
        den = den * z + q_[k];
        bound = bound * std::fabs(x) + std::fabs(q_[k]);
      }
    } else {
      const Complex u(0, -1 / x);  // 1 / (ix)
      for (int k = 0; k <= degree_; ++k) {
        num = num * u + p_[k];
        den = den * u + q_[k];
        bound = bound * std::fabs(1 / x) + std::fabs(q_[k]);
      }
    }
    const long double value = (num / den).real() * (1 + x * x);
    if (std::abs(den) <= 1e-14L * bound || !std::isfinite(value)) {
      std::ostringstream msg;
      msg << "PurelyImaginaryEigenvalue: Phi(ix) vanishes near x = " << static_cast<double>(x);
      throw PurelyImaginaryEigenvalue(msg.str(), static_cast<double>(x));
    }
    return value;
  }

 private:
  int degree_ = 0;
  std::vector<long double> q_;
  std::vector<long double> p_;
};

long double gauss_panel(const CoulsonIntegrand& f, long double a, long double b) {
  const GaussRule& rule = gauss_rule();
  const long double half = (b - a) / 2;
  const long double mid = (a + b) / 2;
  long double sum = 0;
  for (int i = 0; i < kGaussPoints; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

long double adaptive(const CoulsonIntegrand& f, long double a, long double b, long double whole,
                     long double tolerance, int depth) {
  const long double mid = (a + b) / 2;
  const long double left = gauss_panel(f, a, mid);
  const long double right = gauss_panel(f, mid, b);
  if (depth <= 0 || std::fabs(left + right - whole) <= tolerance) return left + right;
  return adaptive(f, a, mid, left, tolerance / 2, depth - 1) +
         adaptive(f, mid, b, right, tolerance / 2, depth - 1);
}

}  // namespace

std::vector<double> imaginary_axis_poles(const CharPoly& phi) {
  // Phi(iy) = R(y) + i I(y) with R, I integer polynomials in y.
  std::vector<BigInt> re(phi.coeffs.size());
  std::vector<BigInt> im(phi.coeffs.size());
  for (std::size_t k = 0; k < phi.coeffs.size(); ++k) {
    const BigInt& c = phi.coeffs[k];
    switch (k % 4) {
      case 0: re[k] = c; break;
      case 1: im[k] = c; break;
      case 2: re[k] = -c; break;
      case 3: im[k] = -c; break;
    }
  }
  IntPolynomial common = gcd(IntPolynomial(std::move(re)), IntPolynomial(std::move(im)));
  if (common.degree() < 1) return {};
  std::vector<BigInt> coeffs = common.coeffs();
  std::size_t shift = 0;
  while (shift < coeffs.size() && coeffs[shift] == 0) ++shift;
  common = IntPolynomial(std::vector<BigInt>(coeffs.begin() + static_cast<std::ptrdiff_t>(shift),
                                             coeffs.end()));

  std::vector<double> poles;
  for (const auto& [factor, multiplicity] : squarefree_decomposition(common)) {
    for (const auto& y : find_roots(factor)) {
      if (std::fabs(y.imag()) <= 1e-7 * (1.0 + std::abs(y))) poles.push_back(y.real());
    }
  }
  std::sort(poles.begin(), poles.end());
  return poles;
}

double coulson_energy(const CharPoly& phi, double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw DomainError("rel_tol must lie in (0, 1)");
  if (const auto poles = imaginary_axis_poles(phi); !poles.empty()) {
    std::ostringstream msg;
    msg << "PurelyImaginaryEigenvalue: Phi(ix) has a root at x =";
    for (double y : poles) msg << ' ' << y;
    throw PurelyImaginaryEigenvalue(msg.str(), poles.back());
  }
  if (phi.degree() <= 0) return 0.0;

  const CoulsonIntegrand integrand(phi);
  constexpr long double kPi = std::numbers::pi_v<long double>;
  constexpr int kPanels = 64;
  const long double width = kPi / kPanels;

  std::array<long double, kPanels> coarse{};
  long double estimate = 0;
  for (int i = 0; i < kPanels; ++i) {
    const long double a = -kPi / 2 + i * width;
    coarse[i] = gauss_panel(integrand, a, a + width);
    estimate += coarse[i];
  }
  // Energy is the integral over pi; compare against max(1, energy).
  const long double tolerance =
      0.01L * static_cast<long double>(rel_tol) * std::max(kPi, std::fabs(estimate)) / kPanels;
  long double total = 0;
  for (int i = 0; i < kPanels; ++i) {
    const long double a = -kPi / 2 + i * width;
    total += adaptive(integrand, a, a + width, coarse[i], tolerance, 40);
  }
  return static_cast<double>(total / kPi);
}

double coulson_energy(const Digraph& d, double rel_tol) {
  return coulson_energy(characteristic_polynomial(d), rel_tol);
}

}  // namespace digraph_energy
