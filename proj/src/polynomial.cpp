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

#include "digraph_energy/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace digraph_energy {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::operator[](int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

std::string IntPolynomial::to_string(char variable) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (magnitude != 1 || k == 0) out << magnitude;
    if (k >= 1) out << variable;
    if (k >= 2) out << '^' << k;
    first = false;
  }
  return out.str();
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  const int size = std::max(a.degree(), b.degree()) + 1;
  std::vector<BigInt> out(static_cast<std::size_t>(std::max(size, 0)));
  for (int k = 0; k < size; ++k) out[k] = a[k] - b[k];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(a.degree() + b.degree() + 1));
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial derivative(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) out[k - 1] = p.coeffs()[k] * k;
  return IntPolynomial(std::move(out));
}

BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const BigInt& c : p.coeffs()) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g < 0 ? BigInt(-g) : g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> out = p.coeffs();
  for (BigInt& c : out) c /= g;
  return IntPolynomial(std::move(out));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by the zero polynomial");
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  const BigInt& lb = b.leading();
  int dr = a.degree();
  int steps = std::max(a.degree() - db + 1, 0);
  while (dr >= db && dr >= 0) {
    const BigInt lr = r[dr];
    for (int k = 0; k < dr; ++k) r[k] *= lb;
    for (int k = 0; k <= db; ++k) r[dr - db + k] -= lr * b.coeffs()[k];
    r[dr] = 0;
    --steps;
    while (dr >= 0 && r[dr] == 0) --dr;
  }
  // Top up to the full lc(b)^(deg a - deg b + 1) multiplier.
  for (; steps > 0; --steps)
    for (BigInt& c : r) c *= lb;
  return IntPolynomial(std::move(r));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = primitive_part(a);
  IntPolynomial y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    throw std::domain_error("inexact polynomial division");
  }
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const int db = b.degree();
  const BigInt& lb = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const BigInt& top = r[k + db];
    if (top % lb != 0) throw std::domain_error("inexact polynomial division");
    q[k] = top / lb;
    for (int j = 0; j <= db; ++j) r[k + j] -= q[k] * b.coeffs()[j];
  }
  for (const BigInt& c : r) {
    if (c != 0) throw std::domain_error("inexact polynomial division");
  }
  return IntPolynomial(std::move(q));
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
  std::vector<std::pair<IntPolynomial, int>> factors;
  if (p.degree() == 0) return factors;

  const IntPolynomial f = primitive_part(p);
  const IntPolynomial df = derivative(f);
  const IntPolynomial g = gcd(f, df);
  IntPolynomial c = exact_quotient(f, g);
  IntPolynomial d = exact_quotient(df, g) - derivative(c);
  for (int multiplicity = 1; c.degree() > 0; ++multiplicity) {
    const IntPolynomial a = gcd(c, d);
    c = exact_quotient(c, a);
    d = exact_quotient(d, a) - derivative(c);
    if (a.degree() > 0) factors.emplace_back(a, multiplicity);
  }
  return factors;
}

// ---------------------------------------------------------------------------
// Numeric evaluation and roots

namespace {

std::vector<long double> to_long_double(const IntPolynomial& p) {
  std::vector<long double> out;
  out.reserve(p.coeffs().size());
  for (const BigInt& c : p.coeffs()) out.push_back(c.convert_to<long double>());
  return out;
}

}  // namespace

std::complex<double> evaluate(const IntPolynomial& p, std::complex<double> z) {
  std::complex<long double> acc = 0;
  const std::complex<long double> x(z.real(), z.imag());
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeffs()[k].convert_to<long double>();
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::pair<std::complex<long double>, std::complex<long double>> evaluate_with_derivative(
    const IntPolynomial& p, std::complex<long double> z) {
  std::complex<long double> value = 0;
  std::complex<long double> slope = 0;
  for (int k = p.degree(); k >= 0; --k) {
    slope = slope * z + value;
    value = value * z + p.coeffs()[k].convert_to<long double>();
  }
  return {value, slope};
}

std::vector<std::complex<double>> find_roots(const IntPolynomial& p, RootFindOptions options) {
  using Complex = std::complex<long double>;
  const int degree = p.degree();
  if (degree < 1) return {};

  const std::vector<long double> c = to_long_double(p);
  std::vector<long double> magnitude(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) magnitude[k] = std::fabs(c[k]);

  auto eval = [&](Complex z) {
    Complex value = 0;
    Complex slope = 0;
    long double bound = 0;
    const long double r = std::abs(z);
    for (int k = degree; k >= 0; --k) {
      slope = slope * z + value;
      value = value * z + c[k];
      bound = bound * r + magnitude[k];
    }
    return std::tuple{value, slope, bound};
  };

  // Fujiwara bound on root moduli; start on a circle inside it, rotated off
  // the real axis so conjugate pairs separate.
  long double upper = 0;
  const long double lead = std::fabs(c[degree]);
  for (int k = 1; k <= degree; ++k) {
    long double ratio = std::fabs(c[degree - k]) / lead;
    if (k == degree) ratio /= 2;
    upper = std::max(upper, std::pow(ratio, 1.0L / k));
  }
  upper *= 2;
  if (upper == 0) upper = 1;

  std::vector<Complex> z(static_cast<std::size_t>(degree));
  constexpr long double kTwoPi = 2 * std::numbers::pi_v<long double>;
  for (int k = 0; k < degree; ++k) {
    z[k] = std::polar(0.5L * upper, kTwoPi * k / degree + 0.4L);
  }

  constexpr long double kEps = std::numeric_limits<double>::epsilon();
  std::vector<char> converged(static_cast<std::size_t>(degree), 0);
  int remaining = degree;
  for (int iter = 0; iter < options.max_iterations && remaining > 0; ++iter) {
    for (int k = 0; k < degree; ++k) {
      if (converged[k]) continue;
      const auto [value, slope, bound] = eval(z[k]);
      if (std::abs(value) <= 4 * kEps * bound) {
        converged[k] = 1;
        --remaining;
        continue;
      }
      Complex repulsion = 0;
      for (int j = 0; j < degree; ++j) {
        if (j != k) repulsion += 1.0L / (z[k] - z[j]);
      }
      const Complex newton = value / slope;
      Complex step = newton / (1.0L - newton * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        step = Complex(1e-3L * upper, 1e-3L * upper);
      }
      z[k] -= step;
    }
  }
  if (remaining > 0) {
    std::ostringstream msg;
    msg << "Aberth iteration did not converge for " << p.to_string() << "; converged roots:";
    for (int k = 0; k < degree; ++k) {
      if (converged[k]) {
        msg << " (" << static_cast<double>(z[k].real()) << "," << static_cast<double>(z[k].imag())
            << ")";
      }
    }
    throw std::runtime_error(msg.str());
  }

  // Newton polish in extended precision; only accept steps that reduce the
  // residual.
  for (Complex& root : z) {
    for (int step = 0; step < 3; ++step) {
      const auto [value, slope, bound] = eval(root);
      if (slope == Complex(0)) break;
      const Complex candidate = root - value / slope;
      if (std::abs(std::get<0>(eval(candidate))) < std::abs(value)) {
        root = candidate;
      } else {
        break;
      }
    }
  }

  std::vector<std::complex<double>> out;
  out.reserve(z.size());
  for (const Complex& root : z) {
    out.emplace_back(static_cast<double>(root.real()), static_cast<double>(root.imag()));
  }
  return out;
}

}  // namespace digraph_energy
