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

#include "digraph_energy/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "digraph_energy/errors.hpp"

namespace digraph_energy {

// ---------------------------------------------------------------------------
// Characteristic polynomial

namespace {

struct Int64Overflow {};

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Int64Overflow{};
  return r;
}
BigInt add(const BigInt& a, const BigInt& b) { return a + b; }

std::int64_t negate_divide(std::int64_t trace, int k) {
  if (trace == std::numeric_limits<std::int64_t>::min()) throw Int64Overflow{};
  return -trace / k;
}
BigInt negate_divide(const BigInt& trace, int k) { return -trace / k; }

// M_1 = I; for k = 1..n: c_{n-k} = -tr(A M_k) / k, M_{k+1} = A M_k + c_{n-k} I.
// A is 0/1, so (A M)_ij is a sum of rows of M over out-neighbours of i.
template <typename Int>
std::vector<Int> faddeev_leverrier(const Digraph& d) {
  const int n = d.order();
  const auto size = static_cast<std::size_t>(n);
  std::vector<Int> coeff(size + 1, Int(0));
  coeff[size] = 1;
  std::vector<Int> m(size * size, Int(0));
  for (std::size_t i = 0; i < size; ++i) m[i * size + i] = 1;
  std::vector<Int> am(size * size);

  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) {
      Int* out = &am[static_cast<std::size_t>(i) * size];
      std::fill(out, out + size, Int(0));
      for (const Arc& arc : d.out_arcs(i)) {
        const Int* src = &m[static_cast<std::size_t>(arc.to) * size];
        for (std::size_t j = 0; j < size; ++j) out[j] = add(out[j], src[j]);
      }
    }
    Int trace = 0;
    for (std::size_t i = 0; i < size; ++i) trace = add(trace, am[i * size + i]);
    if (trace % k != 0) throw ConsistencyError("Faddeev-LeVerrier trace not divisible");
    const Int c = negate_divide(trace, k);
    coeff[size - static_cast<std::size_t>(k)] = c;
    m.swap(am);
    for (std::size_t i = 0; i < size; ++i) m[i * size + i] = add(m[i * size + i], c);
  }
  return coeff;
}

}  // namespace

CharPoly characteristic_polynomial(const Digraph& d) {
  CharPoly out;
  try {
    const auto small = faddeev_leverrier<std::int64_t>(d);
    out.coeffs.assign(small.begin(), small.end());
  } catch (const Int64Overflow&) {
    out.coeffs = faddeev_leverrier<BigInt>(d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Eigenvalues

namespace {

Eigen::MatrixXd to_eigen(const AdjacencyMatrix& m) {
  const int n = m.order();
  Eigen::MatrixXd out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = m(i, j);
  return out;
}

struct RootGroup {
  std::complex<double> value;
  int multiplicity;
};

std::string describe_factorization(const std::vector<std::pair<IntPolynomial, int>>& factors) {
  std::ostringstream out;
  for (const auto& [factor, multiplicity] : factors) {
    out << " (" << factor.to_string() << ")^" << multiplicity;
  }
  return out.str();
}

// Makes a real polynomial's numeric roots exactly conjugate-closed.
void enforce_conjugate_pairs(std::vector<std::complex<double>>& roots, double snap) {
  std::vector<std::size_t> upper;
  std::vector<std::size_t> lower;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (std::fabs(roots[k].imag()) <= snap) {
      roots[k] = {roots[k].real(), 0.0};
    } else if (roots[k].imag() > 0) {
      upper.push_back(k);
    } else {
      lower.push_back(k);
    }
  }
  if (upper.size() != lower.size()) {
    throw EigenSolverError("non-real roots of a real polynomial are not conjugate-closed");
  }
  std::vector<char> used(lower.size(), 0);
  for (std::size_t k : upper) {
    std::size_t best = lower.size();
    double best_distance = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (used[j]) continue;
      const double distance = std::abs(roots[k] - std::conj(roots[lower[j]]));
      if (distance < best_distance) {
        best_distance = distance;
        best = j;
      }
    }
    used[best] = 1;
    const std::complex<double> mean = 0.5 * (roots[k] + std::conj(roots[lower[best]]));
    roots[k] = mean;
    roots[lower[best]] = std::conj(mean);
  }
}

// Every exact root of multiplicity m must have m QR eigenvalues nearby. QR
// error on an m-fold defective eigenvalue scales like (eps |A|)^(1/m).
void cross_check(const std::vector<RootGroup>& groups, const Eigen::VectorXcd& qr, double rho,
                 double matrix_norm, const std::string& factorization) {
  std::vector<RootGroup> order = groups;
  std::stable_sort(order.begin(), order.end(), [](const RootGroup& x, const RootGroup& y) {
    return x.multiplicity > y.multiplicity;
  });
  std::vector<char> used(static_cast<std::size_t>(qr.size()), 0);
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  for (const RootGroup& group : order) {
    const double tolerance =
        (1e-6 + 100.0 * std::pow(kEps * (1.0 + matrix_norm), 1.0 / group.multiplicity)) *
        (1.0 + rho);
    for (int copy = 0; copy < group.multiplicity; ++copy) {
      Eigen::Index best = -1;
      double best_distance = std::numeric_limits<double>::infinity();
      for (Eigen::Index k = 0; k < qr.size(); ++k) {
        if (used[k]) continue;
        const double distance = std::abs(qr[k] - group.value);
        if (distance < best_distance) {
          best_distance = distance;
          best = k;
        }
      }
      if (best < 0 || best_distance > tolerance) {
        std::ostringstream msg;
        msg << "QR and characteristic-polynomial eigenvalues disagree near (" << group.value.real()
            << "," << group.value.imag() << ") with multiplicity " << group.multiplicity
            << "; factorization:" << factorization;
        throw EigenSolverError(msg.str());
      }
      used[best] = 1;
    }
  }
}

// Shifted QR can stall on highly structured defective matrices. Retry on
// exactly similar matrices: reversed vertex order, then diagonal scalings by
// powers of two (exact in floating point).
std::optional<Eigen::VectorXcd> qr_eigenvalues(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  auto attempt = [](const Eigen::MatrixXd& m) -> std::optional<Eigen::VectorXcd> {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) return std::nullopt;
    return solver.eigenvalues();
  };
  if (auto values = attempt(a)) return values;
  if (auto values = attempt(a.reverse())) return values;
  for (int round = 1; round <= 3; ++round) {
    Eigen::VectorXd scale(n);
    for (Eigen::Index i = 0; i < n; ++i) scale[i] = std::ldexp(1.0, static_cast<int>((i * round) % 3) - 1);
    const Eigen::MatrixXd similar = scale.asDiagonal() * a * scale.cwiseInverse().asDiagonal();
    if (auto values = attempt(similar)) return values;
  }
  return std::nullopt;
}

}  // namespace

Spectrum eigenvalues(const Digraph& d, SpectrumOptions options) {
  const int n = d.order();
  Spectrum out;
  if (n == 0) return out;

  const CharPoly phi = characteristic_polynomial(d);
  const IntPolynomial poly = phi.polynomial();
  const auto factors = squarefree_decomposition(poly);
  const std::string factorization = describe_factorization(factors);

  std::vector<std::vector<std::complex<double>>> factor_roots;
  double rho = 0;
  for (const auto& [factor, multiplicity] : factors) {
    try {
      factor_roots.push_back(find_roots(factor));
    } catch (const std::runtime_error& e) {
      throw EigenSolverError(std::string(e.what()) + "; factorization:" + factorization);
    }
    for (const auto& z : factor_roots.back()) rho = std::max(rho, std::abs(z));
  }

  std::vector<RootGroup> groups;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    enforce_conjugate_pairs(factor_roots[f], options.snap_tolerance * (1.0 + rho));
    for (const auto& z : factor_roots[f]) groups.push_back({z, factors[f].second});
  }

  const Eigen::MatrixXd a = to_eigen(adjacency_matrix(d));
  const auto qr = qr_eigenvalues(a);
  if (!qr) throw EigenSolverError("shifted QR did not converge; factorization:" + factorization);
  cross_check(groups, *qr, rho, a.norm(), factorization);

  for (const RootGroup& group : groups) {
    out.eigenvalues.insert(out.eigenvalues.end(), group.multiplicity, group.value);
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            [](const std::complex<double>& x, const std::complex<double>& y) {
              if (x.real() != y.real()) return x.real() > y.real();
              return x.imag() > y.imag();
            });

  out.rho = 0;
  for (const auto& z : out.eigenvalues) {
    out.rho = std::max(out.rho, std::abs(z));
    out.energy += std::fabs(z.real());
    out.sum_re_sq += z.real() * z.real();
    out.sum_im_sq += z.imag() * z.imag();
  }
  const double scale = std::pow(1.0 + out.rho, n);
  for (const auto& z : out.eigenvalues) {
    out.residual = std::max(out.residual, std::abs(evaluate(poly, z)) / scale);
  }
  if (out.residual > options.residual_tolerance) {
    std::ostringstream msg;
    msg << "eigenvalue residual " << out.residual << " exceeds " << options.residual_tolerance
        << "; factorization:" << factorization;
    throw EigenSolverError(msg.str());
  }
  return out;
}

double spectral_radius(const Digraph& d) { return eigenvalues(d).rho; }

double energy(const Digraph& d) { return eigenvalues(d).energy; }

double symmetric_spectral_radius(const AdjacencyMatrix& s) {
  if (s.order() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(s), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw EigenSolverError("symmetric eigensolver did not converge");
  }
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

AdjacencyMatrix square(const AdjacencyMatrix& m) {
  const int n = m.order();
  AdjacencyMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      const double v = m(i, l);
      if (v == 0.0) continue;
      for (int j = 0; j < n; ++j) out(i, j) += v * m(l, j);
    }
  return out;
}

MomentIdentities moment_identities(const Spectrum& s, const ClosedWalkProfile& p) {
  MomentIdentities out;
  out.sum_re_sq = s.sum_re_sq;
  out.sum_im_sq = s.sum_im_sq;
  out.lemma_i_residual = (s.sum_re_sq - s.sum_im_sq) - static_cast<double>(p.c2_total);
  out.lemma_ii_slack = static_cast<double>(p.a) - (s.sum_re_sq + s.sum_im_sq);
  return out;
}

MomentIdentities moment_identities(const Digraph& d) {
  return moment_identities(eigenvalues(d), walk_profile(d));
}

}  // namespace digraph_energy
