// Copyright 2026 The qslkit Authors
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

#include "qslkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qslkit/errors.hpp"
#include "qslkit/tolerances.hpp"

namespace qslkit {
namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b,
                      const char* op) {
  if (a.dim() != b.dim()) {
    throw InvalidInput(std::string(op) + ": dimension mismatch (" +
                       std::to_string(a.dim()) + " vs " +
                       std::to_string(b.dim()) + ")");
  }
}

void require_finite(const ComplexMatrix& m, const char* op) {
  if (!m.is_finite()) {
    throw InvalidInput(std::string(op) + ": non-finite matrix entry");
  }
}

double frobenius_off_diagonal(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

double frobenius(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const Complex& z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

// Closed-form spectrum of a 2x2 Hermitian matrix, descending.
std::vector<double> hermitian_eigenvalues_2x2(const ComplexMatrix& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
  return {mean + radius, mean - radius};
}

// Cyclic complex Jacobi. Each rotation first removes the phase of a_pq with
// a diagonal unitary and then applies the real symmetric Jacobi rotation.
HermitianEigen jacobi_eigen(ComplexMatrix a) {
  const std::size_t n = a.dim();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = frobenius(a);
  constexpr int kMaxSweeps = 100;
  const double eps = std::numeric_limits<double>::epsilon();

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (frobenius_off_diagonal(a) <= eps * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const Complex phase = a(p, q) / r;  // e^{i phi}
        const Complex phase_conj = std::conj(phase);
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // A <- A U and V <- V U.
        auto rotate_columns = [&](ComplexMatrix& m) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex mkp = m(k, p);
            const Complex mkq = m(k, q);
            m(k, p) = c * mkp - s * phase_conj * mkq;
            m(k, q) = s * mkp + c * phase_conj * mkq;
          }
        };
        rotate_columns(a);
        rotate_columns(v);
        // A <- U^dagger A.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t row = 0; row < n; ++row) {
      out.vectors(row, k) = v(row, order[k]);
    }
  }
  return out;
}

void require_hermitian(const ComplexMatrix& m, const char* op) {
  require_finite(m, op);
  if (!m.is_hermitian(tol::kHermiticity * std::max(1.0, m.max_abs()))) {
    throw InvalidInput(std::string(op) + ": matrix is not Hermitian");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw InvalidInput("ComplexMatrix: expected " + std::to_string(dim_ * dim_) +
                       " entries, got " + std::to_string(entries_.size()));
  }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) {
      throw InvalidInput("ComplexMatrix: rows must form a square matrix");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::hermitian(std::size_t dim,
                                       std::vector<Complex> entries) {
  ComplexMatrix m(dim, std::move(entries));
  if (!m.is_finite() || !m.is_hermitian(tol::kHermiticity)) {
    throw InvalidInput("ComplexMatrix::hermitian: matrix is not Hermitian");
  }
  return m;
}

ComplexMatrix ComplexMatrix::hermitian(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix m(rows);
  if (!m.is_finite() || !m.is_hermitian(tol::kHermiticity)) {
    throw InvalidInput("ComplexMatrix::hermitian: matrix is not Hermitian");
  }
  return m;
}

bool ComplexMatrix::is_finite() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

bool ComplexMatrix::is_hermitian(double tolerance) const noexcept {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tolerance) {
        return false;
      }
    }
  }
  return true;
}

double ComplexMatrix::max_abs() const noexcept {
  double best = 0.0;
  for (const Complex& z : entries_) best = std::max(best, std::abs(z));
  return best;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "add");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "subtract");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (Complex& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

ComplexMatrix operator*(ComplexMatrix lhs, Complex scalar) {
  lhs *= scalar;
  return lhs;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix rhs) {
  rhs *= scalar;
  return rhs;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs, "multiply");
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex lik = lhs(i, k);
      if (lik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += lik * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) { return a + b; }

ComplexMatrix scale(const ComplexMatrix& a, Complex scalar) { return a * scalar; }

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

Complex trace(const ComplexMatrix& a) {
  Complex sum{};
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a(i, i);
  return sum;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b + b * a;
}

double schatten_index(NormKind kind) noexcept {
  switch (kind) {
    case NormKind::kOperator:
      return std::numeric_limits<double>::infinity();
    case NormKind::kHilbertSchmidt:
      return 2.0;
    case NormKind::kTrace:
      return 1.0;
  }
  return 0.0;
}

double plateau_constant(NormKind kind) noexcept {
  switch (kind) {
    case NormKind::kOperator:
      return 1.0;
    case NormKind::kHilbertSchmidt:
      return std::sqrt(2.0);
    case NormKind::kTrace:
      return 2.0;
  }
  return 0.0;
}

std::string_view to_string(NormKind kind) noexcept {
  switch (kind) {
    case NormKind::kOperator:
      return "op";
    case NormKind::kHilbertSchmidt:
      return "hs";
    case NormKind::kTrace:
      return "tr";
  }
  return "?";
}

NormKind parse_norm_kind(std::string_view text) {
  if (text == "op" || text == "inf") return NormKind::kOperator;
  if (text == "hs" || text == "2") return NormKind::kHilbertSchmidt;
  if (text == "tr" || text == "1") return NormKind::kTrace;
  throw InvalidInput("unsupported norm '" + std::string(text) +
                     "' (expected op, hs or tr)");
}

NormKind norm_kind_from_index(double p) {
  if (std::isinf(p) && p > 0) return NormKind::kOperator;
  if (p == 2.0) return NormKind::kHilbertSchmidt;
  if (p == 1.0) return NormKind::kTrace;
  throw InvalidInput("unsupported Schatten index p = " + std::to_string(p) +
                     " (supported: 1, 2, inf)");
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  require_hermitian(m, "hermitian_eigen");
  // Symmetrize so that the rotations see an exactly Hermitian input.
  ComplexMatrix sym = m;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    sym(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.dim(); ++j) {
      sym(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      sym(j, i) = std::conj(sym(i, j));
    }
  }
  return jacobi_eigen(std::move(sym));
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.dim() == 2) {
    require_hermitian(m, "hermitian_eigenvalues");
    return hermitian_eigenvalues_2x2(m);
  }
  return hermitian_eigen(m).values;
}

SingularSpectrum singular_values(const ComplexMatrix& m) {
  require_finite(m, "singular_values");
  const std::size_t n = m.dim();
  if (n == 0) return {};
  if (n == 1) return {{std::abs(m(0, 0))}};
  if (n == 2) {
    // sigma1^2 + sigma2^2 = ||M||_F^2 and sigma1 sigma2 = |det M|; the small
    // value is recovered from the determinant to avoid cancellation.
    double frob2 = 0.0;
    for (const Complex& z : m.entries()) frob2 += std::norm(z);
    const double det = std::abs(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
    const double disc =
        std::sqrt(std::max(0.0, (frob2 - 2.0 * det) * (frob2 + 2.0 * det)));
    const double s1 = std::sqrt(0.5 * (frob2 + disc));
    const double s2 = s1 > 0.0 ? std::min(s1, det / s1) : 0.0;
    return {{s1, s2}};
  }
  std::vector<double> eig = hermitian_eigen(adjoint(m) * m).values;
  SingularSpectrum out;
  out.values.reserve(n);
  for (double ev : eig) out.values.push_back(std::sqrt(std::max(0.0, ev)));
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

double schatten_norm(const SingularSpectrum& spectrum, NormKind kind) noexcept {
  if (spectrum.values.empty()) return 0.0;
  switch (kind) {
    case NormKind::kOperator:
      return spectrum.values.front();
    case NormKind::kHilbertSchmidt: {
      double sum = 0.0;
      for (double s : spectrum.values) sum += s * s;
      return std::sqrt(sum);
    }
    case NormKind::kTrace:
      return std::accumulate(spectrum.values.begin(), spectrum.values.end(), 0.0);
  }
  return 0.0;
}

double schatten_norm(const ComplexMatrix& m, NormKind kind) {
  return schatten_norm(singular_values(m), kind);
}

}  // namespace qslkit
