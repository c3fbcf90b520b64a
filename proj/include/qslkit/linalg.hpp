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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace qslkit {

using Complex = std::complex<double>;

/// Dense square complex matrix stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim);
  /// Row-major entries; entries.size() must equal dim * dim.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  /// Nested rows, e.g. {{0, 1}, {0, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);
  /// Validating constructor: throws InvalidInput unless M = M^dagger within
  /// tol::kHermiticity elementwise.
  static ComplexMatrix hermitian(std::size_t dim, std::vector<Complex> entries);
  static ComplexMatrix hermitian(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  bool is_finite() const noexcept;
  bool is_hermitian(double tolerance) const noexcept;
  /// Largest elementwise modulus.
  double max_abs() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(ComplexMatrix lhs, Complex scalar);
ComplexMatrix operator*(Complex scalar, ComplexMatrix rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, Complex scalar);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
/// AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
/// AB + BA.
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Singular values in descending order; each values[i] >= values[i+1] >= 0.
struct SingularSpectrum {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  double largest() const { return values.front(); }
};

/// Schatten index restricted to the three norms the bounds use.
enum class NormKind {
  kOperator,        // p = infinity
  kHilbertSchmidt,  // p = 2
  kTrace,           // p = 1
};

inline constexpr NormKind kAllNorms[] = {NormKind::kOperator,
                                         NormKind::kHilbertSchmidt,
                                         NormKind::kTrace};

/// Schatten index p; +infinity for the operator norm.
double schatten_index(NormKind kind) noexcept;
/// Plateau constant n = 2^(1/p): 1, sqrt(2), 2.
double plateau_constant(NormKind kind) noexcept;
std::string_view to_string(NormKind kind) noexcept;
/// Accepts "op", "hs", "tr" and the aliases "inf", "2", "1".
NormKind parse_norm_kind(std::string_view text);
/// Maps p in {1, 2, +inf} to a NormKind; anything else is InvalidInput.
NormKind norm_kind_from_index(double p);

/// Eigen-decomposition of a Hermitian matrix: M = V diag(values) V^dagger,
/// values descending, the columns of `vectors` orthonormal.
struct HermitianEigen {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Throws InvalidInput for non-finite or non-Hermitian input.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Eigenvalues of sqrt(M^dagger M), descending. Roundoff negatives of
/// M^dagger M are clamped to zero. Dimension 2 uses a closed form.
SingularSpectrum singular_values(const ComplexMatrix& m);

double schatten_norm(const SingularSpectrum& spectrum, NormKind kind) noexcept;
double schatten_norm(const ComplexMatrix& m, NormKind kind);

}  // namespace qslkit
