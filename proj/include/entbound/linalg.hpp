#pragma once

// Dense complex linear algebra for the small matrices (at most 64x64) that
// appear in few-qubit state analysis.
//
// Composite index convention: subsystem 0 is the leftmost tensor factor and
// composite indices are row-major, i.e. for dims (d0, d1, d2) the basis state
// |i0 i1 i2> has index (i0 * d1 + i1) * d2 + i2.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace entbound {

using Complex = std::complex<double>;
using Dims = std::vector<std::size_t>;

/// Maximum |m(i,j) - conj(m(j,i))| accepted as Hermitian.
inline constexpr double kHermitianTolerance = 1e-10;
/// Eigenvalues in [-kPsdClipTolerance, 0) of nominally PSD matrices are
/// clipped to zero; anything more negative is rejected.
inline constexpr double kPsdClipTolerance = 1e-10;

struct LinalgConfig {
  double hermitian_tol = kHermitianTolerance;
  double psd_clip_tol = kPsdClipTolerance;
  int max_sweeps = 100;
};

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Row-major entries; throws if the size is wrong or an entry is not finite.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::span<const Complex> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex s) { return lhs *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix rhs) { return rhs *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Largest entrywise |a - b|. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest |m(i,j) - conj(m(j,i))|; infinity for non-square input.
double hermiticity_defect(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTolerance);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

std::size_t product(const Dims& dims);

/// Reduced matrix over the subsystems in `keep` (any order, no duplicates);
/// kept factors appear in ascending subsystem order.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const Dims& dims,
                            const std::vector<std::size_t>& keep);

/// Transpose on the tensor factor(s) listed in `parts` only.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const Dims& dims, std::size_t part);
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const Dims& dims,
                                const std::vector<std::size_t>& parts);

struct HermitianSpectrum {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

/// Cyclic complex Jacobi eigensolver. Throws Domain for non-Hermitian input
/// and Numeric if the sweep limit is exhausted.
HermitianSpectrum hermitian_eigen(const ComplexMatrix& m, const LinalgConfig& config = {});

/// Sum of singular values. Hermitian input uses sum |eigenvalue|; other square
/// input goes through the eigenvalues of m^dagger m.
double trace_norm(const ComplexMatrix& m, const LinalgConfig& config = {});

/// Hermitian PSD square root; tiny negative eigenvalues are clipped.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, const LinalgConfig& config = {});

}  // namespace entbound
