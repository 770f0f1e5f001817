#include "entbound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "entbound/error.hpp"

namespace entbound {

namespace {

void require(bool cond, ErrorCode code, const char* what) {
  if (!cond) throw Error(code, what);
}

// Digits of a composite index, subsystem 0 most significant.
void split_index(std::size_t index, const Dims& dims, std::vector<std::size_t>& digits) {
  digits.resize(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = index % dims[k];
    index /= dims[k];
  }
}

std::size_t join_index(const std::vector<std::size_t>& digits, const Dims& dims) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + digits[k];
  return index;
}

void check_composite(const ComplexMatrix& rho, const Dims& dims) {
  require(rho.is_square(), ErrorCode::InvalidArgument, "matrix must be square");
  require(!dims.empty(), ErrorCode::InvalidArgument, "subsystem dimension list is empty");
  for (std::size_t d : dims) require(d > 0, ErrorCode::InvalidArgument, "subsystem dimension must be positive");
  require(product(dims) == rho.rows(), ErrorCode::InvalidArgument,
          "product of subsystem dimensions does not match matrix size");
}

std::vector<bool> subsystem_mask(const Dims& dims, const std::vector<std::size_t>& parts) {
  std::vector<bool> mask(dims.size(), false);
  for (std::size_t p : parts) {
    require(p < dims.size(), ErrorCode::InvalidArgument, "subsystem index out of range");
    require(!mask[p], ErrorCode::InvalidArgument, "duplicate subsystem index");
    mask[p] = true;
  }
  return mask;
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require(data_.size() == rows_ * cols_, ErrorCode::InvalidArgument,
          "entry count does not match rows * cols");
  for (const Complex& z : data_) {
    require(std::isfinite(z.real()) && std::isfinite(z.imag()), ErrorCode::InvalidArgument,
            "matrix entries must be finite");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (Complex& z : out.data_) z = std::conj(z);
  return out;
}

Complex ComplexMatrix::trace() const {
  require(is_square(), ErrorCode::InvalidArgument, "trace of a non-square matrix");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
  return sum;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, ErrorCode::InvalidArgument, "shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, ErrorCode::InvalidArgument, "shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require(lhs.cols() == rhs.rows(), ErrorCode::InvalidArgument, "shape mismatch in product");
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::InvalidArgument, "shape mismatch");
  double worst = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
  return worst;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (!m.is_square()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

bool is_hermitian(const ComplexMatrix& m, double tol) { return hermiticity_defect(m) <= tol; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex s = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
    }
  return out;
}

std::size_t product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

// ---------------------------------------------------------------------------
// Subsystem operations

ComplexMatrix partial_trace(const ComplexMatrix& rho, const Dims& dims,
                            const std::vector<std::size_t>& keep) {
  check_composite(rho, dims);
  const std::vector<bool> kept = subsystem_mask(dims, keep);

  Dims kept_dims;
  Dims traced_dims;
  for (std::size_t k = 0; k < dims.size(); ++k) (kept[k] ? kept_dims : traced_dims).push_back(dims[k]);
  const std::size_t dk = product(kept_dims);  // 1 when keep is empty

  ComplexMatrix out(dk, dk);
  std::vector<std::size_t> row_digits;
  std::vector<std::size_t> col_digits;
  std::vector<std::size_t> kept_digits;
  for (std::size_t r = 0; r < rho.rows(); ++r) {
    split_index(r, dims, row_digits);
    kept_digits.clear();
    for (std::size_t k = 0; k < dims.size(); ++k)
      if (kept[k]) kept_digits.push_back(row_digits[k]);
    const std::size_t rk = kept_dims.empty() ? 0 : join_index(kept_digits, kept_dims);

    // Columns share the traced digits of the row.
    for (std::size_t ck = 0; ck < dk; ++ck) {
      if (!kept_dims.empty()) split_index(ck, kept_dims, kept_digits);
      col_digits = row_digits;
      std::size_t j = 0;
      for (std::size_t k = 0; k < dims.size(); ++k)
        if (kept[k]) col_digits[k] = kept_digits[j++];
      out(rk, ck) += rho(r, join_index(col_digits, dims));
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const Dims& dims, std::size_t part) {
  return partial_transpose(rho, dims, std::vector<std::size_t>{part});
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const Dims& dims,
                                const std::vector<std::size_t>& parts) {
  check_composite(rho, dims);
  const std::vector<bool> mask = subsystem_mask(dims, parts);

  ComplexMatrix out(rho.rows(), rho.cols());
  std::vector<std::size_t> rd;
  std::vector<std::size_t> cd;
  for (std::size_t r = 0; r < rho.rows(); ++r) {
    for (std::size_t c = 0; c < rho.cols(); ++c) {
      split_index(r, dims, rd);
      split_index(c, dims, cd);
      for (std::size_t k = 0; k < dims.size(); ++k)
        if (mask[k]) std::swap(rd[k], cd[k]);
      out(join_index(rd, dims), join_index(cd, dims)) = rho(r, c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Eigen-based routines

HermitianSpectrum hermitian_eigen(const ComplexMatrix& m, const LinalgConfig& config) {
  require(m.is_square(), ErrorCode::InvalidArgument, "eigen decomposition needs a square matrix");
  if (hermiticity_defect(m) > config.hermitian_tol)
    throw Error(ErrorCode::Domain, "matrix is not Hermitian within tolerance");

  const std::size_t n = m.rows();
  // Work on the exactly Hermitian part.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  bool converged = (n < 2);
  for (int sweep = 0; sweep < config.max_sweeps && !converged; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        const double mag = std::abs(b);
        if (mag == 0.0) continue;
        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        // Negligible against both diagonal entries: drop it.
        if (std::abs(alpha) + 100.0 * mag == std::abs(alpha) &&
            std::abs(gamma) + 100.0 * mag == std::abs(gamma)) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotated = true;

        // Phase-strip the pivot to a real symmetric 2x2 block, then apply a
        // real Jacobi rotation. Combined column transform:
        //   G = [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
        const Complex phase_conj = std::conj(b / mag);
        const double theta = (gamma - alpha) / (2.0 * mag);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex gqp = -s * phase_conj;
        const Complex gqq = c * phase_conj;

        for (std::size_t k = 0; k < n; ++k) {  // A <- A G
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp + gqp * akq;
          a(k, q) = s * akp + gqq * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- G^dagger A
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(gqp) * aqk;
          a(q, k) = s * apk + std::conj(gqq) * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {  // V <- V G
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp + gqp * vkq;
          v(k, q) = s * vkp + gqq * vkq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
    converged = !rotated;
  }
  if (!converged) throw Error(ErrorCode::Numeric, "Jacobi eigensolver did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  HermitianSpectrum out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

double trace_norm(const ComplexMatrix& m, const LinalgConfig& config) {
  require(m.is_square(), ErrorCode::InvalidArgument, "trace norm needs a square matrix");
  if (is_hermitian(m, config.hermitian_tol)) {
    double sum = 0.0;
    for (double lambda : hermitian_eigen(m, config).eigenvalues) sum += std::abs(lambda);
    return sum;
  }
  double sum = 0.0;
  for (double lambda : hermitian_eigen(m.adjoint() * m, config).eigenvalues)
    sum += std::sqrt(std::max(lambda, 0.0));
  return sum;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, const LinalgConfig& config) {
  const HermitianSpectrum spec = hermitian_eigen(m, config);
  const std::size_t n = m.rows();
  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = spec.eigenvalues[k];
    if (lambda < -config.psd_clip_tol)
      throw Error(ErrorCode::Domain, "matrix is not positive semidefinite (eigenvalue " +
                                         std::to_string(lambda) + ")");
    roots[k] = std::sqrt(std::max(lambda, 0.0));
  }
  const ComplexMatrix& vecs = spec.eigenvectors;
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) sum += vecs(i, k) * roots[k] * std::conj(vecs(j, k));
      out(i, j) = sum;
    }
  return out;
}

}  // namespace entbound
