#include "entbound/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entbound/error.hpp"

namespace entbound {

namespace {

double squared_norm(std::span<const Complex> amps) {
  double sum = 0.0;
  for (const Complex& z : amps) sum += std::norm(z);
  return sum;
}

void check_dims(const Dims& dims, std::size_t size) {
  if (dims.empty()) throw Error(ErrorCode::InvalidArgument, "state needs at least one subsystem");
  for (std::size_t d : dims)
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "subsystem dimension must be positive");
  if (product(dims) != size)
    throw Error(ErrorCode::InvalidArgument, "amplitude count does not match subsystem dimensions");
}

std::vector<std::size_t> sorted_keep(const std::vector<std::size_t>& keep, std::size_t n) {
  std::vector<std::size_t> out = keep;
  std::sort(out.begin(), out.end());
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "keep set is empty");
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw Error(ErrorCode::InvalidArgument, "keep set has duplicate indices");
  if (out.back() >= n) throw Error(ErrorCode::InvalidArgument, "keep index out of range");
  return out;
}

}  // namespace

PureState::PureState(Dims dims, std::vector<Complex> amplitudes)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
  check_dims(dims_, amps_.size());
  for (const Complex& z : amps_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::InvalidArgument, "amplitudes must be finite");
  if (std::abs(squared_norm(amps_) - 1.0) > kNormTolerance)
    throw Error(ErrorCode::Domain, "state is not normalized");
}

PureState PureState::normalized(Dims dims, std::vector<Complex> amplitudes) {
  const double n2 = squared_norm(amplitudes);
  if (!(std::abs(n2 - 1.0) <= kRenormalizeTolerance))
    throw Error(ErrorCode::Domain, "squared norm " + std::to_string(n2) + " is too far from 1");
  const double scale = 1.0 / std::sqrt(n2);
  for (Complex& z : amplitudes) z *= scale;
  return PureState(std::move(dims), std::move(amplitudes));
}

DensityMatrix::DensityMatrix(Dims dims, ComplexMatrix mat) : dims_(std::move(dims)), mat_(std::move(mat)) {
  if (!mat_.is_square()) throw Error(ErrorCode::InvalidArgument, "density matrix must be square");
  check_dims(dims_, mat_.rows());
  if (!is_hermitian(mat_, kDensityTolerance)) throw Error(ErrorCode::Domain, "density matrix is not Hermitian");
  if (std::abs(mat_.trace() - 1.0) > kDensityTolerance)
    throw Error(ErrorCode::Domain, "density matrix does not have unit trace");
  const auto spectrum = hermitian_eigen(mat_);
  if (spectrum.eigenvalues.back() < -kDensityTolerance)
    throw Error(ErrorCode::Domain, "density matrix has a negative eigenvalue");
}

// ---------------------------------------------------------------------------

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  // 1 - uniform() lies in (0, 1], keeping the logarithm finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

// ---------------------------------------------------------------------------

PureState schmidt3_state(const std::array<double, 5>& lambdas, double phi) {
  for (double l : lambdas)
    if (!(l >= 0.0) || !std::isfinite(l))
      throw Error(ErrorCode::Domain, "Schmidt coefficients must be finite and nonnegative");
  std::vector<Complex> amps(8, Complex{});
  amps[0b000] = lambdas[0];
  amps[0b100] = std::polar(lambdas[1], phi);
  // l2 sits on the A1A2-correlated slot so that C_12 = 2 l0 l2, C_13 = 2 l0 l3.
  amps[0b110] = lambdas[2];
  amps[0b101] = lambdas[3];
  amps[0b111] = lambdas[4];
  return PureState::normalized({2, 2, 2}, std::move(amps));
}

PureState w_class_state(double a, double b, double c) {
  for (double x : {a, b, c})
    if (!(x >= 0.0) || !std::isfinite(x))
      throw Error(ErrorCode::Domain, "W-class amplitudes must be finite and nonnegative");
  std::vector<Complex> amps(8, Complex{});
  amps[0b100] = a;
  amps[0b010] = b;
  amps[0b001] = c;
  return PureState::normalized({2, 2, 2}, std::move(amps));
}

PureState haar_random_pure(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_pure(dims, rng);
}

PureState haar_random_pure(const Dims& dims, Rng& rng) {
  const std::size_t size = product(dims);
  check_dims(dims, size);
  std::vector<Complex> amps(size);
  double n2 = 0.0;
  do {
    for (Complex& z : amps) z = rng.complex_normal();
    n2 = squared_norm(amps);
  } while (n2 == 0.0);
  const double scale = 1.0 / std::sqrt(n2);
  for (Complex& z : amps) z *= scale;
  return PureState(dims, std::move(amps));
}

ComplexMatrix haar_random_unitary(std::size_t d, Rng& rng) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "unitary dimension must be positive");
  ComplexMatrix u(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) u(r, c) = rng.complex_normal();
  // Modified Gram-Schmidt on the columns.
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      Complex overlap = 0.0;
      for (std::size_t r = 0; r < d; ++r) overlap += std::conj(u(r, prev)) * u(r, c);
      for (std::size_t r = 0; r < d; ++r) u(r, c) -= overlap * u(r, prev);
    }
    double n2 = 0.0;
    for (std::size_t r = 0; r < d; ++r) n2 += std::norm(u(r, c));
    const double scale = 1.0 / std::sqrt(n2);
    for (std::size_t r = 0; r < d; ++r) u(r, c) *= scale;
  }
  return u;
}

PureState apply_local_unitaries(const PureState& psi, const std::vector<ComplexMatrix>& unitaries) {
  if (unitaries.size() != psi.num_subsystems())
    throw Error(ErrorCode::InvalidArgument, "need one unitary per subsystem");
  ComplexMatrix total = ComplexMatrix::identity(1);
  for (std::size_t k = 0; k < unitaries.size(); ++k) {
    if (unitaries[k].rows() != psi.dims()[k] || !unitaries[k].is_square())
      throw Error(ErrorCode::InvalidArgument, "unitary does not match subsystem dimension");
    total = kron(total, unitaries[k]);
  }
  std::vector<Complex> out(psi.dimension(), Complex{});
  auto amps = psi.amplitudes();
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[i] += total(i, j) * amps[j];
  return PureState::normalized(psi.dims(), std::move(out));
}

DensityMatrix to_density(const PureState& psi) {
  const std::size_t n = psi.dimension();
  auto amps = psi.amplitudes();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = amps[i] * std::conj(amps[j]);
  return DensityMatrix(psi.dims(), std::move(m), DensityMatrix::Trusted{});
}

DensityMatrix reduce(const DensityMatrix& rho, const std::vector<std::size_t>& keep) {
  const auto k = sorted_keep(keep, rho.num_subsystems());
  Dims kept_dims;
  for (std::size_t idx : k) kept_dims.push_back(rho.dims()[idx]);
  return DensityMatrix(std::move(kept_dims), partial_trace(rho.matrix(), rho.dims(), k),
                       DensityMatrix::Trusted{});
}

DensityMatrix reduce(const PureState& psi, const std::vector<std::size_t>& keep) {
  const auto k = sorted_keep(keep, psi.num_subsystems());
  const Dims& dims = psi.dims();
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t idx : k) kept[idx] = true;

  Dims kept_dims;
  Dims traced_dims;
  for (std::size_t s = 0; s < dims.size(); ++s) (kept[s] ? kept_dims : traced_dims).push_back(dims[s]);
  const std::size_t dk = product(kept_dims);
  const std::size_t dt = traced_dims.empty() ? 1 : product(traced_dims);

  // Reshape psi into a dk x dt matrix M; the reduction is M M^dagger.
  ComplexMatrix m(dk, dt);
  auto amps = psi.amplitudes();
  for (std::size_t index = 0; index < amps.size(); ++index) {
    std::size_t rest = index;
    std::size_t row = 0, row_stride = 1;
    std::size_t col = 0, col_stride = 1;
    for (std::size_t s = dims.size(); s-- > 0;) {
      const std::size_t digit = rest % dims[s];
      rest /= dims[s];
      if (kept[s]) {
        row += digit * row_stride;
        row_stride *= dims[s];
      } else {
        col += digit * col_stride;
        col_stride *= dims[s];
      }
    }
    m(row, col) = amps[index];
  }
  ComplexMatrix out(dk, dk);
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = i; j < dk; ++j) {
      Complex sum = 0.0;
      for (std::size_t c = 0; c < dt; ++c) sum += m(i, c) * std::conj(m(j, c));
      out(i, j) = sum;
      out(j, i) = std::conj(sum);
    }
  return DensityMatrix(std::move(kept_dims), std::move(out), DensityMatrix::Trusted{});
}

}  // namespace entbound
