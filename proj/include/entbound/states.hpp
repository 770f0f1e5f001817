#pragma once

#include <array>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "entbound/linalg.hpp"

namespace entbound {

/// |<psi|psi> - 1| accepted for a PureState.
inline constexpr double kNormTolerance = 1e-12;
/// Constructor inputs whose squared norm is within this of 1 are silently
/// renormalized; further away is an error.
inline constexpr double kRenormalizeTolerance = 1e-6;
/// Trace and eigenvalue slack accepted for a DensityMatrix.
inline constexpr double kDensityTolerance = 1e-10;

class PureState {
 public:
  /// Throws unless dims multiply to the amplitude count and the norm is 1.
  PureState(Dims dims, std::vector<Complex> amplitudes);

  /// Rescales amplitudes whose squared norm is within kRenormalizeTolerance
  /// of 1; throws Domain otherwise.
  static PureState normalized(Dims dims, std::vector<Complex> amplitudes);

  const Dims& dims() const noexcept { return dims_; }
  std::size_t num_subsystems() const noexcept { return dims_.size(); }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }

 private:
  Dims dims_;
  std::vector<Complex> amps_;
};

class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and positivity (kDensityTolerance).
  DensityMatrix(Dims dims, ComplexMatrix mat);

  const Dims& dims() const noexcept { return dims_; }
  std::size_t num_subsystems() const noexcept { return dims_.size(); }
  const ComplexMatrix& matrix() const noexcept { return mat_; }

 private:
  struct Trusted {};
  DensityMatrix(Dims dims, ComplexMatrix mat, Trusted) : dims_(std::move(dims)), mat_(std::move(mat)) {}

  friend DensityMatrix to_density(const PureState& psi);
  friend DensityMatrix reduce(const DensityMatrix& rho, const std::vector<std::size_t>& keep);
  friend DensityMatrix reduce(const PureState& psi, const std::vector<std::size_t>& keep);

  Dims dims_;
  ComplexMatrix mat_;
};

/// Seedable generator with a fixed algorithm: std::mt19937_64 for raw bits,
/// 53-bit mantissa extraction for uniforms and Box-Muller for normals, so a
/// seed maps to the same stream on every conforming platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal.
  double normal();
  /// Complex standard normal: independent N(0,1) real and imaginary parts.
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// l0|000> + l1 e^{i phi}|100> + l2|110> + l3|101> + l4|111> (party 0
/// leftmost). The pairwise concurrences are C_12 = 2 l0 l2 and
/// C_13 = 2 l0 l3; the literature writes the same state with the
/// l2/l3 kets in the other order under a different party labelling.
PureState schmidt3_state(const std::array<double, 5>& lambdas, double phi = 0.0);

/// a|100> + b|010> + c|001>. The defaults give the instance with amplitudes
/// (1/2, 1/2, sqrt(2)/2).
PureState w_class_state(double a = 0.5, double b = 0.5, double c = std::numbers::sqrt2 / 2.0);

/// Haar-uniform pure state: normalized vector of complex standard normals.
PureState haar_random_pure(const Dims& dims, std::uint64_t seed);
PureState haar_random_pure(const Dims& dims, Rng& rng);

/// Haar-uniform d x d unitary (Gram-Schmidt on a complex Ginibre matrix).
ComplexMatrix haar_random_unitary(std::size_t d, Rng& rng);

/// (U_0 x U_1 x ... ) |psi>, one unitary per subsystem.
PureState apply_local_unitaries(const PureState& psi, const std::vector<ComplexMatrix>& unitaries);

DensityMatrix to_density(const PureState& psi);

/// Reduction onto `keep` (indices into the state's own subsystem list);
/// kept subsystems appear in ascending order.
DensityMatrix reduce(const DensityMatrix& rho, const std::vector<std::size_t>& keep);
/// Same as reduce(to_density(psi), keep) without forming the full projector.
DensityMatrix reduce(const PureState& psi, const std::vector<std::size_t>& keep);

}  // namespace entbound
