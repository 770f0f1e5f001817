#include "entbound/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entbound/error.hpp"

namespace entbound {

namespace {

// Eigenvalues of rho below this are treated as numerical zeros when building
// the Wootters factorization; a genuine weight this small moves mu by at most
// sqrt(1e-13).
constexpr double kRankTolerance = 1e-13;

std::vector<bool> validate_partition(const Dims& dims, const std::vector<std::size_t>& part_a) {
  std::vector<bool> in_a(dims.size(), false);
  for (std::size_t idx : part_a) {
    if (idx >= dims.size()) throw Error(ErrorCode::InvalidArgument, "partition index out of range");
    if (in_a[idx]) throw Error(ErrorCode::InvalidArgument, "duplicate index in partition");
    in_a[idx] = true;
  }
  if (part_a.empty() || part_a.size() == dims.size())
    throw Error(ErrorCode::InvalidArgument, "partition must be a proper nonempty subset");
  return in_a;
}

// psi reshaped to a dim(A) x dim(rest) matrix.
ComplexMatrix bipartite_matrix(const PureState& psi, const std::vector<bool>& in_a) {
  const Dims& dims = psi.dims();
  std::size_t da = 1;
  for (std::size_t s = 0; s < dims.size(); ++s)
    if (in_a[s]) da *= dims[s];
  ComplexMatrix m(da, psi.dimension() / da);
  auto amps = psi.amplitudes();
  for (std::size_t index = 0; index < amps.size(); ++index) {
    std::size_t rest = index;
    std::size_t row = 0, row_stride = 1, col = 0, col_stride = 1;
    for (std::size_t s = dims.size(); s-- > 0;) {
      const std::size_t digit = rest % dims[s];
      rest /= dims[s];
      if (in_a[s]) {
        row += digit * row_stride;
        row_stride *= dims[s];
      } else {
        col += digit * col_stride;
        col_stride *= dims[s];
      }
    }
    m(row, col) = amps[index];
  }
  return m;
}

void require_two_qubits(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2})
    throw Error(ErrorCode::InvalidArgument, "two-qubit closed form needs dims [2, 2]");
}

}  // namespace

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::Concurrence: return "concurrence";
    case MeasureKind::NegativityScren: return "scren";
    case MeasureKind::Screnoa: return "screnoa";
    case MeasureKind::ConcurrenceAssistance: return "coa";
  }
  return "unknown";
}

std::optional<MeasureKind> parse_measure_kind(std::string_view name) {
  if (name == "concurrence") return MeasureKind::Concurrence;
  if (name == "scren" || name == "negativity_scren") return MeasureKind::NegativityScren;
  if (name == "screnoa") return MeasureKind::Screnoa;
  if (name == "coa" || name == "concurrence_assistance") return MeasureKind::ConcurrenceAssistance;
  return std::nullopt;
}

double concurrence_pure(const PureState& psi, const std::vector<std::size_t>& part_a) {
  const ComplexMatrix m = bipartite_matrix(psi, validate_partition(psi.dims(), part_a));
  // 1 - Tr rho_A^2 = 2 e_2(rho_A), and by Cauchy-Binet e_2 of M M^dagger is
  // the sum of squared 2x2 minors of M. Summing minors avoids the
  // cancellation in 1 - Tr rho_A^2 for weakly entangled states.
  double e2 = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.rows(); ++j)
      for (std::size_t k = 0; k < m.cols(); ++k)
        for (std::size_t l = k + 1; l < m.cols(); ++l)
          e2 += std::norm(m(i, k) * m(j, l) - m(i, l) * m(j, k));
  return 2.0 * std::sqrt(e2);
}

double concurrence_pure_from_purity(const PureState& psi, const std::vector<std::size_t>& part_a) {
  validate_partition(psi.dims(), part_a);
  const ComplexMatrix rho_a = reduce(psi, part_a).matrix();
  const double purity = (rho_a * rho_a).trace().real();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

std::vector<double> wootters_mu(const DensityMatrix& rho) {
  require_two_qubits(rho);
  const HermitianSpectrum spec = hermitian_eigen(rho.matrix());

  // rho = W W^dagger with W built from the numerically nonzero eigenpairs.
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < 4; ++k) {
    const double lambda = spec.eigenvalues[k];
    if (lambda < -kPsdClipTolerance) throw Error(ErrorCode::Domain, "state has a negative eigenvalue");
    if (lambda > kRankTolerance) support.push_back(k);
  }
  const std::size_t rank = support.size();
  ComplexMatrix w(4, rank);
  for (std::size_t j = 0; j < rank; ++j) {
    const double root = std::sqrt(spec.eigenvalues[support[j]]);
    for (std::size_t i = 0; i < 4; ++i) w(i, j) = root * spec.eigenvectors(i, support[j]);
  }

  // The mu_i are the singular values of tau = W^T (sy x sy) W. They are read
  // off as the positive eigenvalues of [[0, tau], [tau^dagger, 0]] rather than
  // as square roots of eigenvalues of tau^dagger tau, which would amplify
  // round-off near zero.
  static const ComplexMatrix spin_flip(4, 4, {0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 0});
  const ComplexMatrix tau = w.transpose() * spin_flip * w;
  ComplexMatrix augmented(2 * rank, 2 * rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) {
      augmented(i, rank + j) = tau(i, j);
      augmented(rank + j, i) = std::conj(tau(i, j));
    }

  std::vector<double> mu(4, 0.0);
  if (rank > 0) {
    const auto values = hermitian_eigen(augmented).eigenvalues;
    for (std::size_t k = 0; k < rank; ++k) mu[k] = std::max(0.0, values[k]);
  }
  return mu;
}

double concurrence_2q(const DensityMatrix& rho) {
  const std::vector<double> mu = wootters_mu(rho);
  return std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
}

double concurrence_assistance_2q(const DensityMatrix& rho) {
  const std::vector<double> mu = wootters_mu(rho);
  return mu[0] + mu[1] + mu[2] + mu[3];
}

double negativity(const DensityMatrix& rho, const std::vector<std::size_t>& part_a,
                  NegativityConvention convention) {
  validate_partition(rho.dims(), part_a);
  const double norm = trace_norm(partial_transpose(rho.matrix(), rho.dims(), part_a));
  const double value = std::max(0.0, norm - 1.0);
  return convention == NegativityConvention::Halved ? value / 2.0 : value;
}

double negativity_pure(const PureState& psi, const std::vector<std::size_t>& part_a,
                       NegativityConvention convention) {
  validate_partition(psi.dims(), part_a);
  const auto spectrum = hermitian_eigen(reduce(psi, part_a).matrix());
  double root_sum = 0.0;
  for (double lambda : spectrum.eigenvalues) root_sum += std::sqrt(std::max(lambda, 0.0));
  const double value = std::max(0.0, root_sum * root_sum - 1.0);
  return convention == NegativityConvention::Halved ? value / 2.0 : value;
}

double scren_pure(const PureState& psi, const std::vector<std::size_t>& part_a) {
  const double n = negativity_pure(psi, part_a);
  return n * n;
}

double scren_2q(const DensityMatrix& rho) {
  const double c = concurrence_2q(rho);
  return c * c;
}

double screnoa_2q(const DensityMatrix& rho) {
  const double ca = concurrence_assistance_2q(rho);
  return ca * ca;
}

MeasureVector measure_vector(const PureState& psi, MeasureKind kind) {
  const std::size_t n = psi.num_subsystems();
  if (n < 3 || n > kMaxQubits)
    throw Error(ErrorCode::Domain, "measure vectors need 3 to " + std::to_string(kMaxQubits) + " qubits");
  for (std::size_t d : psi.dims())
    if (d != 2) throw Error(ErrorCode::Domain, "measure vectors are defined for qubit states only");

  const std::vector<std::size_t> first{0};
  MeasureVector mv;
  mv.kind = kind;
  switch (kind) {
    case MeasureKind::Concurrence:
    case MeasureKind::ConcurrenceAssistance:
      mv.one_vs_rest = concurrence_pure(psi, first);
      break;
    case MeasureKind::NegativityScren:
    case MeasureKind::Screnoa:
      mv.one_vs_rest = scren_pure(psi, first);
      break;
  }
  for (std::size_t i = 1; i < n; ++i) {
    const DensityMatrix pair = reduce(psi, {0, i});
    double value = 0.0;
    switch (kind) {
      case MeasureKind::Concurrence: value = concurrence_2q(pair); break;
      case MeasureKind::ConcurrenceAssistance: value = concurrence_assistance_2q(pair); break;
      case MeasureKind::NegativityScren: value = scren_2q(pair); break;
      case MeasureKind::Screnoa: value = screnoa_2q(pair); break;
    }
    mv.pairwise.push_back(value);
  }
  return mv;
}

}  // namespace entbound
