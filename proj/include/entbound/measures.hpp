#pragma once

// Bipartite correlation measures on few-qubit states.
//
// Negativity follows the un-halved convention N(rho) = ||rho^{T_A}|| - 1 by
// default; pass NegativityConvention::Halved for the conventional value.
// Convex-roof quantities (SCREN, SCRENoA, assisted concurrence) are only
// available where a closed form exists: pure states and two-qubit mixed
// states.

#include <optional>
#include <string_view>
#include <vector>

#include "entbound/states.hpp"

namespace entbound {

enum class MeasureKind {
  Concurrence,
  NegativityScren,
  Screnoa,
  ConcurrenceAssistance,
};

enum class NegativityConvention { Unhalved, Halved };

std::string_view to_string(MeasureKind kind);
/// Accepts "concurrence", "scren"/"negativity_scren", "screnoa",
/// "coa"/"concurrence_assistance".
std::optional<MeasureKind> parse_measure_kind(std::string_view name);

/// One-vs-rest value Q_{A1|A2...An} and pairwise values Q_{A1Ai};
/// pairwise[i] belongs to subsystem A_{i+2}.
struct MeasureVector {
  MeasureKind kind = MeasureKind::Concurrence;
  double one_vs_rest = 0.0;
  std::vector<double> pairwise;
};

/// Largest number of qubits accepted by measure_vector.
inline constexpr std::size_t kMaxQubits = 6;

/// sqrt(2 (1 - Tr rho_A^2)) for the cut part_a | rest.
double concurrence_pure(const PureState& psi, const std::vector<std::size_t>& part_a);

/// Same quantity evaluated literally from Tr rho_A^2; kept as an independent
/// route for cross-checks.
double concurrence_pure_from_purity(const PureState& psi, const std::vector<std::size_t>& part_a);

/// Wootters concurrence of a two-qubit state.
double concurrence_2q(const DensityMatrix& rho);

/// Concurrence of assistance of a two-qubit state (sum of the Wootters mu_i).
double concurrence_assistance_2q(const DensityMatrix& rho);

/// Wootters mu_1 >= ... >= mu_4: square roots of the eigenvalues of
/// rho (sy x sy) rho^* (sy x sy).
std::vector<double> wootters_mu(const DensityMatrix& rho);

/// Trace norm of the partial transpose on part_a, minus one.
double negativity(const DensityMatrix& rho, const std::vector<std::size_t>& part_a,
                  NegativityConvention convention = NegativityConvention::Unhalved);

/// Pure-state closed form (Tr sqrt(rho_A))^2 - 1.
double negativity_pure(const PureState& psi, const std::vector<std::size_t>& part_a,
                       NegativityConvention convention = NegativityConvention::Unhalved);

/// Square of the (un-halved) pure-state negativity.
double scren_pure(const PureState& psi, const std::vector<std::size_t>& part_a);
/// SCREN of a two-qubit state: squared Wootters concurrence.
double scren_2q(const DensityMatrix& rho);
/// SCRENoA of a two-qubit state: squared concurrence of assistance.
double screnoa_2q(const DensityMatrix& rho);

/// Pure n-qubit state, 3 <= n <= kMaxQubits. one_vs_rest uses the pure
/// state; pairwise entries use the two-qubit reductions rho_{A1 Ai}.
MeasureVector measure_vector(const PureState& psi, MeasureKind kind);

}  // namespace entbound
