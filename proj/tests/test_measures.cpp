#include <doctest.h>

#include <cmath>
#include <numbers>

#include "entbound/error.hpp"
#include "entbound/measures.hpp"
#include "entbound/states.hpp"

using namespace entbound;

namespace {

const double kS6 = std::sqrt(6.0) / 6.0;

PureState bell() {
  const double h = std::numbers::sqrt2 / 2;
  return PureState({2, 2}, {h, 0, 0, h});
}

PureState product2() { return PureState({2, 2}, {0, 1, 0, 0}); }

}  // namespace

TEST_CASE("kind names") {
  CHECK(to_string(MeasureKind::Concurrence) == "concurrence");
  CHECK(parse_measure_kind("screnoa") == MeasureKind::Screnoa);
  CHECK(parse_measure_kind("negativity_scren") == MeasureKind::NegativityScren);
  CHECK(parse_measure_kind("concurrence_assistance") == MeasureKind::ConcurrenceAssistance);
  CHECK_FALSE(parse_measure_kind("entropy").has_value());
}

TEST_CASE("pure concurrence") {
  CHECK(concurrence_pure(product2(), {0}) == doctest::Approx(0.0));
  CHECK(concurrence_pure(bell(), {0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(concurrence_pure(bell(), {1}) == doctest::Approx(1.0).epsilon(1e-15));
  const PureState ex1 = schmidt3_state({0.5, kS6, kS6, 0.5, kS6});
  CHECK(concurrence_pure(ex1, {0}) == doctest::Approx(std::sqrt(21.0) / 6.0).epsilon(1e-14));
  CHECK(concurrence_pure_from_purity(ex1, {0}) == doctest::Approx(std::sqrt(21.0) / 6.0).epsilon(1e-14));
  // A|BC equals BC|A
  CHECK(concurrence_pure(ex1, {1, 2}) == doctest::Approx(concurrence_pure(ex1, {0})).epsilon(1e-14));
  CHECK_THROWS_AS(concurrence_pure(ex1, {}), Error);
  CHECK_THROWS_AS(concurrence_pure(ex1, {0, 1, 2}), Error);
  CHECK_THROWS_AS(concurrence_pure(ex1, {3}), Error);

  // minors route and purity route agree on random states
  Rng rng(17);
  for (int k = 0; k < 100; ++k) {
    const PureState psi = haar_random_pure({2, 3, 2}, rng);
    CHECK(std::abs(concurrence_pure(psi, {1}) - concurrence_pure_from_purity(psi, {1})) < 1e-10);
  }
}

TEST_CASE("two-qubit concurrence and assistance") {
  const DensityMatrix mixed({2, 2}, ComplexMatrix::identity(4) * Complex(0.25));
  CHECK(concurrence_2q(mixed) == doctest::Approx(0.0));
  CHECK(concurrence_2q(to_density(bell())) == doctest::Approx(1.0).epsilon(1e-12));

  // Werner state p|Bell><Bell| + (1-p) I/4: C = max(0, (3p-1)/2)
  for (double p : {0.2, 1.0 / 3.0, 0.5, 0.8}) {
    const ComplexMatrix m = to_density(bell()).matrix() * Complex(p) + ComplexMatrix::identity(4) * Complex((1 - p) / 4);
    CHECK(concurrence_2q(DensityMatrix({2, 2}, m)) == doctest::Approx(std::max(0.0, (3 * p - 1) / 2)).epsilon(1e-12));
  }

  const PureState ex1 = schmidt3_state({0.5, kS6, kS6, 0.5, kS6});
  CHECK(concurrence_2q(reduce(ex1, {0, 2})) == doctest::Approx(0.5).epsilon(1e-12));

  const PureState w = w_class_state();
  CHECK(concurrence_assistance_2q(reduce(w, {0, 1})) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(concurrence_assistance_2q(reduce(w, {0, 2})) == doctest::Approx(std::numbers::sqrt2 / 2).epsilon(1e-12));
  CHECK(screnoa_2q(reduce(w, {0, 1})) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(screnoa_2q(reduce(w, {0, 2})) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(concurrence_2q(reduce(ex1, {0})), Error);
}

TEST_CASE("Wootters agrees with pure-state concurrence") {
  Rng rng(2718);
  for (int k = 0; k < 500; ++k) {
    const PureState psi = haar_random_pure({2, 2}, rng);
    const DensityMatrix rho = to_density(psi);
    const double c = concurrence_pure(psi, {0});
    CHECK(std::abs(concurrence_2q(rho) - c) < 1e-9);
    CHECK(std::abs(concurrence_assistance_2q(rho) - c) < 1e-9);
  }
}

TEST_CASE("CoA dominates concurrence on mixed reductions") {
  Rng rng(8);
  for (int k = 0; k < 100; ++k) {
    const DensityMatrix pair = reduce(haar_random_pure({2, 2, 2}, rng), {0, 1});
    CHECK(concurrence_assistance_2q(pair) >= concurrence_2q(pair) - 1e-12);
    const auto mu = wootters_mu(pair);
    for (std::size_t i = 1; i < mu.size(); ++i) CHECK(mu[i - 1] >= mu[i]);
  }
}

TEST_CASE("negativity") {
  CHECK(negativity(to_density(product2()), {0}) == doctest::Approx(0.0));
  CHECK(negativity(to_density(bell()), {0}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(negativity(to_density(bell()), {0}, NegativityConvention::Halved) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(negativity_pure(bell(), {0}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(scren_pure(bell(), {0}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(scren_pure(product2(), {0}) == doctest::Approx(0.0));

  // pure-state formula against trace norm, and against 2 sum sqrt(l_i l_j)
  Rng rng(1);
  for (int k = 0; k < 200; ++k) {
    const PureState psi = haar_random_pure({2, 3}, rng);
    const double n_pure = negativity_pure(psi, {0});
    CHECK(std::abs(negativity(to_density(psi), {0}) - n_pure) < 1e-8);
    const auto l = hermitian_eigen(reduce(psi, {0}).matrix()).eigenvalues;
    const double cross = 2 * std::sqrt(std::max(0.0, l[0] * l[1]));
    CHECK(std::abs(cross - n_pure) < 1e-8);
  }

  // Example-2 one-vs-rest SCRENoA = 3/4
  CHECK(scren_pure(w_class_state(), {0}) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("measure vectors") {
  const MeasureVector c = measure_vector(schmidt3_state({0.5, kS6, kS6, 0.5, kS6}), MeasureKind::Concurrence);
  CHECK(c.one_vs_rest == doctest::Approx(std::sqrt(21.0) / 6.0).epsilon(1e-12));
  REQUIRE(c.pairwise.size() == 2);
  CHECK(c.pairwise[0] == doctest::Approx(kS6).epsilon(1e-12));
  CHECK(c.pairwise[1] == doctest::Approx(0.5).epsilon(1e-12));

  const MeasureVector w = measure_vector(w_class_state(), MeasureKind::Screnoa);
  CHECK(w.one_vs_rest == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(w.pairwise[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(w.pairwise[1] == doctest::Approx(0.5).epsilon(1e-12));

  for (MeasureKind kind : {MeasureKind::Concurrence, MeasureKind::NegativityScren, MeasureKind::Screnoa,
                           MeasureKind::ConcurrenceAssistance}) {
    const MeasureVector z = measure_vector(schmidt3_state({1, 0, 0, 0, 0}), kind);
    CHECK(z.kind == kind);
    CHECK(z.one_vs_rest == doctest::Approx(0.0));
    CHECK(z.pairwise == std::vector<double>{0.0, 0.0});
  }

  CHECK(measure_vector(haar_random_pure({2, 2, 2, 2, 2, 2}, 3), MeasureKind::Concurrence).pairwise.size() == 5);
  CHECK_THROWS_AS(measure_vector(haar_random_pure({2, 2}, 3), MeasureKind::Concurrence), Error);
  CHECK_THROWS_AS(measure_vector(haar_random_pure({2, 2, 2, 2, 2, 2, 2}, 3), MeasureKind::Concurrence), Error);
  CHECK_THROWS_AS(measure_vector(haar_random_pure({2, 3, 2}, 3), MeasureKind::Concurrence), Error);
}

TEST_CASE("local unitary invariance") {
  Rng rng(606);
  for (int k = 0; k < 500; ++k) {
    const PureState psi = haar_random_pure({2, 2, 2}, rng);
    const PureState moved = apply_local_unitaries(
        psi, {haar_random_unitary(2, rng), haar_random_unitary(2, rng), haar_random_unitary(2, rng)});
    for (MeasureKind kind : {MeasureKind::Concurrence, MeasureKind::Screnoa}) {
      const MeasureVector a = measure_vector(psi, kind);
      const MeasureVector b = measure_vector(moved, kind);
      CHECK(std::abs(a.one_vs_rest - b.one_vs_rest) < 1e-8);
      CHECK(std::abs(a.pairwise[0] - b.pairwise[0]) < 1e-8);
      CHECK(std::abs(a.pairwise[1] - b.pairwise[1]) < 1e-8);
    }
  }
}

TEST_CASE("base relations on samples") {
  Rng rng(10);
  for (int k = 0; k < 1000; ++k) {
    const MeasureVector c = measure_vector(haar_random_pure({2, 2, 2}, rng), MeasureKind::Concurrence);
    CHECK(c.one_vs_rest * c.one_vs_rest >= c.pairwise[0] * c.pairwise[0] + c.pairwise[1] * c.pairwise[1] - 1e-8);
  }
  // for W-class states SCREN and SCRENoA coincide one-vs-rest and pairwise polygamy holds
  for (int k = 0; k < 200; ++k) {
    const double a = rng.uniform(), b = rng.uniform(), c = rng.uniform();
    const double n = std::sqrt(a * a + b * b + c * c);
    const MeasureVector s = measure_vector(w_class_state(a / n, b / n, c / n), MeasureKind::Screnoa);
    CHECK(s.one_vs_rest <= s.pairwise[0] + s.pairwise[1] + 1e-8);
  }
}
