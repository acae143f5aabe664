#include <doctest.h>

#include "oracles.hpp"
#include "qgame/presets.hpp"
#include "qgame/uncertainty.hpp"

using namespace qgame;

namespace {
const double kSqrtHalf = 1.0 / std::sqrt(2.0);

OutcomeOperator computational_op(const PreferenceRelation& pref) {
    return outcome_operator(computational_basis(2), pref, OutcomeWeights::standard(4));
}
}  // namespace

TEST_CASE("outcome operator is Hermitian with the weights as eigenvalues") {
    OutcomeOperator e = computational_op(pd_coop_pref_A());
    CHECK(is_hermitian(e.m));
    // computational basis: diagonal with w[rank(j)] in slot j
    // P_A = (2,1,4,3): ranks of outcomes 1..4 are 2,1,4,3 -> weights 3,4,1,2
    double diag[4] = {3, 4, 1, 2};
    for (int i = 0; i < 4; ++i) {
        CHECK(e.m.at(i, i).real() == doctest::Approx(diag[i]).epsilon(1e-14));
        for (int j = 0; j < 4; ++j)
            if (i != j) CHECK(std::abs(e.m.at(i, j)) < 1e-14);
    }
}

TEST_CASE("eigenstates have the assigned mean and zero variance") {
    OutcomeOperator e = computational_op(pd_coop_pref_A());
    double diag[4] = {3, 4, 1, 2};
    for (int k = 0; k < 4; ++k) {
        auto [mean, var] = expectation_and_variance(basis_state(4, k, {2, 2}), e);
        CHECK(mean == doctest::Approx(diag[k]).epsilon(1e-14));
        CHECK(var == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("mean and variance of a Bell state against a diagonal operator") {
    // (|00> + |11>)/sqrt2 with identity ranking: diag weights (4,3,2,1).
    // Outcomes 4 and 1 each with probability 1/2: mean 2.5, variance 2.25.
    OutcomeOperator e = computational_op(PreferenceRelation{{1, 2, 3, 4}});
    StateVector bell = make_state({kSqrtHalf, 0.0, 0.0, kSqrtHalf}, {2, 2});
    auto [mean, var] = expectation_and_variance(bell, e);
    CHECK(mean == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(var == doctest::Approx(2.25).epsilon(1e-12));
}

TEST_CASE("variance matches the direct second-moment oracle on random states") {
    std::mt19937_64 rng(67);
    OutcomeOperator e = computational_op(pd_coop_pref_B());
    for (int t = 0; t < 50; ++t) {
        StateVector s = oracles::random_state(4, {2, 2}, rng);
        auto [mean, var] = expectation_and_variance(s, e);
        // direct: probabilities times diagonal weights
        double m2 = 0, m1 = 0;
        for (int k = 0; k < 4; ++k) {
            double p = std::norm(s.amps[k]);
            double w = e.m.at(k, k).real();
            m1 += p * w;
            m2 += p * w * w;
        }
        CHECK(mean == doctest::Approx(m1).epsilon(1e-12));
        CHECK(var == doctest::Approx(m2 - m1 * m1).epsilon(1e-10));
    }
}

TEST_CASE("the bound holds for conjugate computational and Hadamard operators") {
    OutcomeOperator e1 = computational_op(pd_coop_pref_A());
    OutcomeOperator e2 =
        outcome_operator(hadamard2_basis(), pd_coop_pref_A(), OutcomeWeights::standard(4));
    std::mt19937_64 rng(71);
    for (int t = 0; t < 1000; ++t) {
        StateVector s = oracles::random_state(4, {2, 2}, rng);
        UncertaintyCheck c = uncertainty_bound_check(s, e1, e2);
        CHECK(c.holds);
        CHECK(c.lhs >= c.rhs - 1e-9);
    }
}

TEST_CASE("commuting operators give zero right-hand side") {
    OutcomeOperator e1 = computational_op(pd_coop_pref_A());
    OutcomeOperator e2 = computational_op(pd_coop_pref_B());
    std::mt19937_64 rng(73);
    StateVector s = oracles::random_state(4, {2, 2}, rng);
    UncertaintyCheck c = uncertainty_bound_check(s, e1, e2);
    CHECK(c.rhs == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c.holds);
}

TEST_CASE("conjugate flat payoff: computational eigenstates average (n+1)/2 in the Hadamard game") {
    OutcomeOperator e2 =
        outcome_operator(hadamard2_basis(), pd_coop_pref_A(), OutcomeWeights::standard(4));
    for (int k = 0; k < 4; ++k) {
        auto [mean, var] = expectation_and_variance(basis_state(4, k, {2, 2}), e2);
        CHECK(mean == doctest::Approx(2.5).epsilon(1e-12));
        CHECK(var > 0.0);
    }
}

TEST_CASE("outcome_operator validates its inputs") {
    CHECK_THROWS_AS(outcome_operator(computational_basis(2), PreferenceRelation{{1, 2}},
                                     OutcomeWeights::standard(4)),
                    Error);
    CHECK_THROWS_AS(outcome_operator(computational_basis(2), pd_coop_pref_A(),
                                     OutcomeWeights{{1, 2, 3, 4}}),
                    Error);
    OutcomeOperator e = computational_op(pd_coop_pref_A());
    CHECK_THROWS_AS(expectation_and_variance(basis_state(2, 0, {2}), e), Error);
}
