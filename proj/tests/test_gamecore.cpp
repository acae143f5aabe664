#include <doctest.h>

#include "oracles.hpp"
#include "qgame/presets.hpp"

using namespace qgame;

namespace {
const double kPi = 3.14159265358979323846;
const double kSqrtHalf = 1.0 / std::sqrt(2.0);

// Amplitudes of the per-qubit rotated ground state: (c, -s) with
// c = cos(t/2) e^{i p/2}, s = sin(t/2) e^{-i p/2}.
std::pair<cx, cx> cs(double t, double p) {
    return {std::polar(std::cos(t / 2), p / 2), std::polar(std::sin(t / 2), -p / 2)};
}
}  // namespace

TEST_CASE("output_state of the plain PD cells are the four basis states") {
    GameSpec g = plain_pd();
    int expect[2][2] = {{0, 1}, {2, 3}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            StateVector s = output_state(g, i, j);
            StateVector e = basis_state(4, expect[i][j], {2, 2});
            CHECK(states_equal_up_to_phase(s, e));
        }
}

TEST_CASE("output_state follows the printed amplitude patterns for rotated inputs") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
    for (int trial = 0; trial < 20; ++trial) {
        double t = ang(rng), p = ang(rng), t2 = ang(rng), p2 = ang(rng);
        GameSpec g = rotated_pd(t, p, t2, p2);
        auto [c, s] = cs(t, p);
        auto [c2, s2] = cs(t2, p2);

        auto check_cell = [&](int i, int j, std::array<cx, 4> pat) {
            StateVector got = output_state(g, i, j);
            StateVector want = make_state({pat[0], pat[1], pat[2], pat[3]}, {2, 2});
            CHECK(states_equal_up_to_phase(got, want, 1e-12));
        };
        // each flip sends the factor (c, -s) to i(-s, c); phases drop out
        check_cell(0, 0, {c * c2, -c * s2, -s * c2, s * s2});
        check_cell(0, 1, {-c * s2, c * c2, s * s2, -s * c2});
        check_cell(1, 0, {-s * c2, s * s2, c * c2, -c * s2});
        check_cell(1, 1, {s * s2, -s * c2, -c * s2, c * c2});
    }
}

TEST_CASE("expected outcome E_11 is the preference-weighted Born sum") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
    for (int trial = 0; trial < 20; ++trial) {
        GameSpec g = rotated_pd(ang(rng), ang(rng), ang(rng), ang(rng));
        std::vector<double> pr = outcome_distribution(output_state(g, 0, 0), g.measurement);
        // P_A = (2,1,4,3) with weights (4,3,2,1)
        double expect = 4 * pr[1] + 3 * pr[0] + 2 * pr[3] + 1 * pr[2];
        CHECK(expected_outcome(g, 0, 0, Player::A) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("equatorial rotation angles make every outcome 2.5") {
    GameSpec g = rotated_pd(kPi / 2, 0, kPi / 2, 0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(expected_outcome(g, i, j, Player::A) == doctest::Approx(2.5).epsilon(1e-12));
            CHECK(expected_outcome(g, i, j, Player::B) == doctest::Approx(2.5).epsilon(1e-12));
        }
}

TEST_CASE("plain PD payoff matrices") {
    PayoffMatrices pm = payoff_matrices(plain_pd());
    double ea[2][2] = {{3, 4}, {1, 2}};
    double eb[2][2] = {{3, 1}, {4, 2}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(pm.a(i, j) == doctest::Approx(ea[i][j]).epsilon(1e-12));
            CHECK(pm.b(i, j) == doctest::Approx(eb[i][j]).epsilon(1e-12));
        }
    CHECK(pm.row_labels[1] == "FLIP kron I");
}

TEST_CASE("entangled PD is flat at 2.5 everywhere") {
    PayoffMatrices pm = payoff_matrices(entangled_pd());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(pm.a(i, j) == doctest::Approx(2.5).epsilon(1e-12));
            CHECK(pm.b(i, j) == doctest::Approx(2.5).epsilon(1e-12));
        }
}

TEST_CASE("outcome distribution sums to one and is measurement-rotation invariant") {
    std::mt19937_64 rng(47);
    GameSpec g = plain_pd();
    for (int trial = 0; trial < 30; ++trial) {
        StateVector s = oracles::random_state(4, {2, 2}, rng);
        std::vector<double> p = outcome_distribution(s, g.measurement);
        double total = 0;
        for (double v : p) total += v;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

        // rotating the state and every eigenstate together changes nothing
        CMat r = oracles::random_unitary(4, rng);
        MeasurementBasis moved;
        for (const auto& e : g.measurement.eigenstates)
            moved.eigenstates.push_back(apply(make_unitary(r), e));
        std::vector<double> q =
            outcome_distribution(apply(make_unitary(r), s), moved);
        for (int k = 0; k < 4; ++k) CHECK(p[k] == doctest::Approx(q[k]).epsilon(1e-10));
    }
}

TEST_CASE("order of play matters for non-commuting sets") {
    // Paulis only anticommute, which a phase-blind check cannot see, so use H.
    GameSpec g = pauli_invertible_game();
    g.ops_A[1] = make_unitary(hadamard(), "H");
    g.order = Order::AFirst;
    StateVector ab = output_state(g, 1, 3);  // H then Z
    g.order = Order::BFirst;
    StateVector ba = output_state(g, 1, 3);  // Z then H
    CHECK_FALSE(states_equal_up_to_phase(ab, ba));
}

TEST_CASE("simultaneous order rejects non-commuting sets") {
    GameSpec g = pauli_invertible_game();
    g.order = Order::Simultaneous;
    CHECK_THROWS_AS(validate_spec(g), Error);
}

TEST_CASE("compose_sequential matches the matrix-product oracle") {
    GameSpec g = pauli_invertible_game();
    std::vector<std::pair<int, int>> moves = {{1, 2}, {3, 0}, {2, 1}};
    SequentialResult r = compose_sequential(g, moves);

    CMat total = CMat::identity(2);
    for (auto [i, j] : moves) total = mul(g.ops_B[j].m, mul(g.ops_A[i].m, total));
    StateVector expect = apply(make_unitary(total), g.initial_state);
    CHECK(states_equal_up_to_phase(r.state, expect));

    // the split multiplies back to the total evolution
    CMat recomposed = mul(r.beta_eff.m, r.alpha_eff.m);
    CHECK(fro_norm(add(recomposed, total, -1.0)) < 1e-12);
    CHECK(fro_norm(add(r.beta_eff.m, g.ops_B[1].m, -1.0)) < 1e-12);
}

TEST_CASE("compose_sequential of one move equals output_state") {
    GameSpec g = plain_pd();
    g.order = Order::AFirst;
    SequentialResult r = compose_sequential(g, {{1, 0}});
    CHECK(states_equal_up_to_phase(r.state, output_state(g, 1, 0)));
    CHECK_THROWS_AS(compose_sequential(g, {}), Error);
}

TEST_CASE("classical 2x2 preference-pair count is 432") {
    CHECK(enumerate_classical_2x2_preference_pairs() == 432);
    // brute-force cross check: 24 choices for A, 18 with a different top for B
    std::size_t brute = 0;
    auto pairs = preference_pairs_with_distinct_top(4);
    brute = pairs.size();
    CHECK(brute == 24u * 18u);
    for (const auto& [pa, pb] : pairs) CHECK(pa.ranking[0] != pb.ranking[0]);
}

TEST_CASE("preference-pair enumeration at other sizes") {
    CHECK(preference_pairs_with_distinct_top(1).empty());
    CHECK(preference_pairs_with_distinct_top(2).size() == 2);  // 2! * 1! arrangements
    CHECK(preference_pairs_with_distinct_top(3).size() == 6u * 4u);
}

TEST_CASE("validation rejects malformed preferences and weights") {
    GameSpec g = plain_pd();
    g.pref_A = PreferenceRelation{{1, 1, 3, 4}};
    CHECK_THROWS_AS(validate_spec(g), Error);
    g = plain_pd();
    g.weights = OutcomeWeights{{4, 4, 2, 1}};
    CHECK_THROWS_AS(validate_spec(g), Error);
    g = plain_pd();
    g.ops_A.clear();
    CHECK_THROWS_AS(validate_spec(g), Error);
}

TEST_CASE("final rotation is applied before the measurement") {
    GameSpec g = plain_pd();
    g.final_rotation = make_unitary(kron(pauli_x(), pauli_x()), "XX");
    StateVector s = output_state(g, 0, 0);
    CHECK(states_equal_up_to_phase(s, basis_state(4, 3, {2, 2})));
}
