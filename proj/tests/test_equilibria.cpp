#include <doctest.h>

#include "oracles.hpp"
#include "qgame/equilibria.hpp"
#include "qgame/presets.hpp"

using namespace qgame;

TEST_CASE("plain PD: unique Nash at (I, I), sum dominance agrees") {
    GameSpec g = plain_pd();
    PayoffMatrices pm = payoff_matrices(g);
    std::vector<Cell> nash = pure_nash(pm);
    REQUIRE(nash.size() == 1);
    CHECK(nash[0] == Cell{0, 0});
    CHECK(oracles::brute_force_nash(pm.e_A, pm.e_B, 2, 2) == nash);
    auto sd = sum_dominance(pm);
    REQUIRE(sd.has_value());
    CHECK(*sd == Cell{0, 0});
}

TEST_CASE("standard-variant PD: unique Nash at (FLIP, FLIP)") {
    PayoffMatrices pm = payoff_matrices(plain_pd(PdVariant::Standard));
    std::vector<Cell> nash = pure_nash(pm);
    REQUIRE(nash.size() == 1);
    CHECK(nash[0] == Cell{1, 1});
    CHECK(oracles::brute_force_nash(pm.e_A, pm.e_B, 2, 2) == nash);
}

TEST_CASE("entangled PD: every cell is a (weak) Nash cell") {
    PayoffMatrices pm = payoff_matrices(entangled_pd());
    std::vector<Cell> nash = pure_nash(pm);
    CHECK(nash == std::vector<Cell>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK_FALSE(sum_dominance(pm).has_value());  // all sums tie
}

TEST_CASE("pure_nash matches the brute-force oracle on random bimatrices") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> val(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 2 + static_cast<int>(rng() % 3);
        int cols = 2 + static_cast<int>(rng() % 3);
        PayoffMatrices pm;
        pm.rows = rows;
        pm.cols = cols;
        pm.e_A.resize(static_cast<size_t>(rows) * cols);
        pm.e_B.resize(pm.e_A.size());
        for (auto& v : pm.e_A) v = val(rng);
        for (auto& v : pm.e_B) v = val(rng);
        CHECK(pure_nash(pm) == oracles::brute_force_nash(pm.e_A, pm.e_B, rows, cols));
    }
}

TEST_CASE("stackelberg on the plain PD") {
    PayoffMatrices pm = payoff_matrices(plain_pd());
    // B's best response to each row is the (I, I) / (FLIP, FLIP) diagonal? No:
    // row 0 -> B prefers col 0 (3 > 1); row 1 -> col 0 (4 > 2). A then picks row 0.
    CHECK(stackelberg(pm, Player::A) == std::vector<Cell>{{0, 0}});
    CHECK(stackelberg(pm, Player::B) == std::vector<Cell>{{0, 0}});
}

TEST_CASE("stackelberg keeps ties") {
    PayoffMatrices pm;
    pm.rows = pm.cols = 2;
    pm.e_A = {1, 1, 0, 0};
    pm.e_B = {2, 2, 0, 0};
    auto lead = stackelberg(pm, Player::A);
    CHECK(lead == std::vector<Cell>{{0, 0}, {0, 1}});
}

TEST_CASE("identity-up-to-phase detection") {
    CHECK(is_identity_up_to_phase(make_unitary(CMat::identity(4))));
    CHECK(is_identity_up_to_phase(make_unitary(scale(CMat::identity(2), cx{0, 1}))));
    CHECK_FALSE(is_identity_up_to_phase(make_unitary(pauli_z())));
}

TEST_CASE("the Pauli game is invertible and has no pure equilibrium") {
    GameSpec g = pauli_invertible_game();
    InvertibilityReport inv = is_invertible_game(g);
    CHECK(inv.invertible);
    PayoffMatrices pm = payoff_matrices(g);
    CHECK(pure_nash(pm).empty());
    CHECK(oracles::brute_force_nash(pm.e_A, pm.e_B, 4, 4).empty());
    // exhaustive: in every cell someone has a strictly better deviation
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            bool deviates = false;
            for (int p = 0; p < 4; ++p)
                if (pm.a(p, j) > pm.a(i, j) + 1e-12) deviates = true;
            for (int q = 0; q < 4; ++q)
                if (pm.b(i, q) > pm.b(i, j) + 1e-12) deviates = true;
            CHECK(deviates);
        }
}

TEST_CASE("non-invertible game is reported with the offending row") {
    GameSpec g = plain_pd();
    // FLIP has no inverse in {I, I kron FLIP} acting on the B side only
    InvertibilityReport inv = is_invertible_game(g);
    CHECK_FALSE(inv.invertible);
    CHECK(inv.alpha_index == 1);
}

TEST_CASE("two-move identity test agrees with pure_nash membership on the plain PD") {
    GameSpec g = plain_pd();
    std::vector<Cell> nash = pure_nash(payoff_matrices(g));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            bool is_nash =
                std::find(nash.begin(), nash.end(), Cell{i, j}) != nash.end();
            CHECK(two_move_equilibrium_check(g, {i, j}) == is_nash);
        }
}

TEST_CASE("two-move test requires an identity in each set") {
    GameSpec g = plain_pd();
    g.ops_A[0] = flip_on_A();
    g.ops_A[1] = make_unitary(kron(pauli_z(), CMat::identity(2)), "Z kron I");
    CHECK_THROWS_AS(two_move_equilibrium_check(g, {0, 0}), Error);
}

TEST_CASE("preference regions: eigenstates sit in the region of whoever ranks them first") {
    GameSpec g = plain_pd();
    // P_A = (2,1,4,3): |phi_2> = |01> tops A's list
    CHECK(preference_region_contains(g.measurement.eigenstates[1], g.measurement,
                                     g.pref_A));
    CHECK_FALSE(preference_region_contains(g.measurement.eigenstates[3], g.measurement,
                                           g.pref_A));
    // the flat state belongs to every region
    StateVector flat = make_state({0.5, 0.5, 0.5, 0.5}, {2, 2});
    CHECK(preference_region_contains(flat, g.measurement, g.pref_A));
    CHECK(preference_region_contains(flat, g.measurement, g.pref_B));
}

TEST_CASE("analyze_equilibria assembles a consistent report") {
    EquilibriumReport rep = analyze_equilibria(pauli_invertible_game());
    CHECK(rep.nash_cells.empty());
    CHECK(rep.notes == "no pure equilibrium");
    CHECK(rep.invertibility.invertible);
    rep = analyze_equilibria(plain_pd());
    CHECK(rep.nash_cells == std::vector<Cell>{{0, 0}});
    REQUIRE(rep.sum_dom.has_value());
    CHECK(*rep.sum_dom == Cell{0, 0});
}
