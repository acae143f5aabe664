// Classical coin simulation of a finite quantum game: codeword maps,
// per-cell outcome distributions and a seeded Monte Carlo verifier.
#pragma once

#include <cstdint>

#include "gamecore.hpp"

namespace qgame {

// splitmix64; the whole reproducibility contract rests on this stream.
struct SplitMix64 {
    std::uint64_t s;

    explicit SplitMix64(std::uint64_t seed) : s(seed) {}

    std::uint64_t next() {
        s += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1) with 53 random bits
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Substream seed for (root seed, cell, player, shard).
inline std::uint64_t substream_seed(std::uint64_t seed, int cell_index, int player,
                                    int shard = 0) {
    std::uint64_t tag = (static_cast<std::uint64_t>(cell_index) << 20) |
                        (static_cast<std::uint64_t>(player) << 16) |
                        static_cast<std::uint64_t>(shard);
    return mix64(seed ^ mix64(tag + 0x9E3779B97F4A7C15ULL));
}

struct CoinCell {
    // Distributions over the weight values, indexed by preference rank:
    // prob_A[r] is the probability that A receives weight_values[r].
    std::vector<double> prob_A, prob_B;
};

struct ClassicalCoinGame {
    int kappa_A = 0, kappa_B = 0;  // coins per player
    std::vector<std::string> code_A, code_B;  // operator index -> coin string
    std::vector<double> weight_values;        // by rank, shared by both players
    int rows = 0, cols = 0;
    std::vector<CoinCell> cells;  // row major

    const CoinCell& cell(int i, int j) const {
        if (i < 0 || i >= rows || j < 0 || j >= cols)
            throw Error("coin game: unknown cell");
        return cells[static_cast<size_t>(i) * cols + j];
    }
};

inline int coin_count_for(int set_size) {
    int k = 0;
    while ((1 << k) < set_size) ++k;
    return k;
}

inline std::vector<std::string> codewords(int count, int kappa) {
    std::vector<std::string> out;
    for (int v = 0; v < count; ++v) {
        std::string w(kappa, '0');
        for (int b = 0; b < kappa; ++b)
            if (v & (1 << (kappa - 1 - b))) w[b] = '1';
        out.push_back(w);
    }
    return out;
}

// Each cell's distribution is the quantum Born distribution re-indexed by
// preference rank, so the analytic means match the quantum game exactly.
inline ClassicalCoinGame build_coin_game(const GameSpec& g) {
    validate_spec(g);
    ClassicalCoinGame game;
    game.rows = g.rows();
    game.cols = g.cols();
    game.kappa_A = coin_count_for(game.rows);
    game.kappa_B = coin_count_for(game.cols);
    game.code_A = codewords(game.rows, game.kappa_A);
    game.code_B = codewords(game.cols, game.kappa_B);
    game.weight_values = g.weights.values;
    const int n = g.measurement.size();
    for (int i = 0; i < game.rows; ++i)
        for (int j = 0; j < game.cols; ++j) {
            std::vector<double> p = outcome_distribution(output_state(g, i, j), g.measurement);
            CoinCell cell;
            cell.prob_A.resize(n);
            cell.prob_B.resize(n);
            for (int r = 0; r < n; ++r) {
                cell.prob_A[r] = p[g.pref_A.ranking[r] - 1];
                cell.prob_B[r] = p[g.pref_B.ranking[r] - 1];
            }
            game.cells.push_back(std::move(cell));
        }
    return game;
}

inline double analytic_mean(const ClassicalCoinGame& game, int i, int j, Player who) {
    const CoinCell& c = game.cell(i, j);
    const auto& p = (who == Player::A) ? c.prob_A : c.prob_B;
    double m = 0;
    for (size_t r = 0; r < p.size(); ++r) m += game.weight_values[r] * p[r];
    return m;
}

namespace detail {

inline double sample_mean(const std::vector<double>& probs,
                          const std::vector<double>& weights, long long trials,
                          SplitMix64& rng) {
    double total = 0;
    for (long long t = 0; t < trials; ++t) {
        double u = rng.next_unit();
        double acc = 0;
        size_t pick = probs.size() - 1;
        for (size_t r = 0; r < probs.size(); ++r) {
            acc += probs[r];
            if (u < acc) {
                pick = r;
                break;
            }
        }
        total += weights[pick];
    }
    return total / static_cast<double>(trials);
}

}  // namespace detail

struct SimulationResult {
    double mean_A = 0, mean_B = 0;
};

inline SimulationResult simulate(const ClassicalCoinGame& game, Cell cell,
                                 long long trials, std::uint64_t seed) {
    if (trials < 1) throw Error("simulate: trials must be >= 1");
    const CoinCell& c = game.cell(cell.first, cell.second);
    const int idx = cell.first * game.cols + cell.second;
    SplitMix64 rng_a(substream_seed(seed, idx, 0));
    SplitMix64 rng_b(substream_seed(seed, idx, 1));
    SimulationResult res;
    res.mean_A = detail::sample_mean(c.prob_A, game.weight_values, trials, rng_a);
    res.mean_B = detail::sample_mean(c.prob_B, game.weight_values, trials, rng_b);
    return res;
}

struct CellVerification {
    int i = 0, j = 0;
    double quantum_A = 0, quantum_B = 0;
    double empirical_A = 0, empirical_B = 0;
    double deviation = 0;
};

struct EquivalenceVerification {
    bool pass = false;
    double tol = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
    double worst_deviation = 0;
    Cell worst_cell{0, 0};
    std::vector<CellVerification> cells;
};

// Check that empirical coin-game means reproduce the quantum expected
// outcomes on every cell. Failure is a report outcome, not an error.
inline EquivalenceVerification verify_equivalence(const GameSpec& g, long long trials,
                                                  std::uint64_t seed, double tol) {
    ClassicalCoinGame game = build_coin_game(g);
    EquivalenceVerification rep;
    rep.tol = tol;
    rep.trials = trials;
    rep.seed = seed;
    rep.pass = true;
    for (int i = 0; i < game.rows; ++i)
        for (int j = 0; j < game.cols; ++j) {
            SimulationResult sim = simulate(game, {i, j}, trials, seed);
            CellVerification cv;
            cv.i = i;
            cv.j = j;
            cv.quantum_A = expected_outcome(g, i, j, Player::A);
            cv.quantum_B = expected_outcome(g, i, j, Player::B);
            cv.empirical_A = sim.mean_A;
            cv.empirical_B = sim.mean_B;
            cv.deviation = std::max(std::abs(cv.empirical_A - cv.quantum_A),
                                    std::abs(cv.empirical_B - cv.quantum_B));
            if (cv.deviation > rep.worst_deviation) {
                rep.worst_deviation = cv.deviation;
                rep.worst_cell = {i, j};
            }
            if (cv.deviation > tol) rep.pass = false;
            rep.cells.push_back(cv);
        }
    return rep;
}

}  // namespace qgame
