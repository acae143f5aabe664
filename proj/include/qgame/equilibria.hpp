// Equilibrium analysis over finite operator sets.
#pragma once

#include "gamecore.hpp"

namespace qgame {

// Payoff comparisons ignore differences below this; Born probabilities carry
// a few ULPs of noise that must not break exact ties.
inline constexpr double kPayoffTol = 1e-12;

// All (i, j) where neither player gains by a unilateral deviation. Ties kept,
// row-major order.
inline std::vector<Cell> pure_nash(const PayoffMatrices& pm) {
    std::vector<Cell> out;
    for (int i = 0; i < pm.rows; ++i)
        for (int j = 0; j < pm.cols; ++j) {
            bool best = true;
            for (int p = 0; p < pm.rows && best; ++p)
                if (pm.a(p, j) > pm.a(i, j) + kPayoffTol) best = false;
            for (int q = 0; q < pm.cols && best; ++q)
                if (pm.b(i, q) > pm.b(i, j) + kPayoffTol) best = false;
            if (best) out.push_back({i, j});
        }
    return out;
}

// Row i strictly maximizing A's row sums paired with column j strictly
// maximizing B's column sums; absent when strictness fails.
inline std::optional<Cell> sum_dominance(const PayoffMatrices& pm) {
    auto strict_argmax = [](const std::vector<double>& sums) -> std::optional<int> {
        int best = 0;
        for (size_t k = 1; k < sums.size(); ++k)
            if (sums[k] > sums[best]) best = static_cast<int>(k);
        for (size_t k = 0; k < sums.size(); ++k)
            if (static_cast<int>(k) != best && !(sums[best] > sums[k] + kPayoffTol))
                return std::nullopt;
        return best;
    };
    std::vector<double> row_sums(pm.rows, 0.0), col_sums(pm.cols, 0.0);
    for (int i = 0; i < pm.rows; ++i)
        for (int j = 0; j < pm.cols; ++j) {
            row_sums[i] += pm.a(i, j);
            col_sums[j] += pm.b(i, j);
        }
    auto i = strict_argmax(row_sums);
    auto j = strict_argmax(col_sums);
    if (!i || !j) return std::nullopt;
    return Cell{*i, *j};
}

// First mover optimizes over the second mover's best responses; all ties kept.
inline std::vector<Cell> stackelberg(const PayoffMatrices& pm, Player first) {
    std::vector<Cell> candidates;
    if (first == Player::A) {
        for (int i = 0; i < pm.rows; ++i) {
            double best = pm.b(i, 0);
            for (int j = 1; j < pm.cols; ++j) best = std::max(best, pm.b(i, j));
            for (int j = 0; j < pm.cols; ++j)
                if (pm.b(i, j) >= best - kPayoffTol) candidates.push_back({i, j});
        }
        double lead = candidates.empty() ? 0.0 : pm.a(candidates[0].first, candidates[0].second);
        for (const auto& c : candidates) lead = std::max(lead, pm.a(c.first, c.second));
        std::vector<Cell> out;
        for (const auto& c : candidates)
            if (pm.a(c.first, c.second) >= lead - kPayoffTol) out.push_back(c);
        return out;
    }
    for (int j = 0; j < pm.cols; ++j) {
        double best = pm.a(0, j);
        for (int i = 1; i < pm.rows; ++i) best = std::max(best, pm.a(i, j));
        for (int i = 0; i < pm.rows; ++i)
            if (pm.a(i, j) >= best - kPayoffTol) candidates.push_back({i, j});
    }
    double lead = candidates.empty() ? 0.0 : pm.b(candidates[0].first, candidates[0].second);
    for (const auto& c : candidates) lead = std::max(lead, pm.b(c.first, c.second));
    std::vector<Cell> out;
    for (const auto& c : candidates)
        if (pm.b(c.first, c.second) >= lead - kPayoffTol) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

// Phase-blind identity test: U == e^{i theta} I.
inline bool is_identity_up_to_phase(const UnitaryOperator& u, double tol = kStateEqTol) {
    return std::abs(trace(u.m)) / u.dim() >= 1.0 - tol;
}

struct InvertibilityReport {
    bool invertible = false;
    // When invertible: one (alpha, beta) inverse pair. Otherwise the index of
    // the first alpha with no inverse in ops_B.
    int alpha_index = -1;
    int beta_index = -1;
};

// True iff every alpha in ops_A has a phase-blind inverse in ops_B.
inline InvertibilityReport is_invertible_game(const GameSpec& g) {
    InvertibilityReport rep;
    rep.invertible = true;
    for (int i = 0; i < g.rows(); ++i) {
        int found = -1;
        for (int j = 0; j < g.cols(); ++j) {
            if (is_identity_up_to_phase(
                    UnitaryOperator{mul(g.ops_B[j].m, g.ops_A[i].m), ""})) {
                found = j;
                break;
            }
        }
        if (found < 0) {
            return InvertibilityReport{false, i, -1};
        }
        if (rep.alpha_index < 0) {
            rep.alpha_index = i;
            rep.beta_index = found;
        }
    }
    return rep;
}

// Equilibrium test via a 2-move game: true iff, from the post-cell state,
// neither player's second move strictly beats playing identity.
inline bool two_move_equilibrium_check(const GameSpec& g, Cell cell) {
    check_cell(g, cell.first, cell.second);
    auto find_identity = [](const std::vector<UnitaryOperator>& ops) {
        for (size_t k = 0; k < ops.size(); ++k)
            if (is_identity_up_to_phase(ops[k])) return static_cast<int>(k);
        return -1;
    };
    const int id_A = find_identity(g.ops_A);
    const int id_B = find_identity(g.ops_B);
    if (id_A < 0 || id_B < 0)
        throw Error("two_move_equilibrium_check: identity missing from an operator set");

    // Second-round deviations are evaluated against the pre-rotation state.
    GameSpec round2 = g;
    round2.final_rotation.reset();
    StateVector mid = output_state(round2, cell.first, cell.second);
    round2.initial_state = mid;

    // Re-apply any final rotation before measuring a candidate state.
    auto settled = [&](const StateVector& s, const PreferenceRelation& pref) {
        return expected_outcome_of_state(
            g.final_rotation ? apply(*g.final_rotation, s) : s, g.measurement, pref,
            g.weights);
    };
    StateVector stay = mid;
    const double base_A = settled(stay, g.pref_A);
    const double base_B = settled(stay, g.pref_B);
    for (int p = 0; p < g.rows(); ++p) {
        if (p == id_A) continue;
        StateVector dev = apply(g.ops_A[p], mid);
        if (settled(dev, g.pref_A) > base_A + 1e-12) return false;
    }
    for (int q = 0; q < g.cols(); ++q) {
        if (q == id_B) continue;
        StateVector dev = apply(g.ops_B[q], mid);
        if (settled(dev, g.pref_B) > base_B + 1e-12) return false;
    }
    return true;
}

// Weak-ordering region membership: probabilities non-increasing along the
// player's preference list. Weak so that eigenstates (tied zeros) belong to
// their preferred region.
inline bool preference_region_contains(const StateVector& s, const MeasurementBasis& m,
                                       const PreferenceRelation& pref) {
    std::vector<double> p = outcome_distribution(s, m);
    for (int k = 0; k + 1 < pref.size(); ++k)
        if (p[pref.ranking[k] - 1] + 1e-12 < p[pref.ranking[k + 1] - 1]) return false;
    return true;
}

struct EquilibriumReport {
    std::vector<Cell> nash_cells;
    std::optional<Cell> sum_dom;
    std::vector<Cell> stackelberg_A, stackelberg_B;
    InvertibilityReport invertibility;
    std::string notes;
};

inline EquilibriumReport analyze_equilibria(const GameSpec& g) {
    PayoffMatrices pm = payoff_matrices(g);
    EquilibriumReport rep;
    rep.nash_cells = pure_nash(pm);
    rep.sum_dom = sum_dominance(pm);
    rep.stackelberg_A = stackelberg(pm, Player::A);
    rep.stackelberg_B = stackelberg(pm, Player::B);
    rep.invertibility = is_invertible_game(g);
    if (rep.nash_cells.empty()) rep.notes = "no pure equilibrium";
    return rep;
}

}  // namespace qgame
