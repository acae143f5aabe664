// Playable-game data model: output states, Born distributions, expected
// outcome matrices, sequential composition, classical 2x2 enumeration.
#pragma once

#include <optional>
#include <utility>

#include "qmath.hpp"

namespace qgame {

inline constexpr double kCommuteTol = 1e-9;

enum class Player { A, B };
enum class Order { AFirst, BFirst, Simultaneous };

using Cell = std::pair<int, int>;  // (row, col) strategy pair

struct PreferenceRelation {
    std::vector<int> ranking;  // permutation of 1..n, most preferred first

    int size() const { return static_cast<int>(ranking.size()); }

    // 1-based rank of outcome j (1 = most preferred)
    int rank_of(int outcome) const {
        for (int k = 0; k < size(); ++k)
            if (ranking[k] == outcome) return k + 1;
        throw Error("preference: outcome " + std::to_string(outcome) + " not ranked");
    }
};

inline void validate_preference(const PreferenceRelation& p, int n) {
    if (p.size() != n) throw Error("preference: length != measurement dimension");
    std::vector<bool> seen(n, false);
    for (int v : p.ranking) {
        if (v < 1 || v > n || seen[v - 1])
            throw Error("preference: not a permutation of 1.." + std::to_string(n));
        seen[v - 1] = true;
    }
}

struct OutcomeWeights {
    std::vector<double> values;  // strictly decreasing, values[k] pays rank k+1

    static OutcomeWeights standard(int n) {
        OutcomeWeights w;
        for (int k = n; k >= 1; --k) w.values.push_back(k);
        return w;
    }
};

inline void validate_weights(const OutcomeWeights& w, int n) {
    if (static_cast<int>(w.values.size()) != n)
        throw Error("weights: length != measurement dimension");
    for (size_t k = 0; k + 1 < w.values.size(); ++k)
        if (!(w.values[k] > w.values[k + 1]))
            throw Error("weights: not strictly decreasing");
}

struct MeasurementBasis {
    std::vector<StateVector> eigenstates;
    std::string label;

    int dim() const { return eigenstates.empty() ? 0 : eigenstates[0].dim(); }
    int size() const { return static_cast<int>(eigenstates.size()); }
};

inline void validate_basis(const MeasurementBasis& m) {
    if (m.size() == 0) throw Error("measurement: no eigenstates");
    if (m.size() != m.dim()) throw Error("measurement: basis is not complete");
    for (const auto& e : m.eigenstates) validate_state(e);
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j)
            if (std::abs(inner(m.eigenstates[i], m.eigenstates[j])) > kUnitaryTol)
                throw Error("measurement: eigenstates not orthogonal");
}

struct GameSpec {
    StateVector initial_state;
    std::vector<UnitaryOperator> ops_A, ops_B;
    Order order = Order::AFirst;
    MeasurementBasis measurement;
    PreferenceRelation pref_A, pref_B;
    OutcomeWeights weights;
    std::optional<UnitaryOperator> final_rotation;  // applied before measurement
    bool unrestricted_sets = false;  // complete-game (G_c) declaration

    int rows() const { return static_cast<int>(ops_A.size()); }
    int cols() const { return static_cast<int>(ops_B.size()); }
};

inline void validate_spec(const GameSpec& g) {
    validate_state(g.initial_state);
    if (g.ops_A.empty() || g.ops_B.empty()) throw Error("spec: empty operator set");
    const int d = g.initial_state.dim();
    for (const auto& u : g.ops_A) {
        validate_unitary(u);
        if (u.dim() != d) throw Error("spec: operator dim mismatch in ops_A");
    }
    for (const auto& u : g.ops_B) {
        validate_unitary(u);
        if (u.dim() != d) throw Error("spec: operator dim mismatch in ops_B");
    }
    validate_basis(g.measurement);
    if (g.measurement.dim() != d) throw Error("spec: measurement dim mismatch");
    validate_preference(g.pref_A, g.measurement.size());
    validate_preference(g.pref_B, g.measurement.size());
    validate_weights(g.weights, g.measurement.size());
    if (g.final_rotation) {
        validate_unitary(*g.final_rotation);
        if (g.final_rotation->dim() != d) throw Error("spec: final rotation dim mismatch");
    }
    if (g.order == Order::Simultaneous) {
        for (const auto& a : g.ops_A)
            for (const auto& b : g.ops_B)
                if (commutator_norm(a, b) > kCommuteTol)
                    throw Error("spec: simultaneous order requires commuting operator sets "
                                "(offending pair '" + a.label + "', '" + b.label + "')");
    }
}

struct PayoffMatrices {
    int rows = 0, cols = 0;
    std::vector<double> e_A, e_B;  // row major
    std::vector<std::string> row_labels, col_labels;

    double a(int i, int j) const { return e_A[static_cast<size_t>(i) * cols + j]; }
    double b(int i, int j) const { return e_B[static_cast<size_t>(i) * cols + j]; }
};

// ---------------------------------------------------------------------------

inline void check_cell(const GameSpec& g, int i, int j) {
    if (i < 0 || i >= g.rows() || j < 0 || j >= g.cols())
        throw Error("cell index out of range");
}

// The state the measurement acts on, for strategy pair (i, j).
inline StateVector output_state(const GameSpec& g, int i, int j) {
    check_cell(g, i, j);
    StateVector s = g.initial_state;
    if (g.order == Order::BFirst) {
        s = apply(g.ops_B[j], s);
        s = apply(g.ops_A[i], s);
    } else {
        s = apply(g.ops_A[i], s);
        s = apply(g.ops_B[j], s);
    }
    if (g.final_rotation) s = apply(*g.final_rotation, s);
    return s;
}

inline std::vector<double> outcome_distribution(const StateVector& s,
                                                const MeasurementBasis& m) {
    if (m.dim() != s.dim()) throw Error("outcome_distribution: dimension mismatch");
    std::vector<double> p(m.size());
    for (int k = 0; k < m.size(); ++k) p[k] = std::norm(inner(m.eigenstates[k], s));
    return p;
}

inline double expected_outcome_of_state(const StateVector& s, const MeasurementBasis& m,
                                        const PreferenceRelation& pref,
                                        const OutcomeWeights& w) {
    std::vector<double> p = outcome_distribution(s, m);
    double e = 0;
    for (int k = 0; k < pref.size(); ++k) e += w.values[k] * p[pref.ranking[k] - 1];
    return e;
}

inline double expected_outcome(const GameSpec& g, int i, int j, Player who) {
    const PreferenceRelation& pref = (who == Player::A) ? g.pref_A : g.pref_B;
    return expected_outcome_of_state(output_state(g, i, j), g.measurement, pref, g.weights);
}

inline PayoffMatrices payoff_matrices(const GameSpec& g) {
    PayoffMatrices pm;
    pm.rows = g.rows();
    pm.cols = g.cols();
    pm.e_A.resize(static_cast<size_t>(pm.rows) * pm.cols);
    pm.e_B.resize(pm.e_A.size());
    for (int i = 0; i < pm.rows; ++i)
        for (int j = 0; j < pm.cols; ++j) {
            StateVector s = output_state(g, i, j);
            pm.e_A[static_cast<size_t>(i) * pm.cols + j] =
                expected_outcome_of_state(s, g.measurement, g.pref_A, g.weights);
            pm.e_B[static_cast<size_t>(i) * pm.cols + j] =
                expected_outcome_of_state(s, g.measurement, g.pref_B, g.weights);
        }
    for (const auto& u : g.ops_A) pm.row_labels.push_back(u.label);
    for (const auto& u : g.ops_B) pm.col_labels.push_back(u.label);
    return pm;
}

// ---------------------------------------------------------------------------
// Sequential games.

struct SequentialResult {
    StateVector state;
    UnitaryOperator alpha_eff;  // all moves up to and including A's last
    UnitaryOperator beta_eff;   // B's last move; beta_eff * alpha_eff == full product
};

inline SequentialResult compose_sequential(const GameSpec& g,
                                           const std::vector<std::pair<int, int>>& moves) {
    if (moves.empty()) throw Error("compose_sequential: empty move list");
    const int d = g.initial_state.dim();
    CMat total = CMat::identity(d);
    StateVector s = g.initial_state;
    const bool b_first = (g.order == Order::BFirst);
    for (auto [i, j] : moves) {
        check_cell(g, i, j);
        const CMat& first = b_first ? g.ops_B[j].m : g.ops_A[i].m;
        const CMat& second = b_first ? g.ops_A[i].m : g.ops_B[j].m;
        total = mul(second, mul(first, total));
    }
    for (int k = 0; k < d; ++k) {
        cx v = 0;
        for (int l = 0; l < d; ++l) v += total.at(k, l) * g.initial_state.amps[l];
        s.amps[k] = v;
    }
    // Split at B's final move: beta' = last op, alpha' = everything before it.
    auto [li, lj] = moves.back();
    const CMat& last = b_first ? g.ops_A[li].m : g.ops_B[lj].m;
    CMat alpha = mul(dagger(last), total);
    return SequentialResult{std::move(s), make_unitary(std::move(alpha), "alpha_eff"),
                            make_unitary(last, b_first ? g.ops_A[li].label
                                                       : g.ops_B[lj].label)};
}

// ---------------------------------------------------------------------------
// Classical 2x2 preference-pair enumeration.

inline std::vector<std::pair<PreferenceRelation, PreferenceRelation>>
preference_pairs_with_distinct_top(int n) {
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 1);
    std::vector<std::vector<int>> perms;
    std::vector<int> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<std::pair<PreferenceRelation, PreferenceRelation>> out;
    for (const auto& pa : perms)
        for (const auto& pb : perms)
            if (pa[0] != pb[0]) out.push_back({PreferenceRelation{pa}, PreferenceRelation{pb}});
    return out;
}

inline std::size_t enumerate_classical_2x2_preference_pairs() {
    return preference_pairs_with_distinct_top(4).size();
}

}  // namespace qgame
