// Stock game fixtures: the 2-qubit computational-basis games and the
// 1-qubit Pauli game.
#pragma once

#include "gamecore.hpp"

namespace qgame {

inline MeasurementBasis computational_basis(int nqubits) {
    const int dim = 1 << nqubits;
    MeasurementBasis m;
    m.label = "computational";
    std::vector<int> factors(nqubits, 2);
    for (int k = 0; k < dim; ++k) m.eigenstates.push_back(basis_state(dim, k, factors));
    return m;
}

// Columns of H (x) H: mutually unbiased with the 2-qubit computational basis.
inline MeasurementBasis hadamard2_basis() {
    CMat hh = kron(hadamard(), hadamard());
    MeasurementBasis m;
    m.label = "hadamard2";
    for (int k = 0; k < 4; ++k) {
        std::vector<cx> a(4);
        for (int i = 0; i < 4; ++i) a[i] = hh.at(i, k);
        m.eigenstates.push_back(make_state(std::move(a), {2, 2}));
    }
    return m;
}

// Rotated per-qubit basis {|0>_{t,p}, |1>_{t,p}} (x) {|0>_{t',p'}, |1>_{t',p'}}.
inline MeasurementBasis rotated_basis(double theta, double phi, double theta2, double phi2) {
    auto one_rotated = [](double t, double p) {
        StateVector zero = rotated_qubit(t, p);
        StateVector one = make_state({std::conj(zero.amps[1]) * -1.0,
                                      std::conj(zero.amps[0])},
                                     {2});
        return std::pair{zero, one};
    };
    auto [a0, a1] = one_rotated(theta, phi);
    auto [b0, b1] = one_rotated(theta2, phi2);
    MeasurementBasis m;
    m.label = "rotated";
    m.eigenstates = {tensor(a0, b0), tensor(a0, b1), tensor(a1, b0), tensor(a1, b1)};
    return m;
}

inline UnitaryOperator op_id(int dim) { return make_unitary(CMat::identity(dim), "I"); }

inline UnitaryOperator flip_on_A() {
    return make_unitary(kron(flip_gate(), CMat::identity(2)), "FLIP kron I");
}
inline UnitaryOperator flip_on_B() {
    return make_unitary(kron(CMat::identity(2), flip_gate()), "I kron FLIP");
}

inline PreferenceRelation pd_coop_pref_A() { return PreferenceRelation{{2, 1, 4, 3}}; }
inline PreferenceRelation pd_coop_pref_B() { return PreferenceRelation{{3, 1, 4, 2}}; }

enum class PdVariant {
    Coop,      // P_A = (2,1,4,3), P_B = (3,1,4,2); equilibrium at (I, I)
    Standard,  // the two relations swapped; classic defect-defect structure
};

// |00> input, local flip-or-identity sets, computational measurement.
inline GameSpec plain_pd(PdVariant v = PdVariant::Coop) {
    GameSpec g;
    g.initial_state = basis_state(4, 0, {2, 2});
    g.ops_A = {op_id(4), flip_on_A()};
    g.ops_B = {op_id(4), flip_on_B()};
    g.order = Order::Simultaneous;
    g.measurement = computational_basis(2);
    g.pref_A = (v == PdVariant::Coop) ? pd_coop_pref_A() : pd_coop_pref_B();
    g.pref_B = (v == PdVariant::Coop) ? pd_coop_pref_B() : pd_coop_pref_A();
    g.weights = OutcomeWeights::standard(4);
    validate_spec(g);
    return g;
}

// (|01>+|10>)/sqrt(2) input, same sets and measurement.
inline GameSpec entangled_pd(PdVariant v = PdVariant::Coop) {
    GameSpec g = plain_pd(v);
    const double r = 1.0 / std::sqrt(2.0);
    g.initial_state = make_state({0.0, r, r, 0.0}, {2, 2});
    validate_spec(g);
    return g;
}

// Input |0>_{t,p} (x) |0>_{t',p'}, same sets and measurement.
inline GameSpec rotated_pd(double theta, double phi, double theta2, double phi2,
                           PdVariant v = PdVariant::Coop) {
    GameSpec g = plain_pd(v);
    g.initial_state = tensor(rotated_qubit(theta, phi), rotated_qubit(theta2, phi2));
    validate_spec(g);
    return g;
}

// 1-qubit game where both sets are the Pauli group representatives: invertible,
// opposed preferences, so no pure equilibrium exists.
inline GameSpec pauli_invertible_game() {
    GameSpec g;
    g.initial_state = basis_state(2, 0, {2});
    auto paulis = [] {
        return std::vector<UnitaryOperator>{
            make_unitary(CMat::identity(2), "I"), make_unitary(pauli_x(), "X"),
            make_unitary(pauli_y(), "Y"), make_unitary(pauli_z(), "Z")};
    };
    g.ops_A = paulis();
    g.ops_B = paulis();
    g.order = Order::AFirst;
    MeasurementBasis m;
    m.label = "computational";
    m.eigenstates = {basis_state(2, 0, {2}), basis_state(2, 1, {2})};
    g.measurement = m;
    g.pref_A = PreferenceRelation{{1, 2}};
    g.pref_B = PreferenceRelation{{2, 1}};
    g.weights = OutcomeWeights::standard(2);
    validate_spec(g);
    return g;
}

}  // namespace qgame
