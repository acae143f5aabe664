// Conjugate-measurement game pairs: preference-weighted outcome operators,
// variances and the uncertainty bound on their product.
#pragma once

#include "gamecore.hpp"

namespace qgame {

struct OutcomeOperator {
    CMat m;  // Hermitian; eigenvalues are the weight multiset

    int dim() const { return m.dim; }
};

// E = sum_j w[rank(j)] |basis_j><basis_j|
inline OutcomeOperator outcome_operator(const MeasurementBasis& basis,
                                        const PreferenceRelation& pref,
                                        const OutcomeWeights& w) {
    validate_basis(basis);
    validate_preference(pref, basis.size());
    validate_weights(w, basis.size());
    CMat e(basis.dim());
    for (int j = 0; j < basis.size(); ++j) {
        const double wj = w.values[pref.rank_of(j + 1) - 1];
        const StateVector& v = basis.eigenstates[j];
        for (int r = 0; r < e.dim; ++r)
            for (int c = 0; c < e.dim; ++c)
                e.at(r, c) += wj * v.amps[r] * std::conj(v.amps[c]);
    }
    return OutcomeOperator{std::move(e)};
}

inline std::pair<double, double> expectation_and_variance(const StateVector& s,
                                                          const OutcomeOperator& e) {
    if (s.dim() != e.dim()) throw Error("expectation_and_variance: dimension mismatch");
    auto quad = [&](const CMat& op) {
        cx v = 0;
        for (int i = 0; i < op.dim; ++i)
            for (int j = 0; j < op.dim; ++j)
                v += std::conj(s.amps[i]) * op.at(i, j) * s.amps[j];
        return v.real();
    };
    const double mean = quad(e.m);
    double var = quad(mul(e.m, e.m)) - mean * mean;
    if (var < 0 && var > -1e-12) var = 0;  // floating-point guard
    return {mean, var};
}

struct UncertaintyCheck {
    double lhs;  // product of variances
    double rhs;  // (1/4) |<psi|[E1, E2]|psi>|^2
    bool holds;
};

inline UncertaintyCheck uncertainty_bound_check(const StateVector& s,
                                                const OutcomeOperator& e1,
                                                const OutcomeOperator& e2) {
    if (s.dim() != e1.dim() || s.dim() != e2.dim())
        throw Error("uncertainty_bound_check: dimension mismatch");
    auto [m1, v1] = expectation_and_variance(s, e1);
    auto [m2, v2] = expectation_and_variance(s, e2);
    (void)m1;
    (void)m2;
    CMat comm = add(mul(e1.m, e2.m), mul(e2.m, e1.m), -1.0);
    cx ev = 0;
    for (int i = 0; i < comm.dim; ++i)
        for (int j = 0; j < comm.dim; ++j)
            ev += std::conj(s.amps[i]) * comm.at(i, j) * s.amps[j];
    UncertaintyCheck c;
    c.lhs = v1 * v2;
    c.rhs = 0.25 * std::norm(ev);
    c.holds = c.lhs >= c.rhs - 1e-9;
    return c;
}

}  // namespace qgame
