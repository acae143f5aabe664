// MW/EWL form construction, the entangler family T(lambda), equivalent
// perspectives, equivalence checking and evolution factorization.
#pragma once

#include "gamecore.hpp"

namespace qgame {

enum class FormKind {
    Plain,
    MW0,
    MW1A,
    MW1B,
    MW2,
    EWL0A,
    EWL0B,
    EWL1,
    EWL2A,
    EWL2B,
    EWL3A,
    EWL3B,
};

inline const char* form_name(FormKind k) {
    switch (k) {
        case FormKind::Plain: return "Plain";
        case FormKind::MW0: return "MW0";
        case FormKind::MW1A: return "MW1A";
        case FormKind::MW1B: return "MW1B";
        case FormKind::MW2: return "MW2";
        case FormKind::EWL0A: return "EWL0A";
        case FormKind::EWL0B: return "EWL0B";
        case FormKind::EWL1: return "EWL1";
        case FormKind::EWL2A: return "EWL2A";
        case FormKind::EWL2B: return "EWL2B";
        case FormKind::EWL3A: return "EWL3A";
        case FormKind::EWL3B: return "EWL3B";
    }
    return "?";
}

inline std::optional<FormKind> form_from_name(const std::string& s) {
    for (FormKind k :
         {FormKind::Plain, FormKind::MW0, FormKind::MW1A, FormKind::MW1B, FormKind::MW2,
          FormKind::EWL0A, FormKind::EWL0B, FormKind::EWL1, FormKind::EWL2A,
          FormKind::EWL2B, FormKind::EWL3A, FormKind::EWL3B})
        if (s == form_name(k)) return k;
    return std::nullopt;
}

// 4x4 rotation by lambda in span{|00>, (|01>+|10>)/sqrt(2)}, identity on the
// orthogonal complement. T(pi/2)|00> is the symmetric Bell state.
inline UnitaryOperator entangler(double lambda) {
    const double r = 1.0 / std::sqrt(2.0);
    const double c = std::cos(lambda), s = std::sin(lambda);
    // plane basis e0 = |00>, u = (|01>+|10>)/sqrt(2)
    std::vector<double> e0 = {1, 0, 0, 0}, u = {0, r, r, 0};
    CMat t = CMat::identity(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            t.at(i, j) += (c - 1.0) * (e0[i] * e0[j] + u[i] * u[j]) +
                          s * (u[i] * e0[j] - e0[i] * u[j]);
    return make_unitary(std::move(t), "T(lambda)");
}

namespace detail {

inline std::vector<UnitaryOperator> map_set(const std::vector<UnitaryOperator>& ops,
                                            const CMat* left, const CMat* right,
                                            const std::string& tag) {
    std::vector<UnitaryOperator> out;
    out.reserve(ops.size());
    for (const auto& u : ops) {
        CMat m = u.m;
        if (right) m = mul(m, *right);
        if (left) m = mul(*left, m);
        out.push_back(make_unitary(std::move(m), tag.empty() ? u.label : tag + "(" + u.label + ")"));
    }
    return out;
}

}  // namespace detail

// Build the equivalent-perspective spec of `base` (the plain game with input
// |psi0> and sets Omega_A, Omega_B) for the given form kind and entangler t.
inline GameSpec build_perspective(const GameSpec& base, FormKind kind,
                                  const UnitaryOperator& t) {
    validate_unitary(t);
    if (t.dim() != base.initial_state.dim())
        throw Error("build_perspective: entangler dimension mismatch");
    const CMat tinv = dagger(t.m);
    GameSpec g = base;
    g.final_rotation.reset();

    auto with_T_right = [&](const std::vector<UnitaryOperator>& s) {
        return detail::map_set(s, nullptr, &t.m, "");
    };
    auto with_Tinv_left = [&](const std::vector<UnitaryOperator>& s) {
        return detail::map_set(s, &tinv, nullptr, "");
    };
    auto conjugated = [&](const std::vector<UnitaryOperator>& s) {
        return detail::map_set(s, &tinv, &t.m, "");
    };

    switch (kind) {
        case FormKind::Plain:
            break;
        case FormKind::MW0:
            g.initial_state = apply(t, base.initial_state);
            break;
        case FormKind::MW1A:
            g.ops_A = with_T_right(base.ops_A);
            g.order = Order::AFirst;
            break;
        case FormKind::MW1B:
            g.ops_B = with_T_right(base.ops_B);
            g.order = Order::BFirst;
            break;
        case FormKind::MW2:
            g.ops_A = conjugated(base.ops_A);
            g.ops_B = conjugated(base.ops_B);
            g.final_rotation = t;
            break;
        case FormKind::EWL0A:
            g.initial_state = apply(t, base.initial_state);
            g.ops_B = with_Tinv_left(base.ops_B);
            g.order = Order::AFirst;
            break;
        case FormKind::EWL0B:
            g.initial_state = apply(t, base.initial_state);
            g.ops_A = with_Tinv_left(base.ops_A);
            g.order = Order::BFirst;
            break;
        case FormKind::EWL1:
            g.ops_A = conjugated(base.ops_A);
            g.ops_B = conjugated(base.ops_B);
            break;
        case FormKind::EWL2A:
            g.ops_A = with_T_right(base.ops_A);
            g.ops_B = with_Tinv_left(base.ops_B);
            g.order = Order::AFirst;
            break;
        case FormKind::EWL2B:
            g.ops_A = with_Tinv_left(base.ops_A);
            g.ops_B = with_T_right(base.ops_B);
            g.order = Order::BFirst;
            break;
        case FormKind::EWL3A:
            g.ops_A = with_T_right(base.ops_A);
            g.final_rotation = make_unitary(tinv, "T^-1");
            g.order = Order::AFirst;
            break;
        case FormKind::EWL3B:
            g.ops_B = with_T_right(base.ops_B);
            g.final_rotation = make_unitary(tinv, "T^-1");
            g.order = Order::BFirst;
            break;
    }
    // Conjugation preserves cross-commutators, so a simultaneous base stays
    // valid for MW0/MW2/EWL1; order-forcing kinds set their own order above.
    validate_spec(g);
    return g;
}

// As above, with an explicit order request checked against the form's bullet.
inline GameSpec build_perspective(const GameSpec& base, FormKind kind,
                                  const UnitaryOperator& t, Order requested) {
    GameSpec g = build_perspective(base, kind, t);
    const bool order_fixed =
        kind == FormKind::MW1A || kind == FormKind::MW1B || kind == FormKind::EWL0A ||
        kind == FormKind::EWL0B || kind == FormKind::EWL2A || kind == FormKind::EWL2B ||
        kind == FormKind::EWL3A || kind == FormKind::EWL3B;
    if (order_fixed && requested != g.order)
        throw Error(std::string("build_perspective: form ") + form_name(kind) +
                    " fixes the order of play; conflicting order requested");
    if (!order_fixed) {
        g.order = requested;
        validate_spec(g);
    }
    return g;
}

struct EquivalenceReport {
    bool equivalent = false;
    double worst_state_fidelity = 1.0;
    double worst_payoff_delta = 0.0;
    Cell worst_cell{0, 0};
};

// Equivalence of two specs: per-cell measured states match up to phase and
// payoff matrices agree entrywise.
inline EquivalenceReport specs_equivalent(const GameSpec& s1, const GameSpec& s2,
                                          double tol = kStateEqTol) {
    if (s1.rows() != s2.rows() || s1.cols() != s2.cols())
        throw Error("specs_equivalent: operator-set cardinality mismatch");
    if (s1.measurement.size() != s2.measurement.size())
        throw Error("specs_equivalent: measurement mismatch");
    for (int k = 0; k < s1.measurement.size(); ++k)
        if (!states_equal_up_to_phase(s1.measurement.eigenstates[k],
                                      s2.measurement.eigenstates[k], tol))
            throw Error("specs_equivalent: measurement mismatch");

    EquivalenceReport rep;
    rep.equivalent = true;
    PayoffMatrices p1 = payoff_matrices(s1), p2 = payoff_matrices(s2);
    for (int i = 0; i < s1.rows(); ++i)
        for (int j = 0; j < s1.cols(); ++j) {
            double f = fidelity(output_state(s1, i, j), output_state(s2, i, j));
            double d = std::max(std::abs(p1.a(i, j) - p2.a(i, j)),
                                std::abs(p1.b(i, j) - p2.b(i, j)));
            if (f < rep.worst_state_fidelity) {
                rep.worst_state_fidelity = f;
                rep.worst_cell = {i, j};
            }
            if (d > rep.worst_payoff_delta) {
                rep.worst_payoff_delta = d;
                if (f >= rep.worst_state_fidelity) rep.worst_cell = {i, j};
            }
            if (f < 1.0 - tol || d > tol) rep.equivalent = false;
        }
    return rep;
}

// beta = u * alpha^-1, so beta * alpha == u. The caller picks the split.
inline UnitaryOperator factor_evolution(const UnitaryOperator& u,
                                        const UnitaryOperator& alpha) {
    validate_unitary(u);
    validate_unitary(alpha);
    if (u.dim() != alpha.dim()) throw Error("factor_evolution: dimension mismatch");
    return make_unitary(mul(u.m, dagger(alpha.m)), "beta");
}

}  // namespace qgame
