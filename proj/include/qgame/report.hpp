// JSON and table reports for the CLI commands. JSON keys are emitted in
// lexicographic order and cells row-major, so identical inputs and seeds
// produce byte-identical reports.
#pragma once

#include <json.hpp>

#include "coinsim.hpp"
#include "entanglement.hpp"
#include "equilibria.hpp"
#include "forms.hpp"
#include "parse.hpp"
#include "uncertainty.hpp"

namespace qgame {

using json = nlohmann::json;

namespace report_detail {

inline std::string sig15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

inline json cell_json(Cell c) { return json{{"i", c.first}, {"j", c.second}}; }

inline json cells_json(const std::vector<Cell>& cells) {
    json arr = json::array();
    for (Cell c : cells) arr.push_back(cell_json(c));
    return arr;
}

inline json matrix_json(const std::vector<double>& m, int rows, int cols) {
    json arr = json::array();
    for (int i = 0; i < rows; ++i) {
        json row = json::array();
        for (int j = 0; j < cols; ++j) row.push_back(m[static_cast<size_t>(i) * cols + j]);
        arr.push_back(row);
    }
    return arr;
}

}  // namespace report_detail

inline json report_analyze(const GameSpec& g) {
    PayoffMatrices pm = payoff_matrices(g);
    json cells = json::array();
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            StateVector s = output_state(g, i, j);
            json probs = json::array();
            for (double p : outcome_distribution(s, g.measurement)) probs.push_back(p);
            cells.push_back(json{{"i", i},
                                 {"j", j},
                                 {"distribution", probs},
                                 {"expected_A", pm.a(i, j)},
                                 {"expected_B", pm.b(i, j)}});
        }
    return json{{"command", "analyze"},
                {"payoff_A", report_detail::matrix_json(pm.e_A, pm.rows, pm.cols)},
                {"payoff_B", report_detail::matrix_json(pm.e_B, pm.rows, pm.cols)},
                {"row_labels", pm.row_labels},
                {"col_labels", pm.col_labels},
                {"cells", cells}};
}

inline json report_equilibria(const GameSpec& g) {
    EquilibriumReport rep = analyze_equilibria(g);
    json j{{"command", "equilibria"},
           {"nash", report_detail::cells_json(rep.nash_cells)},
           {"stackelberg_A_first", report_detail::cells_json(rep.stackelberg_A)},
           {"stackelberg_B_first", report_detail::cells_json(rep.stackelberg_B)},
           {"invertible", rep.invertibility.invertible},
           {"notes", rep.notes}};
    j["sum_dominance"] =
        rep.sum_dom ? report_detail::cell_json(*rep.sum_dom) : json(nullptr);
    if (rep.invertibility.invertible) {
        j["invertibility_witness"] = json{{"alpha_index", rep.invertibility.alpha_index},
                                          {"beta_index", rep.invertibility.beta_index}};
    } else {
        j["invertibility_witness"] =
            json{{"uninvertible_alpha_index", rep.invertibility.alpha_index}};
    }
    return j;
}

inline json report_classify(const GameSpec& g) {
    GameClassification c = classify_game(g);
    json cells = json::array();
    int k = 0;
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j, ++k) {
            if (k >= static_cast<int>(c.cells.size())) break;
            cells.push_back(json{{"i", i},
                                 {"j", j},
                                 {"class", state_class_name(c.cells[k].cls)},
                                 {"index_of_correlation", c.cells[k].ic}});
        }
    return json{{"command", "classify"},
                {"game_type", game_type_name(c.type)},
                {"cells", cells}};
}

inline json report_coinsim(const GameSpec& g, long long trials, std::uint64_t seed,
                           double tol) {
    ClassicalCoinGame game = build_coin_game(g);
    EquivalenceVerification v = verify_equivalence(g, trials, seed, tol);
    json cells = json::array();
    for (const auto& cv : v.cells) {
        const CoinCell& cc = game.cell(cv.i, cv.j);
        json pa = json::array(), pb = json::array();
        for (double p : cc.prob_A) pa.push_back(report_detail::sig15(p));
        for (double p : cc.prob_B) pb.push_back(report_detail::sig15(p));
        cells.push_back(json{{"i", cv.i},
                             {"j", cv.j},
                             {"codeword_A", game.code_A[cv.i]},
                             {"codeword_B", game.code_B[cv.j]},
                             {"prob_A", pa},
                             {"prob_B", pb},
                             {"quantum_A", cv.quantum_A},
                             {"quantum_B", cv.quantum_B},
                             {"empirical_A", cv.empirical_A},
                             {"empirical_B", cv.empirical_B},
                             {"deviation", cv.deviation}});
    }
    json weights = json::array();
    for (double w : game.weight_values) weights.push_back(report_detail::sig15(w));
    return json{{"command", "coin-sim"},
                {"pass", v.pass},
                {"trials", trials},
                {"seed", seed},
                {"tol", tol},
                {"kappa_A", game.kappa_A},
                {"kappa_B", game.kappa_B},
                {"weights", weights},
                {"worst_deviation", v.worst_deviation},
                {"worst_cell", report_detail::cell_json(v.worst_cell)},
                {"table", cells}};
}

inline json report_transform(const GameSpec& base, FormKind kind,
                             const UnitaryOperator& t) {
    GameSpec built = build_perspective(base, kind, t);
    EquivalenceReport eq = specs_equivalent(base, built);
    return json{{"command", "transform"},
                {"form", form_name(kind)},
                {"equivalent_to_base", eq.equivalent},
                {"worst_state_fidelity", eq.worst_state_fidelity},
                {"worst_payoff_delta", eq.worst_payoff_delta},
                {"worst_cell", report_detail::cell_json(eq.worst_cell)},
                {"spec", render_spec(built)}};
}

inline json report_uncertainty(const GameSpec& g, const MeasurementBasis& second) {
    OutcomeOperator e1 = outcome_operator(g.measurement, g.pref_A, g.weights);
    OutcomeOperator e2 = outcome_operator(second, g.pref_A, g.weights);
    json cells = json::array();
    bool all_hold = true;
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            StateVector s = output_state(g, i, j);
            auto [m1, v1] = expectation_and_variance(s, e1);
            auto [m2, v2] = expectation_and_variance(s, e2);
            UncertaintyCheck c = uncertainty_bound_check(s, e1, e2);
            all_hold = all_hold && c.holds;
            cells.push_back(json{{"i", i},
                                 {"j", j},
                                 {"mean_1", m1},
                                 {"variance_1", v1},
                                 {"mean_2", m2},
                                 {"variance_2", v2},
                                 {"lhs", c.lhs},
                                 {"rhs", c.rhs},
                                 {"holds", c.holds}});
        }
    return json{{"command", "uncertainty"},
                {"second_basis", second.label},
                {"pass", all_hold},
                {"cells", cells}};
}

// The option-list comparison: option 1 is the base local game (G1),
// option 2 its EWL1 form (G2), option 4 its MW1A form (G4).
inline json report_compare_options(const GameSpec& base, double lambda = 1.5707963267948966) {
    UnitaryOperator t = entangler(lambda);
    json options = json::array();
    auto add = [&](const char* name, const GameSpec& g) {
        options.push_back(json{{"option", name},
                               {"game_type", report_classify(g)["game_type"]},
                               {"equilibria", report_equilibria(g)}});
    };
    add("option1", base);
    add("option2", build_perspective(base, FormKind::EWL1, t));
    add("option4", build_perspective(base, FormKind::MW1A, t));
    return json{{"command", "compare-options"}, {"options", options}};
}

inline json report_enumerate_classical() {
    return json{{"command", "enumerate-classical"},
                {"count", enumerate_classical_2x2_preference_pairs()}};
}

// ---------------------------------------------------------------------------
// Human-readable tables.

inline std::string table_from_report(const json& rep) {
    std::ostringstream out;
    const std::string cmd = rep.value("command", "");
    auto cellstr = [](const json& c) {
        return "(" + std::to_string(c["i"].get<int>()) + "," +
               std::to_string(c["j"].get<int>()) + ")";
    };
    if (cmd == "analyze") {
        auto dump_matrix = [&](const char* name, const json& m) {
            out << name << ":\n";
            for (const auto& row : m) {
                for (const auto& v : row)
                    out << "  " << report_detail::sig15(v.get<double>());
                out << "\n";
            }
        };
        dump_matrix("payoff A", rep["payoff_A"]);
        dump_matrix("payoff B", rep["payoff_B"]);
    } else if (cmd == "equilibria") {
        out << "nash:";
        for (const auto& c : rep["nash"]) out << " " << cellstr(c);
        out << "\nsum dominance: "
            << (rep["sum_dominance"].is_null() ? std::string("none")
                                               : cellstr(rep["sum_dominance"]));
        out << "\nstackelberg (A first):";
        for (const auto& c : rep["stackelberg_A_first"]) out << " " << cellstr(c);
        out << "\nstackelberg (B first):";
        for (const auto& c : rep["stackelberg_B_first"]) out << " " << cellstr(c);
        out << "\ninvertible: " << (rep["invertible"].get<bool>() ? "yes" : "no") << "\n";
    } else if (cmd == "classify") {
        out << "game type: " << rep["game_type"].get<std::string>() << "\n";
        for (const auto& c : rep["cells"])
            out << "  " << cellstr(c) << " " << c["class"].get<std::string>()
                << "  I_c = " << report_detail::sig15(c["index_of_correlation"].get<double>())
                << "\n";
    } else if (cmd == "coin-sim") {
        out << "pass: " << (rep["pass"].get<bool>() ? "yes" : "no")
            << "  worst deviation: "
            << report_detail::sig15(rep["worst_deviation"].get<double>()) << "\n";
        out << "coins: A=" << rep["kappa_A"].get<int>() << " B=" << rep["kappa_B"].get<int>()
            << "\n";
        for (const auto& c : rep["table"]) {
            out << "  cell " << cellstr(c) << " codes(" << c["codeword_A"].get<std::string>()
                << "," << c["codeword_B"].get<std::string>() << ")  pA = [";
            bool first = true;
            for (const auto& p : c["prob_A"]) {
                if (!first) out << ", ";
                out << p.get<std::string>();
                first = false;
            }
            out << "]  pB = [";
            first = true;
            for (const auto& p : c["prob_B"]) {
                if (!first) out << ", ";
                out << p.get<std::string>();
                first = false;
            }
            out << "]\n";
        }
    } else if (cmd == "transform") {
        out << "form: " << rep["form"].get<std::string>() << "\nequivalent to base: "
            << (rep["equivalent_to_base"].get<bool>() ? "yes" : "no") << "\n"
            << rep["spec"].get<std::string>();
    } else if (cmd == "uncertainty") {
        out << "bound holds on all cells: " << (rep["pass"].get<bool>() ? "yes" : "no")
            << "\n";
        for (const auto& c : rep["cells"])
            out << "  " << cellstr(c) << " lhs = "
                << report_detail::sig15(c["lhs"].get<double>())
                << "  rhs = " << report_detail::sig15(c["rhs"].get<double>()) << "\n";
    } else if (cmd == "compare-options") {
        for (const auto& o : rep["options"]) {
            out << o["option"].get<std::string>() << ": type "
                << o["game_type"].get<std::string>() << ", nash";
            for (const auto& c : o["equilibria"]["nash"]) out << " " << cellstr(c);
            out << "\n";
        }
    } else if (cmd == "enumerate-classical") {
        out << "count: " << rep["count"].get<std::size_t>() << "\n";
    } else {
        out << rep.dump(2) << "\n";
    }
    return out.str();
}

}  // namespace qgame
