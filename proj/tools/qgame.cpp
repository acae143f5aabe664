// qgame: analyze playable quantum games from spec documents.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qgame/report.hpp"

namespace {

// Bad flags and unreadable paths are usage errors (exit 1); only a document
// that fails to parse or validate is a spec error (exit 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open spec file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double parse_angle(const std::string& expr) {
    qgame::parse_detail::Lexer lex(expr, 1);
    double v = qgame::parse_detail::parse_scalar(lex);
    if (lex.peek().kind != qgame::parse_detail::Token::End)
        throw UsageError("trailing input in angle expression '" + expr + "'");
    return v;
}

void emit(const qgame::json& rep, bool as_json) {
    if (as_json)
        std::cout << rep.dump(2) << "\n";
    else
        std::cout << qgame::table_from_report(rep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"playable quantum game analyzer"};
    app.require_subcommand(1);

    std::string spec_path;
    bool as_json = false;
    long long trials = 100000;
    std::uint64_t seed = 1;
    double tol = 0.02;
    std::string form_name_arg = "MW1A";
    std::string lambda_expr = "pi/2";
    std::string second_basis = "hadamard2";

    auto add_spec_cmd = [&](const char* name, const char* desc) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->add_option("spec", spec_path, "game spec document")->required();
        c->add_flag("--json", as_json, "emit the JSON report");
        return c;
    };

    CLI::App* analyze = add_spec_cmd("analyze", "payoff matrices and per-cell distributions");
    CLI::App* equilibria = add_spec_cmd("equilibria", "Nash, sum-dominance, Stackelberg");
    CLI::App* classify = add_spec_cmd("classify", "entanglement classes and game type");
    CLI::App* coinsim = add_spec_cmd("coin-sim", "classical coin simulation and verification");
    coinsim->add_option("--trials", trials, "Monte Carlo trials per cell");
    coinsim->add_option("--seed", seed, "root RNG seed");
    coinsim->add_option("--tol", tol, "verification tolerance");
    CLI::App* transform = add_spec_cmd("transform", "build an equivalent-perspective spec");
    transform->add_option("--form", form_name_arg, "MW0|MW1A|MW1B|MW2|EWL0A|...|EWL3B");
    transform->add_option("--lambda", lambda_expr, "entangler angle (accepts pi literals)");
    CLI::App* uncertainty = add_spec_cmd("uncertainty", "conjugate-measurement bound per cell");
    uncertainty->add_option("--second-basis", second_basis, "hadamard2 | computational");
    CLI::App* compare = add_spec_cmd("compare-options", "G1/G2/G4 option comparison");
    compare->add_option("--lambda", lambda_expr, "entangler angle for options 2 and 4");
    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate-classical", "count classical 2x2 preference pairs");
    enumerate_cmd->add_flag("--json", as_json, "emit the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        if (enumerate_cmd->parsed()) {
            emit(qgame::report_enumerate_classical(), as_json);
            return 0;
        }
        qgame::GameSpecDocument doc = qgame::parse_spec_document(read_file(spec_path));
        if (analyze->parsed()) {
            emit(qgame::report_analyze(doc.spec), as_json);
        } else if (equilibria->parsed()) {
            emit(qgame::report_equilibria(doc.spec), as_json);
        } else if (classify->parsed()) {
            emit(qgame::report_classify(doc.spec), as_json);
        } else if (coinsim->parsed()) {
            emit(qgame::report_coinsim(doc.spec, trials, seed, tol), as_json);
        } else if (transform->parsed()) {
            auto kind = qgame::form_from_name(form_name_arg);
            if (!kind) throw UsageError("unknown form '" + form_name_arg + "'");
            double lambda = parse_angle(lambda_expr);
            qgame::UnitaryOperator t = (doc.base.initial_state.dim() == 4)
                                           ? qgame::entangler(lambda)
                                           : qgame::op_id(doc.base.initial_state.dim());
            emit(qgame::report_transform(doc.base, *kind, t), as_json);
        } else if (uncertainty->parsed()) {
            qgame::MeasurementBasis second;
            if (second_basis == "hadamard2")
                second = qgame::hadamard2_basis();
            else if (second_basis == "computational")
                second = doc.spec.measurement;
            else
                throw UsageError("unknown second basis '" + second_basis + "'");
            emit(qgame::report_uncertainty(doc.spec, second), as_json);
        } else if (compare->parsed()) {
            emit(qgame::report_compare_options(doc.base, parse_angle(lambda_expr)), as_json);
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const qgame::ParseError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 2;
    } catch (const qgame::Error& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
