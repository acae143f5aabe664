// Game-spec document parser and the gate-expression grammar.
//
// Document format (line oriented, '#' comments):
//
//   factors = 2 2
//   initial = ground | bell_sym | rotated(t, p, t', p') | amps (..., ...)
//   order = A_first | B_first | simultaneous
//   measurement = computational | hadamard2 | rotated(t, p, t', p')
//               | vectors (...); (...); ...
//   weights = 4 3 2 1                  # optional, default n..1
//   form = MW1A lambda pi/2            # optional perspective transform
//   [player A]
//   ops = I kron I, FLIP kron I
//   preference = 2 1 4 3
//   [player B]
//   ...
//
// Gate grammar: atom := I|X|Y|Z|H|FLIP|Rx(t)|Ry(t)|Rz(t)|matrix[[...],[...]];
// term := atom (kron atom)*; expr := term ('*' term)*.
// Scalars accept decimal literals, pi and sqrt(...) with '*' and '/'.
#pragma once

#include <cctype>
#include <sstream>

#include "forms.hpp"
#include "presets.hpp"

namespace qgame {

struct ParseError : Error {
    int line, col;

    ParseError(int l, int c, const std::string& msg)
        : Error("line " + std::to_string(l) + ", col " + std::to_string(c) + ": " + msg),
          line(l),
          col(c) {}
};

namespace parse_detail {

struct Token {
    enum Kind { Ident, Number, Sym, End } kind = End;
    std::string text;
    double num = 0;
    int line = 0, col = 0;
};

class Lexer {
public:
    Lexer(const std::string& src, int line) : src_(src), line_(line) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line_, tok_.col, msg);
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = static_cast<int>(pos_) + 1;
        if (pos_ >= src_.size()) {
            tok_.kind = Token::End;
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            tok_.kind = Token::Ident;
            tok_.text = src_.substr(start, pos_ - start);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && pos_ + 1 < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.' ||
                    src_[pos_] == 'e' || src_[pos_] == 'E' ||
                    ((src_[pos_] == '+' || src_[pos_] == '-') && pos_ > start &&
                     (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E'))))
                ++pos_;
            tok_.kind = Token::Number;
            tok_.text = src_.substr(start, pos_ - start);
            try {
                tok_.num = std::stod(tok_.text);
            } catch (...) {
                throw ParseError(line_, tok_.col, "bad numeric literal '" + tok_.text + "'");
            }
            return;
        }
        // UTF-8 tensor sign
        if (static_cast<unsigned char>(c) == 0xE2 && pos_ + 2 < src_.size() &&
            static_cast<unsigned char>(src_[pos_ + 1]) == 0x8A &&
            static_cast<unsigned char>(src_[pos_ + 2]) == 0x97) {
            pos_ += 3;
            tok_.kind = Token::Ident;
            tok_.text = "kron";
            return;
        }
        tok_.kind = Token::Sym;
        tok_.text = std::string(1, c);
        ++pos_;
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_;
    Token tok_;
};

inline void expect_sym(Lexer& lex, const std::string& s) {
    Token t = lex.take();
    if (t.kind != Token::Sym || t.text != s)
        throw ParseError(t.line, t.col, "expected '" + s + "'");
}

double parse_scalar(Lexer& lex);

inline double parse_scalar_factor(Lexer& lex) {
    Token t = lex.take();
    if (t.kind == Token::Number) return t.num;
    if (t.kind == Token::Ident && t.text == "pi") return 3.14159265358979323846;
    if (t.kind == Token::Ident && t.text == "sqrt") {
        expect_sym(lex, "(");
        double v = parse_scalar(lex);
        expect_sym(lex, ")");
        if (v < 0) throw ParseError(t.line, t.col, "sqrt of negative value");
        return std::sqrt(v);
    }
    if (t.kind == Token::Sym && t.text == "(") {
        double v = parse_scalar(lex);
        expect_sym(lex, ")");
        return v;
    }
    throw ParseError(t.line, t.col, "expected a number, 'pi' or 'sqrt(...)'");
}

inline double parse_scalar(Lexer& lex) {
    double sign = 1.0;
    while (lex.peek().kind == Token::Sym &&
           (lex.peek().text == "-" || lex.peek().text == "+")) {
        if (lex.take().text == "-") sign = -sign;
    }
    double v = parse_scalar_factor(lex);
    while (lex.peek().kind == Token::Sym &&
           (lex.peek().text == "*" || lex.peek().text == "/")) {
        std::string op = lex.take().text;
        double rhs = parse_scalar_factor(lex);
        v = (op == "*") ? v * rhs : v / rhs;
    }
    return sign * v;
}

// scalar, scalar 'i', scalar +/- scalar 'i', or bare 'i'
inline cx parse_complex(Lexer& lex) {
    if (lex.peek().kind == Token::Ident && lex.peek().text == "i") {
        lex.take();
        return cx{0, 1};
    }
    double first = parse_scalar(lex);
    if (lex.peek().kind == Token::Ident && lex.peek().text == "i") {
        lex.take();
        return cx{0, first};
    }
    if (lex.peek().kind == Token::Sym &&
        (lex.peek().text == "+" || lex.peek().text == "-")) {
        // only an imaginary tail follows a +/- inside one entry
        double sign = (lex.take().text == "-") ? -1.0 : 1.0;
        if (lex.peek().kind == Token::Ident && lex.peek().text == "i") {
            lex.take();
            return cx{first, sign};
        }
        double second = parse_scalar(lex);
        Token t = lex.take();
        if (t.kind != Token::Ident || t.text != "i")
            throw ParseError(t.line, t.col, "expected 'i' after imaginary part");
        return cx{first, sign * second};
    }
    return cx{first, 0};
}

inline CMat parse_matrix_literal(Lexer& lex) {
    expect_sym(lex, "[");
    std::vector<std::vector<cx>> rows;
    while (true) {
        expect_sym(lex, "[");
        std::vector<cx> row;
        while (true) {
            row.push_back(parse_complex(lex));
            if (lex.peek().kind == Token::Sym && lex.peek().text == ",") {
                lex.take();
                continue;
            }
            break;
        }
        expect_sym(lex, "]");
        rows.push_back(std::move(row));
        if (lex.peek().kind == Token::Sym && lex.peek().text == ",") {
            lex.take();
            continue;
        }
        break;
    }
    expect_sym(lex, "]");
    const int n = static_cast<int>(rows.size());
    CMat m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            lex.fail("matrix literal is not square");
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

inline CMat parse_gate_atom(Lexer& lex) {
    Token t = lex.take();
    if (t.kind != Token::Ident) throw ParseError(t.line, t.col, "expected a gate atom");
    if (t.text == "I") return CMat::identity(2);
    if (t.text == "X") return pauli_x();
    if (t.text == "Y") return pauli_y();
    if (t.text == "Z") return pauli_z();
    if (t.text == "H") return hadamard();
    if (t.text == "FLIP") return flip_gate();
    if (t.text == "Rx" || t.text == "Ry" || t.text == "Rz") {
        expect_sym(lex, "(");
        double theta = parse_scalar(lex);
        expect_sym(lex, ")");
        if (t.text == "Rx") return rot_x(theta);
        if (t.text == "Ry") return rot_y(theta);
        return rot_z(theta);
    }
    if (t.text == "matrix") {
        CMat m = parse_matrix_literal(lex);
        if (!is_unitary(m))
            throw ParseError(t.line, t.col, "matrix literal is not unitary");
        return m;
    }
    throw ParseError(t.line, t.col, "unknown gate atom '" + t.text + "'");
}

inline CMat parse_gate_term(Lexer& lex) {
    CMat m = parse_gate_atom(lex);
    while (lex.peek().kind == Token::Ident && lex.peek().text == "kron") {
        lex.take();
        m = kron(m, parse_gate_atom(lex));
    }
    return m;
}

inline CMat parse_gate_expr(Lexer& lex) {
    Token start = lex.peek();
    CMat m = parse_gate_term(lex);
    while (lex.peek().kind == Token::Sym && lex.peek().text == "*") {
        lex.take();
        CMat rhs = parse_gate_term(lex);
        if (rhs.dim != m.dim)
            throw ParseError(start.line, start.col, "gate product dimension mismatch");
        m = mul(m, rhs);
    }
    return m;
}

}  // namespace parse_detail

struct GameSpecDocument {
    GameSpec spec;                       // fully validated, form applied
    GameSpec base;                       // before any form transform
    std::optional<FormKind> form;
    std::optional<double> form_lambda;
    std::optional<UnitaryOperator> form_entangler;
};

namespace parse_detail {

struct RawDoc {
    std::vector<int> factors;
    std::string initial_line;
    int initial_lineno = 0;
    std::string order = "A_first";
    int order_lineno = 0;
    std::string measurement_line = "computational";
    int measurement_lineno = 0;
    std::string weights_line;
    int weights_lineno = 0;
    std::string form_line;
    int form_lineno = 0;
    std::string final_rotation_line;
    int final_rotation_lineno = 0;
    std::vector<std::pair<std::string, int>> ops_A, ops_B;
    std::vector<int> pref_A, pref_B;
    bool unrestricted = false;
};

inline std::vector<double> parse_number_list(const std::string& s, int lineno) {
    Lexer lex(s, lineno);
    std::vector<double> out;
    while (lex.peek().kind != Token::End) out.push_back(parse_scalar(lex));
    return out;
}

inline StateVector parse_initial(const std::string& s, int lineno,
                                 const std::vector<int>& factors) {
    int dim = 1;
    for (int f : factors) dim *= f;
    Lexer lex(s, lineno);
    Token t = lex.take();
    if (t.kind != Token::Ident) throw ParseError(lineno, t.col, "bad initial state");
    if (t.text == "ground") return basis_state(dim, 0, factors);
    if (t.text == "bell_sym") {
        if (dim != 4) throw ParseError(lineno, t.col, "bell_sym needs a 2-qubit game");
        const double r = 1.0 / std::sqrt(2.0);
        return make_state({0.0, r, r, 0.0}, factors);
    }
    if (t.text == "rotated") {
        if (dim != 4) throw ParseError(lineno, t.col, "rotated needs a 2-qubit game");
        expect_sym(lex, "(");
        double a = parse_scalar(lex);
        expect_sym(lex, ",");
        double b = parse_scalar(lex);
        expect_sym(lex, ",");
        double c = parse_scalar(lex);
        expect_sym(lex, ",");
        double d = parse_scalar(lex);
        expect_sym(lex, ")");
        return tensor(rotated_qubit(a, b), rotated_qubit(c, d));
    }
    if (t.text == "amps") {
        expect_sym(lex, "(");
        std::vector<cx> amps;
        while (true) {
            amps.push_back(parse_complex(lex));
            if (lex.peek().kind == Token::Sym && lex.peek().text == ",") {
                lex.take();
                continue;
            }
            break;
        }
        expect_sym(lex, ")");
        if (static_cast<int>(amps.size()) != dim)
            throw ParseError(lineno, t.col, "amplitude count does not match dimension");
        double n = 0;
        for (const auto& a : amps) n += std::norm(a);
        n = std::sqrt(n);
        if (n < 1e-9) throw ParseError(lineno, t.col, "zero state vector");
        for (auto& a : amps) a /= n;  // explicit lists are normalized on input
        return make_state(std::move(amps), factors);
    }
    throw ParseError(lineno, t.col, "unknown initial-state preset '" + t.text + "'");
}

inline MeasurementBasis parse_measurement(const std::string& s, int lineno,
                                          const std::vector<int>& factors) {
    int dim = 1;
    for (int f : factors) dim *= f;
    Lexer lex(s, lineno);
    Token t = lex.take();
    if (t.kind != Token::Ident) throw ParseError(lineno, t.col, "bad measurement");
    if (t.text == "computational") {
        if (factors == std::vector<int>{2, 2}) return computational_basis(2);
        MeasurementBasis m;
        m.label = "computational";
        for (int k = 0; k < dim; ++k) m.eigenstates.push_back(basis_state(dim, k, factors));
        return m;
    }
    if (t.text == "hadamard2") {
        if (dim != 4) throw ParseError(lineno, t.col, "hadamard2 needs a 2-qubit game");
        return hadamard2_basis();
    }
    if (t.text == "rotated") {
        if (dim != 4) throw ParseError(lineno, t.col, "rotated needs a 2-qubit game");
        expect_sym(lex, "(");
        double a = parse_scalar(lex);
        expect_sym(lex, ",");
        double b = parse_scalar(lex);
        expect_sym(lex, ",");
        double c = parse_scalar(lex);
        expect_sym(lex, ",");
        double d = parse_scalar(lex);
        expect_sym(lex, ")");
        return rotated_basis(a, b, c, d);
    }
    if (t.text == "vectors") {
        MeasurementBasis m;
        m.label = "explicit";
        while (true) {
            expect_sym(lex, "(");
            std::vector<cx> amps;
            while (true) {
                amps.push_back(parse_complex(lex));
                if (lex.peek().kind == Token::Sym && lex.peek().text == ",") {
                    lex.take();
                    continue;
                }
                break;
            }
            expect_sym(lex, ")");
            if (static_cast<int>(amps.size()) != dim)
                throw ParseError(lineno, t.col, "eigenstate length does not match dimension");
            m.eigenstates.push_back(make_state(std::move(amps), factors));
            if (lex.peek().kind == Token::Sym && lex.peek().text == ";") {
                lex.take();
                continue;
            }
            break;
        }
        return m;
    }
    throw ParseError(lineno, t.col, "unknown measurement '" + t.text + "'");
}

inline std::vector<UnitaryOperator> parse_ops(
    const std::vector<std::pair<std::string, int>>& entries, int dim) {
    std::vector<UnitaryOperator> out;
    for (const auto& [text, lineno] : entries) {
        Lexer lex(text, lineno);
        CMat m = parse_gate_expr(lex);
        if (lex.peek().kind != Token::End)
            throw ParseError(lineno, lex.peek().col, "trailing input after gate expression");
        if (m.dim != dim)
            throw ParseError(lineno, 1,
                             "gate dimension " + std::to_string(m.dim) +
                                 " does not match game dimension " + std::to_string(dim));
        out.push_back(make_unitary(std::move(m), text));
    }
    return out;
}

}  // namespace parse_detail

inline GameSpecDocument parse_spec_document(const std::string& text) {
    using namespace parse_detail;
    RawDoc raw;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int section = 0;  // 0 = top, 1 = player A, 2 = player B
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        std::string trimmed = line.substr(b, e - b + 1);
        if (trimmed.front() == '[') {
            if (trimmed == "[player A]")
                section = 1;
            else if (trimmed == "[player B]")
                section = 2;
            else
                throw ParseError(lineno, static_cast<int>(b) + 1,
                                 "unknown section '" + trimmed + "'");
            continue;
        }
        size_t eq = trimmed.find('=');
        if (eq == std::string::npos)
            throw ParseError(lineno, static_cast<int>(b) + 1, "expected 'key = value'");
        std::string key = trimmed.substr(0, eq);
        key.erase(key.find_last_not_of(" \t") + 1);
        std::string value = trimmed.substr(eq + 1);
        value.erase(0, value.find_first_not_of(" \t"));

        auto list_entries = [&](const std::string& v) {
            std::vector<std::pair<std::string, int>> out;
            size_t start = 0, depth = 0;
            for (size_t k = 0; k <= v.size(); ++k) {
                if (k < v.size() && (v[k] == '[' || v[k] == '(')) ++depth;
                if (k < v.size() && (v[k] == ']' || v[k] == ')')) --depth;
                if (k == v.size() || (v[k] == ',' && depth == 0)) {
                    std::string item = v.substr(start, k - start);
                    size_t ib = item.find_first_not_of(" \t");
                    if (ib != std::string::npos)
                        out.push_back({item.substr(ib, item.find_last_not_of(" \t") - ib + 1),
                                       lineno});
                    start = k + 1;
                }
            }
            return out;
        };

        if (section == 0) {
            if (key == "factors") {
                for (double f : parse_number_list(value, lineno)) {
                    if (f <= 0 || f != std::floor(f))
                        throw ParseError(lineno, 1, "factors must be positive integers");
                    raw.factors.push_back(static_cast<int>(f));
                }
            } else if (key == "initial") {
                raw.initial_line = value;
                raw.initial_lineno = lineno;
            } else if (key == "order") {
                raw.order = value;
                raw.order_lineno = lineno;
            } else if (key == "measurement") {
                raw.measurement_line = value;
                raw.measurement_lineno = lineno;
            } else if (key == "weights") {
                raw.weights_line = value;
                raw.weights_lineno = lineno;
            } else if (key == "form") {
                raw.form_line = value;
                raw.form_lineno = lineno;
            } else if (key == "final_rotation") {
                raw.final_rotation_line = value;
                raw.final_rotation_lineno = lineno;
            } else if (key == "unrestricted") {
                raw.unrestricted = (value == "true" || value == "1");
            } else {
                throw ParseError(lineno, 1, "unknown key '" + key + "'");
            }
        } else {
            auto& ops = (section == 1) ? raw.ops_A : raw.ops_B;
            auto& pref = (section == 1) ? raw.pref_A : raw.pref_B;
            if (key == "ops") {
                ops = list_entries(value);
            } else if (key == "preference") {
                for (double v : parse_number_list(value, lineno)) {
                    if (v != std::floor(v))
                        throw ParseError(lineno, 1, "preference entries must be integers");
                    pref.push_back(static_cast<int>(v));
                }
            } else {
                throw ParseError(lineno, 1, "unknown player key '" + key + "'");
            }
        }
    }

    if (raw.factors.empty()) throw ParseError(1, 1, "missing 'factors'");
    if (raw.initial_line.empty()) throw ParseError(1, 1, "missing 'initial'");
    if (raw.ops_A.empty()) throw ParseError(1, 1, "missing ops for player A");
    if (raw.ops_B.empty()) throw ParseError(1, 1, "missing ops for player B");

    int dim = 1;
    for (int f : raw.factors) dim *= f;

    GameSpec g;
    g.initial_state = parse_initial(raw.initial_line, raw.initial_lineno, raw.factors);
    g.measurement = parse_measurement(raw.measurement_line, raw.measurement_lineno,
                                      raw.factors);
    g.ops_A = parse_ops(raw.ops_A, dim);
    g.ops_B = parse_ops(raw.ops_B, dim);
    if (raw.order == "A_first")
        g.order = Order::AFirst;
    else if (raw.order == "B_first")
        g.order = Order::BFirst;
    else if (raw.order == "simultaneous")
        g.order = Order::Simultaneous;
    else
        throw ParseError(raw.order_lineno, 1, "unknown order '" + raw.order + "'");
    g.pref_A = PreferenceRelation{raw.pref_A};
    g.pref_B = PreferenceRelation{raw.pref_B};
    if (!raw.weights_line.empty()) {
        g.weights = OutcomeWeights{parse_number_list(raw.weights_line, raw.weights_lineno)};
    } else {
        g.weights = OutcomeWeights::standard(g.measurement.size());
    }
    g.unrestricted_sets = raw.unrestricted;
    if (!raw.final_rotation_line.empty()) {
        Lexer lex(raw.final_rotation_line, raw.final_rotation_lineno);
        Token t = lex.take();
        if (t.kind != Token::Ident || t.text != "matrix")
            throw ParseError(raw.final_rotation_lineno, t.col,
                             "final_rotation expects matrix[[...]]");
        CMat m = parse_matrix_literal(lex);
        if (!is_unitary(m))
            throw ParseError(raw.final_rotation_lineno, t.col,
                             "final rotation is not unitary");
        g.final_rotation = make_unitary(std::move(m), "final");
    }
    try {
        validate_spec(g);
    } catch (const Error& err) {
        throw ParseError(1, 1, std::string("invalid spec: ") + err.what());
    }

    GameSpecDocument doc;
    doc.base = g;
    if (!raw.form_line.empty()) {
        Lexer lex(raw.form_line, raw.form_lineno);
        Token t = lex.take();
        if (t.kind != Token::Ident) throw ParseError(raw.form_lineno, t.col, "bad form");
        auto kind = form_from_name(t.text);
        if (!kind)
            throw ParseError(raw.form_lineno, t.col, "unknown form '" + t.text + "'");
        doc.form = *kind;
        UnitaryOperator t_op = op_id(dim);
        Token what = lex.take();
        if (what.kind == Token::Ident && what.text == "lambda") {
            double lam = parse_scalar(lex);
            if (dim != 4)
                throw ParseError(raw.form_lineno, what.col,
                                 "entangler(lambda) needs a 2-qubit game");
            doc.form_lambda = lam;
            t_op = entangler(lam);
        } else if (what.kind == Token::Ident && what.text == "matrix") {
            CMat m = parse_matrix_literal(lex);
            if (!is_unitary(m))
                throw ParseError(raw.form_lineno, what.col, "entangler is not unitary");
            if (m.dim != dim)
                throw ParseError(raw.form_lineno, what.col, "entangler dimension mismatch");
            t_op = make_unitary(std::move(m), "T");
        } else if (what.kind != Token::End) {
            throw ParseError(raw.form_lineno, what.col,
                             "expected 'lambda <expr>' or 'matrix[[...]]'");
        }
        doc.form_entangler = t_op;
        doc.spec = build_perspective(g, *kind, t_op);
    } else {
        doc.spec = g;
    }
    return doc;
}

// ---------------------------------------------------------------------------
// Rendering (round-trips through parse_spec_document).

namespace parse_detail {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt(cx v) {
    if (v.imag() == 0) return fmt(v.real());
    std::string s = fmt(v.real());
    s += (v.imag() < 0) ? " - " : " + ";
    s += fmt(std::abs(v.imag()));
    s += " i";
    return s;
}

inline std::string render_matrix(const CMat& m) {
    std::string out = "matrix[";
    for (int i = 0; i < m.dim; ++i) {
        out += (i ? ", [" : "[");
        for (int j = 0; j < m.dim; ++j) {
            if (j) out += ", ";
            out += fmt(m.at(i, j));
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace parse_detail

inline std::string render_spec(const GameSpec& g) {
    using parse_detail::fmt;
    std::string out = "factors =";
    for (int f : g.initial_state.factors) out += " " + std::to_string(f);
    out += "\ninitial = amps (";
    for (int k = 0; k < g.initial_state.dim(); ++k) {
        if (k) out += ", ";
        out += fmt(g.initial_state.amps[k]);
    }
    out += ")\norder = ";
    out += (g.order == Order::AFirst ? "A_first"
                                     : g.order == Order::BFirst ? "B_first" : "simultaneous");
    out += "\nmeasurement = vectors ";
    for (int k = 0; k < g.measurement.size(); ++k) {
        if (k) out += "; ";
        out += "(";
        const auto& e = g.measurement.eigenstates[k];
        for (int i = 0; i < e.dim(); ++i) {
            if (i) out += ", ";
            out += fmt(e.amps[i]);
        }
        out += ")";
    }
    out += "\nweights =";
    for (double w : g.weights.values) out += " " + fmt(w);
    if (g.final_rotation)
        out += "\nfinal_rotation = " + parse_detail::render_matrix(g.final_rotation->m);
    auto player = [&](const char* name, const std::vector<UnitaryOperator>& ops,
                      const PreferenceRelation& pref) {
        out += std::string("\n[player ") + name + "]\nops = ";
        for (size_t k = 0; k < ops.size(); ++k) {
            if (k) out += ", ";
            out += parse_detail::render_matrix(ops[k].m);
        }
        out += "\npreference =";
        for (int v : pref.ranking) out += " " + std::to_string(v);
    };
    player("A", g.ops_A, g.pref_A);
    player("B", g.ops_B, g.pref_B);
    out += "\n";
    return out;
}

}  // namespace qgame
