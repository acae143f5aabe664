// Dense complex linear algebra for small Hilbert spaces (dim <= 8):
// states, operators, tensor products, partial traces and entropies.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgame {

using cx = std::complex<double>;

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kStateEqTol = 1e-9;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Raw square complex matrix, row major.

struct CMat {
    int dim = 0;
    std::vector<cx> a;

    CMat() = default;
    explicit CMat(int d) : dim(d), a(static_cast<size_t>(d) * d) {}

    cx& at(int i, int j) { return a[static_cast<size_t>(i) * dim + j]; }
    const cx& at(int i, int j) const { return a[static_cast<size_t>(i) * dim + j]; }

    static CMat identity(int d) {
        CMat m(d);
        for (int i = 0; i < d; ++i) m.at(i, i) = 1.0;
        return m;
    }
};

inline CMat mul(const CMat& x, const CMat& y) {
    if (x.dim != y.dim) throw Error("matrix dimension mismatch in mul");
    CMat r(x.dim);
    for (int i = 0; i < x.dim; ++i)
        for (int k = 0; k < x.dim; ++k) {
            cx v = x.at(i, k);
            if (v == cx{}) continue;
            for (int j = 0; j < x.dim; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

inline CMat dagger(const CMat& x) {
    CMat r(x.dim);
    for (int i = 0; i < x.dim; ++i)
        for (int j = 0; j < x.dim; ++j) r.at(i, j) = std::conj(x.at(j, i));
    return r;
}

inline CMat add(const CMat& x, const CMat& y, cx sy = 1.0) {
    if (x.dim != y.dim) throw Error("matrix dimension mismatch in add");
    CMat r = x;
    for (size_t k = 0; k < r.a.size(); ++k) r.a[k] += sy * y.a[k];
    return r;
}

inline CMat scale(const CMat& x, cx s) {
    CMat r = x;
    for (auto& v : r.a) v *= s;
    return r;
}

inline double fro_norm(const CMat& x) {
    double s = 0;
    for (const auto& v : x.a) s += std::norm(v);
    return std::sqrt(s);
}

inline CMat kron(const CMat& x, const CMat& y) {
    CMat r(x.dim * y.dim);
    for (int i = 0; i < x.dim; ++i)
        for (int j = 0; j < x.dim; ++j)
            for (int k = 0; k < y.dim; ++k)
                for (int l = 0; l < y.dim; ++l)
                    r.at(i * y.dim + k, j * y.dim + l) = x.at(i, j) * y.at(k, l);
    return r;
}

inline cx trace(const CMat& x) {
    cx t = 0;
    for (int i = 0; i < x.dim; ++i) t += x.at(i, i);
    return t;
}

inline bool is_unitary(const CMat& x, double tol = kUnitaryTol) {
    CMat p = mul(dagger(x), x);
    for (int i = 0; i < p.dim; ++i) p.at(i, i) -= 1.0;
    return fro_norm(p) <= tol;
}

inline bool is_hermitian(const CMat& x, double tol = kUnitaryTol) {
    double s = 0;
    for (int i = 0; i < x.dim; ++i)
        for (int j = 0; j < x.dim; ++j) s += std::norm(x.at(i, j) - std::conj(x.at(j, i)));
    return std::sqrt(s) <= tol;
}

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition by cyclic Jacobi with phase pre-rotation.
// Dims here never exceed 8, so convergence is immediate in practice.

struct EigResult {
    std::vector<double> values;  // ascending
    CMat vectors;                // columns are eigenvectors
};

inline EigResult hermitian_eig(const CMat& h_in) {
    if (!is_hermitian(h_in, 1e-8)) throw Error("hermitian_eig: matrix is not Hermitian");
    const int n = h_in.dim;
    CMat h = h_in;
    CMat v = CMat::identity(n);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(h.at(p, q));
        if (std::sqrt(off) < 1e-14) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                cx hpq = h.at(p, q);
                double r = std::abs(hpq);
                if (r < 1e-18) continue;
                cx phase = hpq / r;  // h(p,q) = r * phase
                double app = h.at(p, p).real();
                double aqq = h.at(q, q).real();
                double theta = 0.5 * std::atan2(2.0 * r, app - aqq);
                double c = std::cos(theta), s = std::sin(theta);
                // Unitary acting on columns (p,q):
                //   col_p' =  c*col_p + s*conj(phase)... expressed via entries below.
                cx upp = c, upq = -s * phase;
                cx uqp = s * std::conj(phase), uqq = c;
                // h <- U^dagger h U ; apply on the right to rows, left to columns.
                for (int i = 0; i < n; ++i) {
                    cx hip = h.at(i, p), hiq = h.at(i, q);
                    h.at(i, p) = hip * upp + hiq * uqp;
                    h.at(i, q) = hip * upq + hiq * uqq;
                }
                for (int j = 0; j < n; ++j) {
                    cx hpj = h.at(p, j), hqj = h.at(q, j);
                    h.at(p, j) = std::conj(upp) * hpj + std::conj(uqp) * hqj;
                    h.at(q, j) = std::conj(upq) * hpj + std::conj(uqq) * hqj;
                }
                for (int i = 0; i < n; ++i) {
                    cx vip = v.at(i, p), viq = v.at(i, q);
                    v.at(i, p) = vip * upp + viq * uqp;
                    v.at(i, q) = vip * upq + viq * uqq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return h.at(i, i).real() < h.at(j, j).real(); });
    EigResult res;
    res.values.resize(n);
    res.vectors = CMat(n);
    for (int k = 0; k < n; ++k) {
        res.values[k] = h.at(order[k], order[k]).real();
        for (int i = 0; i < n; ++i) res.vectors.at(i, k) = v.at(i, order[k]);
    }
    return res;
}

// exp(scale * G) for Hermitian G, via eigendecomposition. Exact for the Pauli
// generators used by the gate grammar.
inline CMat expm_hermitian(const CMat& g, cx scale) {
    EigResult e = hermitian_eig(g);
    CMat r(g.dim);
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j) {
            cx s = 0;
            for (int k = 0; k < g.dim; ++k)
                s += e.vectors.at(i, k) * std::exp(scale * e.values[k]) *
                     std::conj(e.vectors.at(j, k));
            r.at(i, j) = s;
        }
    return r;
}

// ---------------------------------------------------------------------------
// Domain types.

struct StateVector {
    std::vector<cx> amps;
    std::vector<int> factors;  // tensor factorization, product == dim

    int dim() const { return static_cast<int>(amps.size()); }
};

struct UnitaryOperator {
    CMat m;
    std::string label;

    int dim() const { return m.dim; }
};

struct DensityMatrix {
    CMat m;

    int dim() const { return m.dim; }
};

inline double norm_of(const StateVector& s) {
    double n = 0;
    for (const auto& a : s.amps) n += std::norm(a);
    return std::sqrt(n);
}

inline void validate_state(const StateVector& s) {
    if (s.amps.empty()) throw Error("state: empty amplitude vector");
    long long prod = 1;
    for (int f : s.factors) {
        if (f <= 0) throw Error("state: non-positive tensor factor");
        prod *= f;
    }
    if (prod != s.dim()) throw Error("state: factor product does not match dimension");
    for (const auto& a : s.amps)
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw Error("state: non-finite amplitude");
    if (std::abs(norm_of(s) - 1.0) > kNormTol) throw Error("state: not normalized");
}

inline StateVector make_state(std::vector<cx> amps, std::vector<int> factors) {
    StateVector s{std::move(amps), std::move(factors)};
    validate_state(s);
    return s;
}

inline void validate_unitary(const UnitaryOperator& u) {
    if (u.dim() <= 0) throw Error("unitary: empty matrix");
    if (!is_unitary(u.m)) throw Error("unitary: U^dagger U != I (label '" + u.label + "')");
}

inline UnitaryOperator make_unitary(CMat m, std::string label = {}) {
    UnitaryOperator u{std::move(m), std::move(label)};
    validate_unitary(u);
    return u;
}

inline void validate_density(const DensityMatrix& rho) {
    if (!is_hermitian(rho.m)) throw Error("density: not Hermitian");
    if (std::abs(trace(rho.m) - cx{1.0}) > kUnitaryTol) throw Error("density: trace != 1");
    for (double ev : hermitian_eig(rho.m).values)
        if (ev < -kUnitaryTol) throw Error("density: negative eigenvalue");
}

// ---------------------------------------------------------------------------
// Operations.

inline StateVector tensor(const StateVector& a, const StateVector& b) {
    StateVector r;
    r.amps.resize(static_cast<size_t>(a.dim()) * b.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            r.amps[static_cast<size_t>(i) * b.dim() + j] = a.amps[i] * b.amps[j];
    r.factors = a.factors;
    r.factors.insert(r.factors.end(), b.factors.begin(), b.factors.end());
    return r;
}

inline UnitaryOperator tensor(const UnitaryOperator& a, const UnitaryOperator& b) {
    std::string label;
    if (!a.label.empty() || !b.label.empty())
        label = a.label + " kron " + b.label;
    return UnitaryOperator{kron(a.m, b.m), std::move(label)};
}

inline StateVector apply(const UnitaryOperator& u, const StateVector& s) {
    if (u.dim() != s.dim())
        throw Error("apply: operator dim " + std::to_string(u.dim()) +
                    " != state dim " + std::to_string(s.dim()));
    StateVector r;
    r.factors = s.factors;
    r.amps.assign(s.amps.size(), cx{});
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < u.dim(); ++j) r.amps[i] += u.m.at(i, j) * s.amps[j];
    return r;
}

inline cx inner(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw Error("inner: dimension mismatch");
    cx s = 0;
    for (int i = 0; i < a.dim(); ++i) s += std::conj(a.amps[i]) * b.amps[i];
    return s;
}

// |<a|b>|: global-phase-blind state overlap.
inline double fidelity(const StateVector& a, const StateVector& b) {
    return std::abs(inner(a, b));
}

inline bool states_equal_up_to_phase(const StateVector& a, const StateVector& b,
                                     double tol = kStateEqTol) {
    return fidelity(a, b) >= 1.0 - tol;
}

inline double commutator_norm(const UnitaryOperator& a, const UnitaryOperator& b) {
    if (a.dim() != b.dim()) throw Error("commutator_norm: dimension mismatch");
    return fro_norm(add(mul(a.m, b.m), mul(b.m, a.m), -1.0));
}

inline DensityMatrix reduced_density(const StateVector& s, int keep) {
    if (s.factors.size() < 2) throw Error("reduced_density: state has fewer than 2 factors");
    if (keep < 0 || keep >= static_cast<int>(s.factors.size()))
        throw Error("reduced_density: invalid factor index");
    const int nf = static_cast<int>(s.factors.size());
    const int dk = s.factors[keep];

    // stride of factor f in the flattened index
    std::vector<long long> stride(nf, 1);
    for (int f = nf - 2; f >= 0; --f) stride[f] = stride[f + 1] * s.factors[f + 1];

    long long rest = 1;
    for (int f = 0; f < nf; ++f)
        if (f != keep) rest *= s.factors[f];

    DensityMatrix rho;
    rho.m = CMat(dk);
    for (long long o = 0; o < rest; ++o) {
        // decode o into the traced-out factor indices
        long long base = 0, rem = o;
        for (int f = nf - 1; f >= 0; --f) {
            if (f == keep) continue;
            base += (rem % s.factors[f]) * stride[f];
            rem /= s.factors[f];
        }
        for (int i = 0; i < dk; ++i)
            for (int j = 0; j < dk; ++j)
                rho.m.at(i, j) += s.amps[base + i * stride[keep]] *
                                  std::conj(s.amps[base + j * stride[keep]]);
    }
    return rho;
}

inline double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0;
    for (double ev : hermitian_eig(rho.m).values) {
        if (ev > 1e-15) s -= ev * std::log(ev);
    }
    return std::max(s, 0.0);
}

// ---------------------------------------------------------------------------
// Common gates and states.

inline CMat pauli_x() {
    CMat m(2);
    m.at(0, 1) = 1.0;
    m.at(1, 0) = 1.0;
    return m;
}
inline CMat pauli_y() {
    CMat m(2);
    m.at(0, 1) = cx{0, -1};
    m.at(1, 0) = cx{0, 1};
    return m;
}
inline CMat pauli_z() {
    CMat m(2);
    m.at(0, 0) = 1.0;
    m.at(1, 1) = -1.0;
    return m;
}
inline CMat hadamard() {
    CMat m(2);
    const double r = 1.0 / std::sqrt(2.0);
    m.at(0, 0) = r;
    m.at(0, 1) = r;
    m.at(1, 0) = r;
    m.at(1, 1) = -r;
    return m;
}

// exp(i (pi/2) sigma_x) == i sigma_x, the spin flip.
inline CMat flip_gate() { return scale(pauli_x(), cx{0, 1}); }

inline CMat rot_x(double t) { return expm_hermitian(pauli_x(), cx{0, -t / 2}); }
inline CMat rot_y(double t) { return expm_hermitian(pauli_y(), cx{0, -t / 2}); }
inline CMat rot_z(double t) { return expm_hermitian(pauli_z(), cx{0, -t / 2}); }

inline StateVector basis_state(int dim, int k, std::vector<int> factors) {
    std::vector<cx> a(dim);
    a[k] = 1.0;
    return make_state(std::move(a), std::move(factors));
}

// cos(t/2) e^{i phi/2} |0> - sin(t/2) e^{-i phi/2} |1>
inline StateVector rotated_qubit(double theta, double phi) {
    cx c = std::cos(theta / 2) * std::exp(cx{0, phi / 2});
    cx s = std::sin(theta / 2) * std::exp(cx{0, -phi / 2});
    return make_state({c, -s}, {2});
}

}  // namespace qgame
