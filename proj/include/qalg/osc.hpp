#pragma once

#include "qalg/nummatrix.hpp"
#include "qalg/qseries.hpp"
#include "qalg/report.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

namespace qalg {

// ---------------------------------------------------------------------------
// Truncated Fock realizations. All relation checks are restricted to interior
// states (mode indices <= d-2), where the truncated ladder action is exact;
// the boundary state is never asserted.
// ---------------------------------------------------------------------------
struct FockOps {
    int d = 0;
    double q = 1.0;
    NumMatrix a, adag, n;
};

inline FockOps boson_fock(int d) {
    if (d < 2) throw config_error("boson_fock: dimension must be at least 2");
    FockOps f;
    f.d = d;
    f.q = 1.0;
    f.a = NumMatrix(d, d);
    f.n = NumMatrix(d, d);
    for (int k = 1; k < d; ++k) f.a(k - 1, k) = std::sqrt(double(k));
    for (int k = 0; k < d; ++k) f.n(k, k) = double(k);
    f.adag = f.a.dagger();
    return f;
}

inline FockOps q_fock(int d, double q) {
    if (d < 2) throw config_error("q_fock: dimension must be at least 2");
    if (!(q > 0.0)) throw domain_error("q_fock: q must be positive");
    FockOps f;
    f.d = d;
    f.q = q;
    f.a = NumMatrix(d, d);
    f.n = NumMatrix(d, d);
    for (int k = 1; k < d; ++k) f.a(k - 1, k) = std::sqrt(q_int_sym_num(q, k));
    for (int k = 0; k < d; ++k) f.n(k, k) = double(k);
    f.adag = f.a.dagger();
    return f;
}

/// Eigenvalues of a real-symmetric matrix by cyclic Jacobi sweeps, ascending.
inline std::vector<double> symmetric_eigenvalues(const NumMatrix& m) {
    const int n = m.rows();
    std::vector<double> a(size_t(n) * size_t(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[size_t(i) * size_t(n) + size_t(j)] = m(i, j).real();
    auto at = [&](int i, int j) -> double& { return a[size_t(i) * size_t(n) + size_t(j)]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-26) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(at(p, q)) < 1e-300) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eig(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) eig[size_t(i)] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

/// Eigenvalues of (a a† + a† a)/2 on the interior span; the classical case
/// gives k + 1/2, the deformed one ([[k]] + [[k+1]])/2.
inline std::vector<double> hamiltonian_spectrum(const FockOps& f) {
    NumMatrix h = f.a * f.adag + f.adag * f.a;
    const int m = f.d - 1;
    NumMatrix interior(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) interior(i, j) = 0.5 * h(i, j);
    return symmetric_eigenvalues(interior);
}

// ---------------------------------------------------------------------------
// Jordan-Schwinger construction on the two-mode space.
// ---------------------------------------------------------------------------
struct JordanSchwinger {
    int d = 0;
    double q = 1.0;
    NumMatrix J0, Jp, Jm;
    std::vector<int> interior;  // two-mode basis states with both indices <= d-2
};

inline JordanSchwinger jordan_schwinger(int d, double q) {
    const FockOps f = (q == 1.0) ? boson_fock(d) : q_fock(d, q);
    const NumMatrix ident = NumMatrix::identity(d);
    JordanSchwinger js;
    js.d = d;
    js.q = q;
    js.J0 = 0.5 * (NumMatrix::kron(f.n, ident) - NumMatrix::kron(ident, f.n));
    js.Jp = NumMatrix::kron(f.adag, f.a);
    js.Jm = NumMatrix::kron(f.a, f.adag);
    for (int k1 = 0; k1 <= d - 2; ++k1)
        for (int k2 = 0; k2 <= d - 2; ++k2) js.interior.push_back(k1 * d + k2);
    return js;
}

/// diag([[2 J0]]_q) on the two-mode basis (J0 is diagonal with half-integer
/// entries, so 2 J0 has integer spectrum).
inline NumMatrix sym_qint_of_2j0(const NumMatrix& j0, double q) {
    NumMatrix m(j0.rows(), j0.cols());
    for (int k = 0; k < j0.rows(); ++k) {
        int twice = static_cast<int>(std::lround(2.0 * j0(k, k).real()));
        m(k, k) = q_int_sym_num(q, twice);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Named oscillator checks.
// ---------------------------------------------------------------------------

inline CheckReport check_boson_ccr(int d) {
    const std::string name = "boson-ccr";
    const FockOps f = boson_fock(d);
    std::vector<int> interior;
    for (int k = 0; k <= d - 2; ++k) interior.push_back(k);
    const NumMatrix ident = NumMatrix::identity(d);
    double r1 = (f.a * f.adag - f.adag * f.a - ident).max_abs_on_columns(interior);
    double r2 = (f.n * f.adag - f.adag * f.n - f.adag).max_abs_on_columns(interior);
    double residual = std::max(r1, r2);
    if (residual >= 1e-12)
        return CheckReport::failed(name, CheckMode::numeric,
                                   "canonical relations fail on the interior span", residual);
    return CheckReport::pass_numeric(name, residual);
}

inline CheckReport check_qboson_relations(int d, double q) {
    const std::string name = "qboson-relations";
    const FockOps f = q_fock(d, q);
    std::vector<int> interior;
    for (int k = 0; k <= d - 2; ++k) interior.push_back(k);
    NumMatrix qpow_minus_n(d, d);
    for (int k = 0; k < d; ++k) qpow_minus_n(k, k) = std::pow(q, -double(k));
    double r1 = (f.a * f.adag - q * (f.adag * f.a) - qpow_minus_n).max_abs_on_columns(interior);
    double r2 = (f.n * f.adag - f.adag * f.n - f.adag).max_abs_on_columns(interior);
    double residual = std::max(r1, r2);
    if (residual >= 1e-9)
        return CheckReport::failed(name, CheckMode::numeric,
                                   "deformed ladder relations fail on the interior span",
                                   residual);
    return CheckReport::pass_numeric(name, residual);
}

inline CheckReport check_js_su2(int d) {
    const std::string name = "js-su2";
    const JordanSchwinger js = jordan_schwinger(d, 1.0);
    double r1 = (js.Jp * js.Jm - js.Jm * js.Jp - 2.0 * js.J0).max_abs_on_columns(js.interior);
    double r2 = (js.J0 * js.Jp - js.Jp * js.J0 - js.Jp).max_abs_on_columns(js.interior);
    double r3 = (js.J0 * js.Jm - js.Jm * js.J0 + js.Jm).max_abs_on_columns(js.interior);
    double hermit = (js.Jp.dagger() - js.Jm).max_abs();
    double residual = std::max({r1, r2, r3});
    if (residual >= 1e-9 || hermit >= 1e-12)
        return CheckReport::failed(name, CheckMode::numeric, "angular-momentum relations fail",
                                   std::max(residual, hermit));
    return CheckReport::pass_numeric(name, std::max(residual, hermit));
}

inline CheckReport check_js_suq2(int d, double q) {
    const std::string name = "js-suq2";
    const JordanSchwinger js = jordan_schwinger(d, q);
    double r1 = (js.Jp * js.Jm - js.Jm * js.Jp - sym_qint_of_2j0(js.J0, q))
                    .max_abs_on_columns(js.interior);
    double r2 = (js.J0 * js.Jp - js.Jp * js.J0 - js.Jp).max_abs_on_columns(js.interior);
    double r3 = (js.J0 * js.Jm - js.Jm * js.J0 + js.Jm).max_abs_on_columns(js.interior);
    double hermit = (js.Jp.dagger() - js.Jm).max_abs();
    double residual = std::max({r1, r2, r3});
    if (residual >= 1e-9 || hermit >= 1e-12)
        return CheckReport::failed(name, CheckMode::numeric, "q-rotator relations fail",
                                   std::max(residual, hermit));
    return CheckReport::pass_numeric(name, std::max(residual, hermit));
}

// ---------------------------------------------------------------------------
// Addition rules on the tensor square. The operators there have at most a
// few entries per row, so this check runs sparsely and handles d = 12
// (dimension 20736) without dense products.
// ---------------------------------------------------------------------------
namespace detail {

struct Sparse {
    int n = 0;
    std::vector<std::vector<std::pair<int, std::complex<double>>>> rows;

    static Sparse from_dense(const NumMatrix& m) {
        Sparse s;
        s.n = m.rows();
        s.rows.resize(size_t(s.n));
        for (int i = 0; i < s.n; ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (m(i, j) != std::complex<double>(0.0, 0.0)) s.rows[size_t(i)].push_back({j, m(i, j)});
        return s;
    }
    static Sparse diag(const std::vector<std::complex<double>>& d) {
        Sparse s;
        s.n = static_cast<int>(d.size());
        s.rows.resize(d.size());
        for (int i = 0; i < s.n; ++i)
            if (d[size_t(i)] != std::complex<double>(0.0, 0.0)) s.rows[size_t(i)].push_back({i, d[size_t(i)]});
        return s;
    }
    static Sparse kron(const Sparse& a, const Sparse& b) {
        Sparse s;
        s.n = a.n * b.n;
        s.rows.resize(size_t(s.n));
        for (int i = 0; i < a.n; ++i)
            for (const auto& [j, v] : a.rows[size_t(i)])
                for (int k = 0; k < b.n; ++k)
                    for (const auto& [l, w] : b.rows[size_t(k)])
                        s.rows[size_t(i) * size_t(b.n) + size_t(k)].push_back(
                            {j * b.n + l, v * w});
        return s;
    }
    friend Sparse operator*(const Sparse& a, const Sparse& b) {
        Sparse s;
        s.n = a.n;
        s.rows.resize(size_t(s.n));
        std::vector<std::complex<double>> acc(static_cast<size_t>(b.n));
        std::vector<int> touched;
        for (int i = 0; i < a.n; ++i) {
            touched.clear();
            for (const auto& [k, v] : a.rows[size_t(i)])
                for (const auto& [j, w] : b.rows[size_t(k)]) {
                    if (acc[size_t(j)] == std::complex<double>(0.0, 0.0)) touched.push_back(j);
                    acc[size_t(j)] += v * w;
                }
            for (int j : touched) {
                s.rows[size_t(i)].push_back({j, acc[size_t(j)]});
                acc[size_t(j)] = 0.0;
            }
        }
        return s;
    }
    static Sparse combine(const Sparse& a, const Sparse& b, double sign) {
        Sparse s;
        s.n = a.n;
        s.rows.resize(size_t(s.n));
        std::vector<std::complex<double>> acc(static_cast<size_t>(a.n));
        std::vector<int> touched;
        for (int i = 0; i < a.n; ++i) {
            touched.clear();
            for (const auto& [j, v] : a.rows[size_t(i)]) {
                if (acc[size_t(j)] == std::complex<double>(0.0, 0.0)) touched.push_back(j);
                acc[size_t(j)] += v;
            }
            for (const auto& [j, v] : b.rows[size_t(i)]) {
                if (acc[size_t(j)] == std::complex<double>(0.0, 0.0)) touched.push_back(j);
                acc[size_t(j)] += sign * v;
            }
            for (int j : touched) {
                if (acc[size_t(j)] != std::complex<double>(0.0, 0.0))
                    s.rows[size_t(i)].push_back({j, acc[size_t(j)]});
                acc[size_t(j)] = 0.0;
            }
        }
        return s;
    }
    friend Sparse operator-(const Sparse& a, const Sparse& b) { return combine(a, b, -1.0); }
    friend Sparse operator+(const Sparse& a, const Sparse& b) { return combine(a, b, 1.0); }
    double max_abs_on_columns(const std::vector<char>& col_mask) const {
        double m = 0.0;
        for (const auto& row : rows)
            for (const auto& [j, v] : row)
                if (col_mask[size_t(j)]) m = std::max(m, std::abs(v));
        return m;
    }
    double max_abs() const {
        double m = 0.0;
        for (const auto& row : rows)
            for (const auto& [j, v] : row) m = std::max(m, std::abs(v));
        return m;
    }
};

/// The three assembled addition-rule operators on the tensor square of the
/// two-mode space, plus the interior column mask and the diagonal of J0 sums.
struct AdditionOps {
    Sparse dj0, djp, djm;
    std::vector<char> interior_mask;
    std::vector<double> weight;  // J0 diagonal on one two-mode factor
    int n2 = 0;
};

inline AdditionOps build_addition_ops(int d, double q, bool plus_variant) {
    const JordanSchwinger js = jordan_schwinger(d, q);
    const int n2 = js.J0.rows();
    AdditionOps ops;
    ops.n2 = n2;
    ops.weight.resize(size_t(n2));
    std::vector<std::complex<double>> qj0(static_cast<size_t>(n2)), qj0i(static_cast<size_t>(n2)), ones(static_cast<size_t>(n2), 1.0);
    for (int k = 0; k < n2; ++k) {
        double w = js.J0(k, k).real();
        ops.weight[size_t(k)] = w;
        qj0[size_t(k)] = std::pow(q, w);
        qj0i[size_t(k)] = std::pow(q, -w);
    }
    const Sparse ident = Sparse::diag(ones);
    const Sparse j0 = Sparse::from_dense(js.J0);
    const Sparse jp = Sparse::from_dense(js.Jp);
    const Sparse jm = Sparse::from_dense(js.Jm);
    const Sparse kq = Sparse::diag(plus_variant ? qj0 : qj0i);
    const Sparse kqi = Sparse::diag(plus_variant ? qj0i : qj0);
    ops.dj0 = Sparse::kron(j0, ident) + Sparse::kron(ident, j0);
    ops.djp = Sparse::kron(jp, kq) + Sparse::kron(kqi, jp);
    ops.djm = Sparse::kron(jm, kq) + Sparse::kron(kqi, jm);
    ops.interior_mask.assign(size_t(n2) * size_t(n2), 0);
    for (int x : js.interior)
        for (int y : js.interior) ops.interior_mask[size_t(x) * size_t(n2) + size_t(y)] = 1;
    return ops;
}

}  // namespace detail

/// Addition rule for the deformed angular momenta on the tensor square of
/// the two-mode space: J0 adds plainly, the ladder operators add with
/// q^{+-J0} dressings. The deformed relations are verified on interior
/// states for the chosen dressing variant.
inline CheckReport check_addition_rules(int d, double q, bool plus_variant) {
    const std::string name = plus_variant ? "addition-q" : "addition-qinv";
    using detail::Sparse;
    const auto ops = detail::build_addition_ops(d, q, plus_variant);
    const int n2 = ops.n2;

    // [[2 dj0]]_q is diagonal since dj0 is
    std::vector<std::complex<double>> sym(size_t(n2) * size_t(n2));
    for (int x = 0; x < n2; ++x)
        for (int y = 0; y < n2; ++y) {
            int twice =
                static_cast<int>(std::lround(2.0 * (ops.weight[size_t(x)] + ops.weight[size_t(y)])));
            sym[size_t(x) * size_t(n2) + size_t(y)] = q_int_sym_num(q, twice);
        }
    // The entries being cancelled grow like [[2 w_max]]_q, far beyond unity
    // for strong deformation at this size, so each relation's residual is
    // taken relative to the magnitude of its own terms.
    const Sparse pm = ops.djp * ops.djm, mp = ops.djm * ops.djp;
    const Sparse zp = ops.dj0 * ops.djp, pz = ops.djp * ops.dj0;
    const Sparse zm = ops.dj0 * ops.djm, mz = ops.djm * ops.dj0;
    const Sparse symd = Sparse::diag(sym);
    auto interior = [&](const Sparse& m) { return m.max_abs_on_columns(ops.interior_mask); };
    double s1 = std::max({1.0, interior(pm), interior(mp), interior(symd)});
    double s2 = std::max({1.0, interior(zp), interior(pz), interior(ops.djp)});
    double s3 = std::max({1.0, interior(zm), interior(mz), interior(ops.djm)});
    double residual = std::max({interior((pm - mp) - symd) / s1,
                                interior((zp - pz) - ops.djp) / s2,
                                interior((zm - mz) + ops.djm) / s3});
    if (residual >= 1e-9)
        return CheckReport::failed(name, CheckMode::numeric, "addition rule fails", residual);
    return CheckReport::pass_numeric(name, residual);
}

/// Entrywise gap between the two dressing variants (zero at q = 1, where a
/// single undeformed addition rule remains).
inline double addition_variants_gap(int d, double q) {
    const auto plus = detail::build_addition_ops(d, q, true);
    const auto minus = detail::build_addition_ops(d, q, false);
    return std::max((plus.djp - minus.djp).max_abs(), (plus.djm - minus.djm).max_abs());
}

// ---------------------------------------------------------------------------
// Clock and shift: the periodic-grid realization of the noncommuting pair,
// exact at roots of unity.
// ---------------------------------------------------------------------------
inline CheckReport clock_shift_check(int big_n, int m) {
    const std::string name = "clock-shift";
    if (big_n < 2)
        return CheckReport::errored(name, CheckMode::numeric, "grid size must be at least 2");
    const double theta = 2.0 * std::numbers::pi * double(m) / double(big_n);
    const std::complex<double> phase(std::cos(theta), std::sin(theta));
    NumMatrix shift(big_n, big_n), clock(big_n, big_n);
    for (int k = 0; k < big_n; ++k) {
        shift(k, (k + 1) % big_n) = 1.0;
        clock(k, k) = std::pow(phase, k);
    }
    double residual = (shift * clock - phase * (clock * shift)).max_abs();
    if (residual >= 1e-12)
        return CheckReport::failed(name, CheckMode::numeric,
                                   "shift and clock do not q-commute", residual);
    return CheckReport::pass_numeric(name, residual);
}

}  // namespace qalg
