#pragma once

#include "qalg/ncpoly.hpp"
#include "qalg/nummatrix.hpp"
#include "qalg/presentations.hpp"
#include "qalg/qseries.hpp"
#include "qalg/report.hpp"

#include <json.hpp>

#include <cassert>
#include <optional>
#include <string>
#include <vector>

namespace qalg {

// ---------------------------------------------------------------------------
// RepMatrix: dense matrix over the exact coefficient field.
// ---------------------------------------------------------------------------
class RepMatrix {
public:
    RepMatrix() : rows_(0), cols_(0) {}
    RepMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * size_t(cols)) {}

    static RepMatrix identity(int n) {
        RepMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = QScalar::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    QScalar& operator()(int i, int j) { return e_[size_t(i) * size_t(cols_) + size_t(j)]; }
    const QScalar& operator()(int i, int j) const {
        return e_[size_t(i) * size_t(cols_) + size_t(j)];
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_rho_free() const {
        for (const auto& x : e_)
            if (!x.is_rho_free()) return false;
        return true;
    }

    friend bool operator==(const RepMatrix& a, const RepMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const RepMatrix& a, const RepMatrix& b) { return !(a == b); }

    RepMatrix operator-() const {
        RepMatrix r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }
    friend RepMatrix operator+(const RepMatrix& a, const RepMatrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        RepMatrix r = a;
        for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
        return r;
    }
    friend RepMatrix operator-(const RepMatrix& a, const RepMatrix& b) { return a + (-b); }
    friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
        assert(a.cols_ == b.rows_);
        RepMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const QScalar& v = a(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (b(k, j).is_zero()) continue;
                    r(i, j) += v * b(k, j);
                }
            }
        return r;
    }
    friend RepMatrix operator*(const QScalar& c, const RepMatrix& m) {
        RepMatrix r = m;
        for (auto& x : r.e_) x = c * x;
        return r;
    }

    /// Exact inverse by Gauss-Jordan elimination over the field.
    RepMatrix inverse() const {
        if (rows_ != cols_) throw config_error("RepMatrix: inverse of a non-square matrix");
        RepMatrix a = *this, inv = identity(rows_);
        for (int col = 0; col < cols_; ++col) {
            int pivot = -1;
            for (int i = col; i < rows_; ++i)
                if (!a(i, col).is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) throw domain_error("RepMatrix: singular matrix");
            if (pivot != col)
                for (int j = 0; j < cols_; ++j) {
                    std::swap(a(pivot, j), a(col, j));
                    std::swap(inv(pivot, j), inv(col, j));
                }
            QScalar pi = a(col, col).inverse();
            for (int j = 0; j < cols_; ++j) {
                a(col, j) = pi * a(col, j);
                inv(col, j) = pi * inv(col, j);
            }
            for (int i = 0; i < rows_; ++i) {
                if (i == col || a(i, col).is_zero()) continue;
                QScalar f = a(i, col);
                for (int j = 0; j < cols_; ++j) {
                    a(i, j) -= f * a(col, j);
                    inv(i, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    NumMatrix eval(const QValue& q) const {
        NumMatrix m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(q);
        return m;
    }

    /// "(i,j): value" for the first nonzero entry; empty string if none.
    std::string first_nonzero() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero())
                    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           "): " + (*this)(i, j).to_string();
        return {};
    }

private:
    int rows_, cols_;
    std::vector<QScalar> e_;
};

inline RepMatrix kron(const RepMatrix& a, const RepMatrix& b) {
    RepMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const QScalar& v = a(i, j);
            if (v.is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    if (b(k, l).is_zero()) continue;
                    r(i * b.rows() + k, j * b.cols() + l) = v * b(k, l);
                }
        }
    return r;
}

/// Place a two-factor operator at tensor positions (slot_a, slot_b) of the
/// product space with the given factor dimensions, identity elsewhere.
/// Slots are 0-based and slot_a < slot_b; m acts on dims[slot_a] x dims[slot_b].
inline RepMatrix embed(const RepMatrix& m, int slot_a, int slot_b,
                       const std::vector<int>& dims) {
    const int n = static_cast<int>(dims.size());
    if (slot_a < 0 || slot_b <= slot_a || slot_b >= n)
        throw config_error("embed: bad slot positions");
    const int da = dims[size_t(slot_a)], db = dims[size_t(slot_b)];
    if (m.rows() != da * db || m.cols() != da * db)
        throw config_error("embed: operator dimension does not match the named slots");
    int total = 1;
    for (int d : dims) total *= d;
    std::vector<int> stride(size_t(n), 1);
    for (int k = n - 2; k >= 0; --k) stride[size_t(k)] = stride[size_t(k) + 1] * dims[size_t(k) + 1];
    RepMatrix r(total, total);
    std::vector<int> idx(static_cast<size_t>(n), 0);
    for (int I = 0; I < total; ++I) {
        int rem = I;
        for (int k = 0; k < n; ++k) {
            idx[size_t(k)] = rem / stride[size_t(k)];
            rem %= stride[size_t(k)];
        }
        const int ia = idx[size_t(slot_a)], ib = idx[size_t(slot_b)];
        const int base = I - ia * stride[size_t(slot_a)] - ib * stride[size_t(slot_b)];
        for (int ja = 0; ja < da; ++ja)
            for (int jb = 0; jb < db; ++jb) {
                const QScalar& v = m(ia * db + ib, ja * db + jb);
                if (v.is_zero()) continue;
                const int J = base + ja * stride[size_t(slot_a)] + jb * stride[size_t(slot_b)];
                r(I, J) = v;
            }
    }
    return r;
}

// ---------------------------------------------------------------------------
// NCMatrix: matrix with noncommutative-polynomial entries, kept normal-formed
// in an ambient presentation.
// ---------------------------------------------------------------------------
class NCMatrix {
public:
    NCMatrix(int rows, int cols, const Presentation& ambient)
        : rows_(rows), cols_(cols), e_(size_t(rows) * size_t(cols)), ambient_(&ambient) {}

    static NCMatrix identity(int n, const Presentation& ambient) {
        NCMatrix m(n, n, ambient);
        for (int i = 0; i < n; ++i) m.e_[size_t(i) * size_t(n) + size_t(i)] = NCPoly::unit();
        return m;
    }
    /// Lift a scalar matrix to constant polynomial entries.
    static NCMatrix from_scalars(const RepMatrix& m, const Presentation& ambient) {
        NCMatrix r(m.rows(), m.cols(), ambient);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!m(i, j).is_zero())
                    r.e_[size_t(i) * size_t(m.cols()) + size_t(j)] = NCPoly::constant(m(i, j));
        return r;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Presentation& ambient() const { return *ambient_; }

    const NCPoly& operator()(int i, int j) const {
        return e_[size_t(i) * size_t(cols_) + size_t(j)];
    }
    void set(int i, int j, const NCPoly& p) {
        e_[size_t(i) * size_t(cols_) + size_t(j)] = normal_form(p, *ambient_);
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const NCMatrix& a, const NCMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    friend NCMatrix operator+(const NCMatrix& a, const NCMatrix& b) {
        assert(a.ambient_ == b.ambient_ && a.rows_ == b.rows_ && a.cols_ == b.cols_);
        NCMatrix r = a;
        for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = r.e_[k] + b.e_[k];
        return r;
    }
    friend NCMatrix operator-(const NCMatrix& a, const NCMatrix& b) {
        assert(a.ambient_ == b.ambient_ && a.rows_ == b.rows_ && a.cols_ == b.cols_);
        NCMatrix r = a;
        for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = r.e_[k] - b.e_[k];
        return r;
    }
    friend NCMatrix operator*(const NCMatrix& a, const NCMatrix& b) {
        assert(a.ambient_ == b.ambient_ && a.cols_ == b.rows_);
        NCMatrix r(a.rows_, b.cols_, *a.ambient_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) {
                NCPoly acc;
                for (int k = 0; k < a.cols_; ++k) {
                    if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
                    acc = acc + nc_mul(a(i, k), b(k, j), *a.ambient_);
                }
                r.e_[size_t(i) * size_t(b.cols_) + size_t(j)] = std::move(acc);
            }
        return r;
    }
    friend NCMatrix operator*(const QScalar& c, const NCMatrix& m) {
        NCMatrix r = m;
        for (auto& x : r.e_) x = c * x;
        return r;
    }

    std::string first_nonzero() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero())
                    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           "): " + ambient_->poly_str((*this)(i, j));
        return {};
    }

private:
    int rows_, cols_;
    std::vector<NCPoly> e_;
    const Presentation* ambient_;
};

inline NCMatrix kron(const NCMatrix& a, const NCMatrix& b) {
    assert(&a.ambient() == &b.ambient());
    NCMatrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.ambient());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    if (a(i, j).is_zero() || b(k, l).is_zero()) continue;
                    r.set(i * b.rows() + k, j * b.cols() + l,
                          nc_mul(a(i, j), b(k, l), a.ambient()));
                }
    return r;
}

// ---------------------------------------------------------------------------
// Matrix JSON export: {"rows": n, "cols": m, "entries": [[text, ...], ...]}.
// ---------------------------------------------------------------------------
inline nlohmann::json matrix_to_json(const RepMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}
inline nlohmann::json matrix_to_json(const NCMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.ambient().poly_str(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

// ---------------------------------------------------------------------------
// Representations of the q-deformed enveloping algebra: images of E, F, K,
// K^-1 satisfying the defining relations (check_rep is the arbiter).
// ---------------------------------------------------------------------------
struct Rep {
    std::string name;
    int dim = 0;
    RepMatrix E, F, K, Kinv;
};

/// Catalog: "fund" (2-dimensional) and "spin1" (3-dimensional). The spin-1
/// ladder entries are rho and q*rho, using sqrt(q+q^-1)*q^(-+1/2) = q^((1-+1)/2)*rho.
inline Rep builtin_rep(const std::string& key) {
    if (key == "fund") {
        Rep r;
        r.name = "fund";
        r.dim = 2;
        r.E = RepMatrix(2, 2);
        r.E(0, 1) = QScalar::one();
        r.F = RepMatrix(2, 2);
        r.F(1, 0) = QScalar::one();
        r.K = RepMatrix(2, 2);
        r.K(0, 0) = QScalar::s();
        r.K(1, 1) = QScalar::s_power(-1);
        r.Kinv = RepMatrix(2, 2);
        r.Kinv(0, 0) = QScalar::s_power(-1);
        r.Kinv(1, 1) = QScalar::s();
        return r;
    }
    if (key == "spin1") {
        const QScalar rho = QScalar::rho(), q = QScalar::q();
        Rep r;
        r.name = "spin1";
        r.dim = 3;
        r.E = RepMatrix(3, 3);
        r.E(0, 1) = rho;
        r.E(1, 2) = q * rho;
        r.F = RepMatrix(3, 3);
        r.F(1, 0) = q * rho;
        r.F(2, 1) = rho;
        r.K = RepMatrix(3, 3);
        r.K(0, 0) = q;
        r.K(1, 1) = QScalar::one();
        r.K(2, 2) = QScalar::q_power(-1);
        r.Kinv = RepMatrix(3, 3);
        r.Kinv(0, 0) = QScalar::q_power(-1);
        r.Kinv(1, 1) = QScalar::one();
        r.Kinv(2, 2) = q;
        return r;
    }
    throw config_error("builtin_rep: unknown key '" + key + "'");
}

/// Exact verification of the defining relations on a candidate representation.
inline CheckReport check_rep(const Rep& r, const std::string& check_name = "") {
    const std::string name = check_name.empty() ? "rep-" + r.name : check_name;
    const QScalar q = QScalar::q(), qi = QScalar::q_power(-1);
    const QScalar z = (q - qi).inverse();
    struct Item {
        const char* what;
        RepMatrix residual;
    };
    const Item items[] = {
        {"K.E = q E.K", r.K * r.E - q * (r.E * r.K)},
        {"K.F = q^-1 F.K", r.K * r.F - qi * (r.F * r.K)},
        {"[E,F] = (K^2 - K^-2)/(q - q^-1)",
         r.E * r.F - r.F * r.E - z * (r.K * r.K - r.Kinv * r.Kinv)},
        {"K.K^-1 = 1", r.K * r.Kinv - RepMatrix::identity(r.dim)},
    };
    for (const auto& item : items)
        if (!item.residual.is_zero())
            return CheckReport::failed(name, CheckMode::exact,
                                       std::string(item.what) + " violated at " +
                                           item.residual.first_nonzero());
    return CheckReport::pass_exact(name);
}

enum class CoproductVariant { q, q_inverse };

/// Tensor-product representation. Variant q sends E to E(x)K + K^-1(x)E
/// (same for F); variant q^-1 swaps K and K^-1 in those images. K goes to
/// K(x)K either way.
inline Rep coproduct_rep(const Rep& r1, const Rep& r2, CoproductVariant v) {
    Rep r;
    r.name = r1.name + (v == CoproductVariant::q ? "(x)" : "(x)'") + r2.name;
    r.dim = r1.dim * r2.dim;
    r.K = kron(r1.K, r2.K);
    r.Kinv = kron(r1.Kinv, r2.Kinv);
    if (v == CoproductVariant::q) {
        r.E = kron(r1.E, r2.K) + kron(r1.Kinv, r2.E);
        r.F = kron(r1.F, r2.K) + kron(r1.Kinv, r2.F);
    } else {
        r.E = kron(r1.E, r2.Kinv) + kron(r1.K, r2.E);
        r.F = kron(r1.F, r2.Kinv) + kron(r1.K, r2.F);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Truncated matrix q-exponential and the universal T-matrix.
// ---------------------------------------------------------------------------

/// Sum_{n<k} m^n / [n]_base! where m^k = 0; requires nilpotency within
/// max_order unless truncation is explicitly allowed.
template <class M>
M matrix_q_exp_impl(const M& m, const QScalar& base, int max_order, bool allow_truncation,
                    const M& ident) {
    M acc = ident, power = ident;
    QScalar fact = QScalar::one();
    for (int n = 1; n <= max_order; ++n) {
        power = power * m;
        if (power.is_zero()) return acc;
        fact *= q_int_heine_at(base, n);
        acc = acc + fact.inverse() * power;
    }
    if (!allow_truncation)
        throw domain_error("matrix_q_exp: not nilpotent by order " + std::to_string(max_order));
    return acc;
}

inline RepMatrix matrix_q_exp(const RepMatrix& m, const QScalar& base, int max_order,
                              bool allow_truncation = false) {
    if (m.rows() != m.cols()) throw config_error("matrix_q_exp: square matrix required");
    return matrix_q_exp_impl(m, base, max_order, allow_truncation, RepMatrix::identity(m.rows()));
}
inline NCMatrix matrix_q_exp(const NCMatrix& m, const QScalar& base, int max_order,
                             bool allow_truncation = false) {
    if (m.rows() != m.cols()) throw config_error("matrix_q_exp: square matrix required");
    return matrix_q_exp_impl(m, base, max_order, allow_truncation,
                             NCMatrix::identity(m.rows(), m.ambient()));
}

/// The s-exponent of a Laurent monomial c = s^k, if c has that shape.
inline std::optional<int> monomial_s_exponent(const QScalar& c) {
    if (!c.is_rho_free()) return std::nullopt;
    if (!c.a().num().is_one() || !c.a().den().is_one()) return std::nullopt;
    return c.a().shift();
}

/// Group-element analogue e_{q^-2}^{gamma F} u^{2 X0} e_{q^2}^{beta E} with
/// noncommuting parameters. The middle factor's u-powers are read from the
/// K-image's diagonal, which must consist of Laurent monomials in s.
inline NCMatrix universal_T(const Rep& rep, const Presentation& param, int max_order = 12) {
    const int d = rep.dim;
    const NCPoly gamma = param.gen("gamma"), beta = param.gen("beta");
    const NCPoly u = param.gen("u"), uinv = param.gen("uinv");

    NCMatrix lower(d, d, param), upper(d, d, param);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (!rep.F(i, j).is_zero()) lower.set(i, j, rep.F(i, j) * gamma);
            if (!rep.E(i, j).is_zero()) upper.set(i, j, rep.E(i, j) * beta);
        }
    NCMatrix middle(d, d, param);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j)
            if (i != j && !rep.K(i, j).is_zero())
                throw config_error("universal_T: K image must be diagonal");
        auto w = monomial_s_exponent(rep.K(i, i));
        if (!w) throw config_error("universal_T: K image must have monomial diagonal entries");
        NCPoly up = NCPoly::unit();
        for (int k = 0; k < std::abs(*w); ++k) up = nc_mul(up, *w > 0 ? u : uinv, param);
        middle.set(i, i, up);
    }
    NCMatrix left = matrix_q_exp(lower, QScalar::q_power(-2), max_order);
    NCMatrix right = matrix_q_exp(upper, QScalar::q_power(2), max_order);
    return left * middle * right;
}

namespace detail {

/// The four quantum-matrix entries in the noncommuting group parameters:
/// A = u, B = u.beta, C = gamma.u, D = u^-1 + gamma.u.beta.
struct ParametrizedT {
    NCPoly A, B, C, D;
};
inline ParametrizedT parametrized_t_entries(const Presentation& param) {
    ParametrizedT t;
    t.A = param.gen("u");
    t.B = nc_mul(param.gen("u"), param.gen("beta"), param);
    t.C = nc_mul(param.gen("gamma"), param.gen("u"), param);
    t.D = NCPoly::from_gen(param.require("uinv")) +
          nc_mul({param.gen("gamma"), param.gen("u"), param.gen("beta")}, param);
    return t;
}

}  // namespace detail

/// For the 2-dimensional representation: the universal formula must reproduce
/// the parametrized quantum matrix entrywise, and those entries must satisfy
/// the quantum-matrix relations plus the unit determinant inside the
/// parameter algebra. For spin1: substituting the parametrized entries into
/// the 3-dimensional corepresentation pattern must match entrywise.
inline CheckReport check_universal_T(const std::string& rep_key) {
    const std::string name = "ut-" + rep_key;
    const Presentation param = builtin_presentation("param_alg");
    const QScalar q = QScalar::q(), qi = QScalar::q_power(-1), rho = QScalar::rho();
    const Rep rep = builtin_rep(rep_key);
    const NCMatrix t = universal_T(rep, param);
    const auto [A, B, C, D] = detail::parametrized_t_entries(param);
    auto mul = [&](const NCPoly& x, const NCPoly& y) { return nc_mul(x, y, param); };

    if (rep_key == "fund") {
        NCMatrix expect(2, 2, param);
        expect.set(0, 0, A);
        expect.set(0, 1, B);
        expect.set(1, 0, C);
        expect.set(1, 1, D);
        NCMatrix diff = t - expect;
        if (!diff.is_zero())
            return CheckReport::failed(name, CheckMode::exact,
                                       "parametrized entry mismatch at " + diff.first_nonzero());
        struct Rel {
            const char* what;
            NCPoly residual;
        };
        const Rel rels[] = {
            {"A.B = q B.A", mul(A, B) - q * mul(B, A)},
            {"C.D = q D.C", mul(C, D) - q * mul(D, C)},
            {"A.C = q C.A", mul(A, C) - q * mul(C, A)},
            {"B.D = q D.B", mul(B, D) - q * mul(D, B)},
            {"B.C = C.B", mul(B, C) - mul(C, B)},
            {"A.D - D.A = (q - q^-1) B.C", mul(A, D) - mul(D, A) - (q - qi) * mul(B, C)},
            {"A.D - q B.C = 1", mul(A, D) - q * mul(B, C) - NCPoly::unit()},
        };
        for (const auto& r : rels)
            if (!r.residual.is_zero())
                return CheckReport::failed(name, CheckMode::exact,
                                           std::string(r.what) + " fails: " +
                                               param.poly_str(r.residual));
        return CheckReport::pass_exact(name);
    }

    if (rep_key == "spin1") {
        NCMatrix expect(3, 3, param);
        expect.set(0, 0, mul(A, A));
        expect.set(0, 1, rho * mul(A, B));
        expect.set(0, 2, mul(B, B));
        expect.set(1, 0, rho * mul(A, C));
        expect.set(1, 1, mul(A, D) + qi * mul(B, C));
        expect.set(1, 2, rho * mul(B, D));
        expect.set(2, 0, mul(C, C));
        expect.set(2, 1, rho * mul(C, D));
        expect.set(2, 2, mul(D, D));
        NCMatrix diff = t - expect;
        if (!diff.is_zero())
            return CheckReport::failed(name, CheckMode::exact,
                                       "3-dim corepresentation pattern mismatch at " +
                                           diff.first_nonzero());
        return CheckReport::pass_exact(name);
    }

    throw config_error("check_universal_T: unknown representation '" + rep_key + "'");
}

}  // namespace qalg
