#pragma once

#include "qalg/rationalfn.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace qalg {

// ---------------------------------------------------------------------------
// QScalar: element a + b*rho of the coefficient field Q(s)[rho], where
// rho^2 = 1 + s^-4 and q = s^2. This single radical covers every root the
// catalog needs: sqrt(q) = s, sqrt(1+q^-2) = rho, and sqrt(q+q^-1) = s*rho.
// ---------------------------------------------------------------------------
class QScalar {
public:
    QScalar() = default;
    QScalar(const RationalFn& a) : a_(a) {}  // NOLINT: implicit by design
    QScalar(const Int& n) : a_(n) {}         // NOLINT
    QScalar(long n) : a_(Int(n)) {}          // NOLINT
    QScalar(RationalFn a, RationalFn b) : a_(std::move(a)), b_(std::move(b)) {}

    static QScalar zero() { return QScalar(); }
    static QScalar one() { return QScalar(Int(1)); }
    static QScalar s() { return QScalar(RationalFn::s_power(1)); }
    static QScalar s_power(int k) { return QScalar(RationalFn::s_power(k)); }
    static QScalar q() { return s_power(2); }
    static QScalar q_power(int k) { return s_power(2 * k); }
    static QScalar rho() { return QScalar(RationalFn(), RationalFn(Int(1))); }
    static QScalar rational(const Int& n, const Int& d) { return QScalar(RationalFn(n, d)); }
    /// rho^2 as a rational function: 1 + s^-4.
    static RationalFn rho_squared() {
        return RationalFn::from_parts(SPoly(std::vector<Int>{Int(1), Int(0), Int(0), Int(0), Int(1)}),
                                      SPoly(1), -4);
    }

    const RationalFn& a() const { return a_; }
    const RationalFn& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_rho_free() const { return b_.is_zero(); }

    QScalar operator-() const { return QScalar(-a_, -b_); }

    friend QScalar operator+(const QScalar& x, const QScalar& y) {
        return QScalar(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QScalar operator-(const QScalar& x, const QScalar& y) {
        return QScalar(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend QScalar operator*(const QScalar& x, const QScalar& y) {
        // (a1 + b1 r)(a2 + b2 r) with r^2 = 1 + s^-4
        return QScalar(x.a_ * y.a_ + x.b_ * y.b_ * rho_squared(), x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QScalar operator/(const QScalar& x, const QScalar& y) { return x * y.inverse(); }

    QScalar& operator+=(const QScalar& y) { return *this = *this + y; }
    QScalar& operator-=(const QScalar& y) { return *this = *this - y; }
    QScalar& operator*=(const QScalar& y) { return *this = *this * y; }

    QScalar inverse() const {
        // conjugate trick: 1/(a + b r) = (a - b r) / (a^2 - b^2 (1 + s^-4))
        RationalFn n = a_ * a_ - b_ * b_ * rho_squared();
        if (n.is_zero()) throw domain_error("QScalar: inverse of zero");
        RationalFn ni = n.inverse();
        return QScalar(a_ * ni, -b_ * ni);
    }

    QScalar pow(int e) const {
        if (e == 0) return one();
        QScalar base = e > 0 ? *this : inverse();
        int n = std::abs(e);
        QScalar acc = one();
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    friend bool operator==(const QScalar& x, const QScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QScalar& x, const QScalar& y) { return !(x == y); }

    /// The involution s -> 1/s (q -> 1/q), fixing rho as a formal symbol.
    QScalar inverted_q() const { return QScalar(a_.inverted_s(), b_.inverted_s()); }

    /// Numeric specialization at a concrete q: s and rho take their principal
    /// square-root branches.
    QValue eval(const QValue& q) const {
        if (q == QValue(0.0, 0.0)) throw domain_error("QScalar: evaluation at q = 0");
        QValue s = std::sqrt(q);
        QValue v = a_.eval_at_s(s);
        if (!b_.is_zero()) v += b_.eval_at_s(s) * std::sqrt(QValue(1.0, 0.0) + 1.0 / (q * q));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw domain_error("QScalar: non-finite evaluation");
        return v;
    }

    /// Exact substitution s -> p/q; rho stays formal.
    QScalar substituted_s(const Int& p, const Int& q) const {
        return QScalar(a_.substituted_s(p, q), b_.substituted_s(p, q));
    }

    /// Canonical wire form; "r" denotes rho.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        if (!a_.is_zero()) out = a_.to_string();
        if (!b_.is_zero()) {
            RationalFn mag = b_;
            bool neg = b_.sign() < 0;
            if (neg) mag = -mag;
            std::string part;
            if (mag.is_one()) {
                part = "r";
            } else if (mag.is_multiterm()) {
                part = "(" + mag.to_string() + ") * r";
            } else {
                part = mag.to_string() + " * r";
            }
            if (out.empty()) {
                out = neg ? "-" + part : part;
            } else {
                out += (neg ? " - " : " + ") + part;
            }
        }
        return out;
    }

private:
    RationalFn a_, b_;
};

inline std::string to_string(const QScalar& x) { return x.to_string(); }

}  // namespace qalg
