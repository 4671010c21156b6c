#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qalg {

using Int = boost::multiprecision::cpp_int;
using QValue = std::complex<double>;

/// Raised when a numeric evaluation hits a pole or an invalid argument.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on malformed configuration (unknown catalog key, missing image, ...).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// SPoly: dense integer-coefficient polynomial in the deformation symbol s.
// Coefficients ascending by exponent; invariant: no trailing zero limb, the
// zero polynomial is the empty vector.
// ---------------------------------------------------------------------------
class SPoly {
public:
    SPoly() = default;
    SPoly(const Int& constant) {  // NOLINT: implicit by design
        if (constant != 0) c_.push_back(constant);
    }
    SPoly(long constant) : SPoly(Int(constant)) {}
    explicit SPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static SPoly monomial(const Int& coeff, int degree) {
        if (coeff == 0) return {};
        std::vector<Int> c(static_cast<size_t>(degree) + 1);
        c.back() = coeff;
        return SPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    const Int& coeff(int i) const {
        static const Int kZero = 0;
        if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
        return c_[static_cast<size_t>(i)];
    }
    const Int& leading() const { return c_.back(); }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    int low_order() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return static_cast<int>(i);
        return 0;
    }

    /// Divide by s^k; every coefficient below k must vanish.
    SPoly shifted_down(int k) const {
        if (k == 0 || is_zero()) return *this;
        std::vector<Int> c(c_.begin() + k, c_.end());
        return SPoly(std::move(c));
    }
    /// Multiply by s^k.
    SPoly shifted_up(int k) const {
        if (k == 0 || is_zero()) return *this;
        std::vector<Int> c(static_cast<size_t>(k), Int(0));
        c.insert(c.end(), c_.begin(), c_.end());
        return SPoly(std::move(c));
    }

    SPoly operator-() const {
        SPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend SPoly operator+(const SPoly& a, const SPoly& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return SPoly(std::move(c));
    }
    friend SPoly operator-(const SPoly& a, const SPoly& b) { return a + (-b); }
    friend SPoly operator*(const SPoly& a, const SPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return SPoly(std::move(c));
    }

    friend bool operator==(const SPoly& a, const SPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const SPoly& a, const SPoly& b) { return !(a == b); }

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    Int content() const {
        Int g = 0;
        for (const auto& x : c_) {
            g = boost::multiprecision::gcd(g, x);
            if (g == 1) break;
        }
        return g;
    }

    /// Exact division by a nonzero integer; all coefficients must be divisible.
    SPoly divided_by(const Int& k) const {
        SPoly r = *this;
        for (auto& x : r.c_) x /= k;
        return r;
    }

    /// Exact polynomial division; throws std::logic_error on nonzero remainder.
    SPoly divided_by(const SPoly& d) const {
        SPoly q, r;
        divmod(*this, d, q, r);
        if (!r.is_zero()) throw std::logic_error("SPoly: inexact division");
        return q;
    }

    /// Long division over the rationals cleared to integers is not needed here:
    /// this divmod requires the leading coefficient of d to divide exactly at
    /// every step, which holds for all internal callers (gcd cofactors).
    static void divmod(const SPoly& a, const SPoly& d, SPoly& q, SPoly& r) {
        if (d.is_zero()) throw std::logic_error("SPoly: division by zero");
        std::vector<Int> rem(a.c_);
        std::vector<Int> quo;
        int dd = d.degree();
        if (a.degree() >= dd) quo.assign(static_cast<size_t>(a.degree() - dd) + 1, Int(0));
        for (int i = a.degree(); i >= dd; --i) {
            Int top = rem[static_cast<size_t>(i)];
            if (top == 0) continue;
            if (top % d.leading() != 0) break;  // leave the rest as remainder
            Int f = top / d.leading();
            quo[static_cast<size_t>(i - dd)] = f;
            for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(i - dd + j)] -= f * d.coeff(j);
        }
        q = SPoly(std::move(quo));
        r = SPoly(std::move(rem));
    }

    /// Primitive gcd with positive leading coefficient (primitive PRS).
    static SPoly gcd(SPoly a, SPoly b) {
        auto primitive = [](SPoly p) {
            if (p.is_zero()) return p;
            Int c = p.content();
            p = p.divided_by(c);
            if (p.leading() < 0) p = -p;
            return p;
        };
        a = primitive(std::move(a));
        b = primitive(std::move(b));
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.degree() < b.degree()) std::swap(a, b);
        while (!b.is_zero()) {
            SPoly r = pseudo_rem(a, b);
            a = std::move(b);
            b = primitive(std::move(r));
        }
        return a;
    }

    double eval_abs_bound(double smag) const {
        double bound = 0.0, p = 1.0;
        for (const auto& x : c_) {
            bound += std::abs(x.convert_to<double>()) * p;
            p *= smag;
        }
        return bound;
    }

    QValue eval(const QValue& s) const {
        QValue acc(0.0, 0.0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * s + QValue(c_[i].convert_to<double>(), 0.0);
        return acc;
    }

    /// Evaluate at the rational point num/den, returning value * den^degree.
    Int eval_rational_scaled(const Int& num, const Int& den) const {
        Int acc = 0, dpow = 1;
        for (int i = degree(); i >= 0; --i) {
            acc = acc * num + coeff(i) * dpow;
            if (i > 0) dpow *= den;
        }
        return acc;
    }

    /// Coefficients reversed: s^degree * P(1/s).
    SPoly reversed() const {
        std::vector<Int> c(c_.rbegin(), c_.rend());
        return SPoly(std::move(c));
    }

    /// Descending-exponent rendering, e.g. "s^4 - 2*s^2 + 1".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Int& c = coeff(i);
            if (c == 0) continue;
            append_term(out, c, i);
        }
        return out;
    }

    static void append_term(std::string& out, const Int& c, int exp) {
        Int mag = c < 0 ? Int(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool unit = (mag == 1);
        if (!unit || exp == 0) out += mag.str();
        if (exp != 0) {
            if (!unit) out += "*";
            out += exp == 1 ? "s" : "s^" + std::to_string(exp);
        }
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    static SPoly pseudo_rem(const SPoly& a, const SPoly& b) {
        // lc(b)^(deg a - deg b + 1) * a  mod  b, entirely over the integers
        SPoly r = a;
        int db = b.degree();
        while (!r.is_zero() && r.degree() >= db) {
            int k = r.degree() - db;
            SPoly scaled;
            {
                SPoly lead_r = SPoly::monomial(r.leading(), k) * b;
                scaled = SPoly(b.leading()) * r - lead_r;
            }
            r = std::move(scaled);
        }
        return r;
    }

    std::vector<Int> c_;
};

// ---------------------------------------------------------------------------
// RationalFn: s^shift * (num / den) with num, den integer polynomials in s,
// neither divisible by s, gcd(num, den) a unit, den with positive leading
// coefficient. The representation is unique, so equality is field equality.
// ---------------------------------------------------------------------------
class RationalFn {
public:
    RationalFn() : num_(), den_(1), shift_(0) {}
    RationalFn(const Int& n) : num_(n), den_(1), shift_(0) {}  // NOLINT
    RationalFn(long n) : RationalFn(Int(n)) {}                 // NOLINT
    RationalFn(const Int& n, const Int& d) : num_(n), den_(d), shift_(0) { canonicalize(); }

    static RationalFn from_parts(SPoly num, SPoly den, int shift) {
        RationalFn r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        r.shift_ = shift;
        r.canonicalize();
        return r;
    }
    /// s^k as an exact Laurent monomial.
    static RationalFn s_power(int k) { return from_parts(SPoly(1), SPoly(1), k); }

    const SPoly& num() const { return num_; }
    const SPoly& den() const { return den_; }
    int shift() const { return shift_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
    /// Sign of the leading numerator coefficient (0 for zero).
    int sign() const { return num_.is_zero() ? 0 : (num_.leading() < 0 ? -1 : 1); }

    RationalFn operator-() const {
        RationalFn r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int m = std::min(a.shift_, b.shift_);
        SPoly na = a.num_.shifted_up(a.shift_ - m);
        SPoly nb = b.num_.shifted_up(b.shift_ - m);
        return from_parts(na * b.den_ + nb * a.den_, a.den_ * b.den_, m);
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return from_parts(a.num_ * b.num_, a.den_ * b.den_, a.shift_ + b.shift_);
    }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }

    RationalFn inverse() const {
        if (is_zero()) throw domain_error("RationalFn: inverse of zero");
        return from_parts(den_, num_, -shift_);
    }

    RationalFn pow(int e) const {
        if (e == 0) return RationalFn(1);
        RationalFn base = e > 0 ? *this : inverse();
        int n = std::abs(e);
        RationalFn acc(1);
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    /// Involution s -> 1/s.
    RationalFn inverted_s() const {
        if (is_zero()) return {};
        int dn = num_.degree(), dd = den_.degree();
        return from_parts(num_.reversed(), den_.reversed(), -shift_ + dd - dn);
    }

    QValue eval_at_s(const QValue& s) const {
        if (is_zero()) return {0.0, 0.0};
        double smag = std::abs(s);
        if (smag == 0.0) throw domain_error("RationalFn: evaluation at s = 0");
        QValue dv = den_.eval(s);
        double scale = den_.eval_abs_bound(smag) + 1.0;
        if (std::abs(dv) <= 1e-12 * scale)
            throw domain_error("RationalFn: pole, denominator (" + den_.to_string() + ") vanishes");
        QValue v = num_.eval(s) / dv;
        return v * std::pow(s, QValue(static_cast<double>(shift_), 0.0));
    }

    /// Exact substitution s -> p/q (p nonzero); result is a rational constant.
    RationalFn substituted_s(const Int& p, const Int& q) const {
        if (p == 0) throw domain_error("RationalFn: substitution at s = 0");
        if (is_zero()) return {};
        Int nv = num_.eval_rational_scaled(p, q);
        Int dv = den_.eval_rational_scaled(p, q);
        if (dv == 0)
            throw domain_error("RationalFn: pole, denominator (" + den_.to_string() + ") vanishes");
        // restore the den^deg scaling and the s^shift factor
        int dn = num_.degree(), dd = den_.degree();
        Int n2 = nv, d2 = dv;
        if (dd > dn)
            n2 *= boost::multiprecision::pow(q, static_cast<unsigned>(dd - dn));
        else if (dn > dd)
            d2 *= boost::multiprecision::pow(q, static_cast<unsigned>(dn - dd));
        if (shift_ > 0) {
            n2 *= boost::multiprecision::pow(p, static_cast<unsigned>(shift_));
            d2 *= boost::multiprecision::pow(q, static_cast<unsigned>(shift_));
        } else if (shift_ < 0) {
            n2 *= boost::multiprecision::pow(q, static_cast<unsigned>(-shift_));
            d2 *= boost::multiprecision::pow(p, static_cast<unsigned>(-shift_));
        }
        return RationalFn(n2, d2);
    }

    /// Canonical text form. Laurent polynomials render expanded
    /// ("s^2 + 1 - s^-2"); proper fractions render "((P)/(Q))*s^k".
    std::string to_string() const {
        if (is_zero()) return "0";
        if (den_.is_one()) {
            std::string out;
            for (int i = num_.degree(); i >= 0; --i) {
                const Int& c = num_.coeff(i);
                if (c == 0) continue;
                SPoly::append_term(out, c, i + shift_);
            }
            return out;
        }
        std::string out = "((" + num_.to_string() + ")/(" + den_.to_string() + "))";
        if (shift_ != 0) out += "*s^" + std::to_string(shift_);
        return out;
    }

    /// True when the rendering has more than one additive term.
    bool is_multiterm() const {
        if (!den_.is_one()) return false;  // fraction form is self-delimiting
        int nonzero = 0;
        for (int i = 0; i <= num_.degree(); ++i)
            if (num_.coeff(i) != 0) ++nonzero;
        return nonzero > 1;
    }

private:
    void canonicalize() {
        if (den_.is_zero()) throw std::logic_error("RationalFn: zero denominator");
        if (num_.is_zero()) {
            den_ = SPoly(1);
            shift_ = 0;
            return;
        }
        int ln = num_.low_order(), ld = den_.low_order();
        num_ = num_.shifted_down(ln);
        den_ = den_.shifted_down(ld);
        shift_ += ln - ld;
        SPoly g = SPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divided_by(g);
            den_ = den_.divided_by(g);
        }
        Int cg = boost::multiprecision::gcd(num_.content(), den_.content());
        if (cg > 1) {
            num_ = num_.divided_by(cg);
            den_ = den_.divided_by(cg);
        }
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    SPoly num_, den_;
    int shift_;
};

}  // namespace qalg
