#pragma once

#include "qalg/qscalar.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace qalg {

/// Heine q-integer [n]_q = (1 - q^n)/(1 - q), computed in summation form
/// 1 + q + ... + q^(n-1) so no division is involved.
inline QScalar q_int_heine(int n) {
    QScalar acc = QScalar::zero();
    for (int j = 0; j < n; ++j) acc += QScalar::q_power(j);
    return acc;
}

/// Heine q-integer with an arbitrary base substituted for q.
inline QScalar q_int_heine_at(const QScalar& base, int n) {
    QScalar acc = QScalar::zero(), p = QScalar::one();
    for (int j = 0; j < n; ++j) {
        acc += p;
        p *= base;
    }
    return acc;
}
inline QValue q_int_heine_at(const QValue& base, int n) {
    QValue acc(0.0, 0.0), p(1.0, 0.0);
    for (int j = 0; j < n; ++j) {
        acc += p;
        p *= base;
    }
    return acc;
}

/// Symmetric q-integer (q^n - q^-n)/(q - q^-1); a Laurent polynomial in q,
/// antisymmetric in n and invariant under q -> 1/q.
inline QScalar q_int_sym(int n) {
    if (n < 0) return -q_int_sym(-n);
    QScalar acc = QScalar::zero();
    for (int j = 0; j < n; ++j) acc += QScalar::q_power(n - 1 - 2 * j);
    return acc;
}
inline double q_int_sym_num(double q, int n) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += std::pow(q, n - 1 - 2 * j);
    for (int j = 0; j < -n; ++j) acc -= std::pow(q, -n - 1 - 2 * j);
    return acc;
}

/// [n]_base! = [n][n-1]...[1], with [0]! = 1.
inline QScalar q_factorial(int n, const QScalar& base) {
    QScalar acc = QScalar::one();
    for (int k = 2; k <= n; ++k) acc *= q_int_heine_at(base, k);
    return acc;
}
inline QValue q_factorial(int n, const QValue& base) {
    QValue acc(1.0, 0.0);
    for (int k = 2; k <= n; ++k) acc *= q_int_heine_at(base, k);
    return acc;
}

/// q-shifted factorial (x; q)_n = (1 - x)(1 - xq)...(1 - xq^(n-1)).
inline QScalar q_shifted_factorial(const QScalar& x, int n) {
    QScalar acc = QScalar::one(), p = x;
    for (int k = 0; k < n; ++k) {
        acc *= QScalar::one() - p;
        p *= QScalar::q();
    }
    return acc;
}
inline QValue q_shifted_factorial(const QValue& x, const QValue& q, int n) {
    QValue acc(1.0, 0.0), p = x;
    for (int k = 0; k < n; ++k) {
        acc *= QValue(1.0, 0.0) - p;
        p *= q;
    }
    return acc;
}

/// Partial sum of the basic hypergeometric series
///   sum_n [ (a_1..a_r; q)_n / ((b_1..b_s; q)_n (q; q)_n) ]
///         * ((-1)^n q^(n(n-1)/2))^(1+s-r) * z^n
/// through `terms` terms. A vanishing lower-parameter Pochhammer factor is a
/// domain error reporting the offending index.
inline QValue basic_hypergeometric(const std::vector<QValue>& a, const std::vector<QValue>& b,
                                   const QValue& q, const QValue& z, int terms) {
    const int e = 1 + static_cast<int>(b.size()) - static_cast<int>(a.size());
    QValue sum(0.0, 0.0), term(1.0, 0.0);
    QValue qn(1.0, 0.0);  // q^n
    for (int n = 0; n < terms; ++n) {
        sum += term;
        // ratio from term n to term n+1
        QValue ratio = z;
        for (const auto& ai : a) ratio *= QValue(1.0, 0.0) - ai * qn;
        for (size_t i = 0; i < b.size(); ++i) {
            QValue f = QValue(1.0, 0.0) - b[i] * qn;
            if (std::abs(f) < 1e-14 * (1.0 + std::abs(b[i] * qn)))
                throw domain_error("basic_hypergeometric: lower parameter b[" + std::to_string(i) +
                                   "] makes a Pochhammer factor vanish at n = " +
                                   std::to_string(n + 1));
            ratio /= f;
        }
        QValue f = QValue(1.0, 0.0) - q * qn;  // (q; q) factor 1 - q^(n+1)
        if (std::abs(f) < 1e-14 * (1.0 + std::abs(q * qn)))
            throw domain_error("basic_hypergeometric: (q; q) factor vanishes at n = " +
                               std::to_string(n + 1));
        ratio /= f;
        if (e != 0) {
            QValue g = -qn;  // ratio of ((-1)^n q^(n(n-1)/2)) between n and n+1
            for (int k = 0; k < std::abs(e); ++k) ratio = e > 0 ? ratio * g : ratio / g;
        }
        term *= ratio;
        qn *= q;
    }
    return sum;
}

/// Truncated q-exponential e_base^z = sum_{n<terms} z^n / [n]_base!.
inline QScalar q_exp(const QScalar& z, const QScalar& base, int terms) {
    QScalar sum = QScalar::zero(), term = QScalar::one();
    for (int n = 0; n < terms; ++n) {
        sum += term;
        term = term * z / q_int_heine_at(base, n + 1);
    }
    return sum;
}
inline QValue q_exp(const QValue& z, const QValue& base, int terms) {
    QValue sum(0.0, 0.0), term(1.0, 0.0);
    for (int n = 0; n < terms; ++n) {
        sum += term;
        QValue d = q_int_heine_at(base, n + 1);
        if (std::abs(d) < 1e-300)
            throw domain_error("q_exp: [" + std::to_string(n + 1) + "] vanishes at this base");
        term = term * z / d;
    }
    return sum;
}

/// The involution q -> 1/q on the coefficient field.
inline QScalar invert_q(const QScalar& x) { return x.inverted_q(); }

/// Field homomorphism into the complex numbers at a concrete q.
inline QValue eval_numeric(const QScalar& x, const QValue& q) { return x.eval(q); }

}  // namespace qalg
