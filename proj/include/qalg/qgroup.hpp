#pragma once

#include "qalg/matq.hpp"
#include "qalg/ncpoly.hpp"
#include "qalg/presentations.hpp"
#include "qalg/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace qalg {

/// The fundamental 2x2 quantum matrix [[A,B],[C,D]] over a quantum-matrix
/// presentation.
inline NCMatrix fundamental_tmatrix(const Presentation& funq) {
    NCMatrix t(2, 2, funq);
    t.set(0, 0, funq.gen("A"));
    t.set(0, 1, funq.gen("B"));
    t.set(1, 0, funq.gen("C"));
    t.set(1, 1, funq.gen("D"));
    return t;
}

/// The 3x3 corepresentation built from quadratic monomials, with the radical
/// normalization sqrt(1+q^-2) = rho on the mixed entries.
inline NCMatrix spin1_tmatrix(const Presentation& funq_sl2) {
    const QScalar rho = QScalar::rho(), qi = QScalar::q_power(-1);
    const auto& p = funq_sl2;
    auto mul = [&](const char* x, const char* y) { return nc_mul(p.gen(x), p.gen(y), p); };
    NCMatrix t(3, 3, p);
    t.set(0, 0, mul("A", "A"));
    t.set(0, 1, rho * mul("A", "B"));
    t.set(0, 2, mul("B", "B"));
    t.set(1, 0, rho * mul("A", "C"));
    t.set(1, 1, mul("A", "D") + qi * mul("B", "C"));
    t.set(1, 2, rho * mul("B", "D"));
    t.set(2, 0, mul("C", "C"));
    t.set(2, 1, rho * mul("C", "D"));
    t.set(2, 2, mul("D", "D"));
    return t;
}

/// Quantum determinant A.D - q B.C of a 2x2 quantum matrix.
inline NCPoly detq(const NCMatrix& t) {
    const Presentation& p = t.ambient();
    return nc_mul(t(0, 0), t(1, 1), p) - QScalar::q() * nc_mul(t(0, 1), t(1, 0), p);
}

// ---------------------------------------------------------------------------
// Covariance of the q-differential calculus under the quantum matrix.
// ---------------------------------------------------------------------------
inline CheckReport check_covariance() {
    const std::string name = "covariance";
    const Presentation cov = builtin_presentation("covariance");
    const QScalar q = QScalar::q(), qi = QScalar::q_power(-1), q2 = QScalar::q_power(2);
    auto g = [&](const char* n) { return cov.gen(n); };
    auto mul = [&](const NCPoly& x, const NCPoly& y) { return nc_mul(x, y, cov); };

    // Coordinates transform by T; derivatives by the inverse of the
    // TRANSPOSED quantum matrix, [[D, -q^-1 C], [-q B, A]]. The transpose of
    // the inverse (off-diagonal coefficients -q C and -q^-1 B) does not
    // preserve the calculus: its first residual is
    // (q^-1 - q) C.D + (2q - q^-1 - q^3) C.D.Y.Dy on the Dx'.Y' relation.
    const NCPoly Xp = mul(g("A"), g("X")) + mul(g("B"), g("Y"));
    const NCPoly Yp = mul(g("C"), g("X")) + mul(g("D"), g("Y"));
    const NCPoly DXp = mul(g("D"), g("Dx")) - qi * mul(g("C"), g("Dy"));
    const NCPoly DYp = mul(g("A"), g("Dy")) - q * mul(g("B"), g("Dx"));

    struct Rel {
        const char* what;
        NCPoly residual;
    };
    const Rel rels[] = {
        {"X'.Y' = q Y'.X'", mul(Xp, Yp) - q * mul(Yp, Xp)},
        {"Dx'.Dy' = q^-1 Dy'.Dx'", mul(DXp, DYp) - qi * mul(DYp, DXp)},
        {"Dx'.Y' = q Y'.Dx'", mul(DXp, Yp) - q * mul(Yp, DXp)},
        {"Dy'.X' = q X'.Dy'", mul(DYp, Xp) - q * mul(Xp, DYp)},
        {"Dx'.X' = 1 + q^2 X'.Dx' + (q^2-1) Y'.Dy'",
         mul(DXp, Xp) - q2 * mul(Xp, DXp) - NCPoly::unit() - (q2 - QScalar::one()) * mul(Yp, DYp)},
        {"Dy'.Y' = 1 + q^2 Y'.Dy'", mul(DYp, Yp) - q2 * mul(Yp, DYp) - NCPoly::unit()},
    };
    for (const auto& r : rels)
        if (!r.residual.is_zero())
            return CheckReport::failed(name, CheckMode::exact,
                                       std::string(r.what) + " fails: " +
                                           cov.poly_str(r.residual));

    // classical limit: the primed commutators collapse to the undeformed
    // calculus when every coefficient is evaluated at q = 1
    const Rel classical[] = {
        {"[X',Y']", commutator(Xp, Yp, cov)},
        {"[Dx',Dy']", commutator(DXp, DYp, cov)},
        {"[Dx',Y']", commutator(DXp, Yp, cov)},
        {"[Dy',X']", commutator(DYp, Xp, cov)},
        {"[Dx',X'] - 1", commutator(DXp, Xp, cov) - NCPoly::unit()},
        {"[Dy',Y'] - 1", commutator(DYp, Yp, cov) - NCPoly::unit()},
    };
    for (const auto& r : classical) {
        double worst = 0.0;
        for (const auto& [w, c] : r.residual.terms())
            worst = std::max(worst, std::abs(c.eval({1.0, 0.0})));
        if (worst >= 1e-12)
            return CheckReport::failed(name, CheckMode::exact,
                                       std::string(r.what) + " does not vanish at q = 1, |coeff| = " +
                                           std::to_string(worst));
    }
    CheckReport r = CheckReport::pass_exact(name);
    r.convention_notes =
        "derivatives transform by the inverse of the transposed quantum matrix "
        "[[D, -q^-1 C], [-q B, A]]; the transpose-of-the-inverse variant fails the "
        "Dx'.Y' relation";
    return r;
}

// ---------------------------------------------------------------------------
// Quantum determinant centrality and the quantum matrix inverse.
// ---------------------------------------------------------------------------
inline CheckReport check_detq_central() {
    const std::string name = "detq-central";
    const Presentation gl = builtin_presentation("funq_gl2");
    const NCPoly det = detq(fundamental_tmatrix(gl));
    for (const char* gname : {"A", "B", "C", "D"}) {
        NCPoly c = commutator(det, gl.gen(gname), gl);
        if (!c.is_zero())
            return CheckReport::failed(name, CheckMode::exact,
                                       std::string("det_q does not commute with ") + gname +
                                           ": " + gl.poly_str(c));
    }
    const Presentation sl = builtin_presentation("funq_sl2");
    NCPoly det1 = normal_form(detq(fundamental_tmatrix(sl)), sl);
    if (det1 != NCPoly::unit())
        return CheckReport::failed(name, CheckMode::exact,
                                   "det_q is not the unit on the det=1 quotient: " +
                                       sl.poly_str(det1));
    return CheckReport::pass_exact(name);
}

inline CheckReport check_t_inverse() {
    const std::string name = "t-inverse";
    const Presentation sl = builtin_presentation("funq_sl2");
    const QScalar q = QScalar::q(), qi = QScalar::q_power(-1);
    NCMatrix t = fundamental_tmatrix(sl);
    NCMatrix tinv(2, 2, sl);
    tinv.set(0, 0, sl.gen("D"));
    tinv.set(0, 1, -qi * sl.gen("B"));
    tinv.set(1, 0, -q * sl.gen("C"));
    tinv.set(1, 1, sl.gen("A"));
    const NCMatrix ident = NCMatrix::identity(2, sl);
    NCMatrix lhs = t * tinv - ident;
    if (!lhs.is_zero())
        return CheckReport::failed(name, CheckMode::exact,
                                   "T.T^-1 != 1 at " + lhs.first_nonzero());
    NCMatrix rhs = tinv * t - ident;
    if (!rhs.is_zero())
        return CheckReport::failed(name, CheckMode::exact,
                                   "T^-1.T != 1 at " + rhs.first_nonzero());
    return CheckReport::pass_exact(name);
}

// ---------------------------------------------------------------------------
// Comultiplication on the quantum matrix algebra.
// ---------------------------------------------------------------------------

/// Images A -> A(x)A + B(x)C, B -> A(x)B + B(x)D, C -> C(x)A + D(x)C,
/// D -> C(x)B + D(x)D, keyed by the factor presentation's generator indices.
inline std::map<int, NCPoly> fun_coproduct_images(const Presentation& factor,
                                                  const Presentation& tensor) {
    auto w = [&](const char* x, const char* y) {
        return nc_mul(tensor.gen(x, 0), tensor.gen(y, 1), tensor);
    };
    std::map<int, NCPoly> images;
    images[factor.require("A")] = w("A", "A") + w("B", "C");
    images[factor.require("B")] = w("A", "B") + w("B", "D");
    images[factor.require("C")] = w("C", "A") + w("D", "C");
    images[factor.require("D")] = w("C", "B") + w("D", "D");
    return images;
}

inline NCPoly delta_fun(const NCPoly& p, const Presentation& factor,
                        const Presentation& tensor) {
    return apply_morphism(fun_coproduct_images(factor, tensor), p, tensor);
}

inline CheckReport check_delta_fun() {
    const std::string name = "delta-fun";
    const QScalar q = QScalar::q(), qi = QScalar::q_power(-1);
    for (const char* key : {"funq_gl2", "funq_sl2"}) {
        const Presentation f = builtin_presentation(key);
        const Presentation t = tensor_presentation(f, f);
        auto im = fun_coproduct_images(f, t);
        const NCPoly &A = im[f.require("A")], &B = im[f.require("B")];
        const NCPoly &C = im[f.require("C")], &D = im[f.require("D")];
        auto mul = [&](const NCPoly& x, const NCPoly& y) { return nc_mul(x, y, t); };
        struct Rel {
            const char* what;
            NCPoly residual;
        };
        std::vector<Rel> rels = {
            {"D(A).D(B) = q D(B).D(A)", mul(A, B) - q * mul(B, A)},
            {"D(C).D(D) = q D(D).D(C)", mul(C, D) - q * mul(D, C)},
            {"D(A).D(C) = q D(C).D(A)", mul(A, C) - q * mul(C, A)},
            {"D(B).D(D) = q D(D).D(B)", mul(B, D) - q * mul(D, B)},
            {"D(B).D(C) = D(C).D(B)", mul(B, C) - mul(C, B)},
            {"D(A).D(D) - D(D).D(A) = (q-q^-1) D(B).D(C)",
             mul(A, D) - mul(D, A) - (q - qi) * mul(B, C)},
        };
        if (std::string(key) == "funq_sl2")
            rels.push_back({"D(A).D(D) - q D(B).D(C) = 1(x)1",
                            mul(A, D) - q * mul(B, C) - NCPoly::unit()});
        for (const auto& r : rels)
            if (!r.residual.is_zero())
                return CheckReport::failed(name, CheckMode::exact,
                                           std::string(key) + ": " + r.what +
                                               " fails: " + t.poly_str(r.residual));
    }
    return CheckReport::pass_exact(name);
}

/// Corepresentation property: sum_l t_il (x) t_lj = Delta(t_ij) for every
/// entry, verified exactly in the tensor square of the ambient presentation.
inline CheckReport check_corepresentation(const NCMatrix& t, const std::string& name) {
    const Presentation& f = t.ambient();
    const Presentation tp = tensor_presentation(f, f);
    const int off = f.num_generators();
    const auto images = fun_coproduct_images(f, tp);
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j) {
            NCPoly sum;
            for (int l = 0; l < t.cols(); ++l)
                sum = sum + nc_mul(lift_indices(t(i, l), 0), lift_indices(t(l, j), off), tp);
            sum = normal_form(sum, tp);
            NCPoly delta = apply_morphism(images, t(i, j), tp);
            if (sum != delta)
                return CheckReport::failed(
                    name, CheckMode::exact,
                    "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        "): sum_l t_il(x)t_lj = " + tp.poly_str(sum) + " but Delta(t_ij) = " +
                        tp.poly_str(delta));
        }
    return CheckReport::pass_exact(name);
}

inline CheckReport check_corep_fund() {
    return check_corepresentation(fundamental_tmatrix(builtin_presentation("funq_sl2")),
                                  "corep-fund");
}
inline CheckReport check_corep_spin1() {
    return check_corepresentation(spin1_tmatrix(builtin_presentation("funq_sl2")),
                                  "corep-spin1");
}

// ---------------------------------------------------------------------------
// Comultiplications on the q-deformed enveloping algebra.
// ---------------------------------------------------------------------------

/// Variant q: K -> K(x)K, E -> E(x)K + K^-1(x)E (same shape for F).
/// Variant q^-1 swaps K and K^-1 inside the E and F images.
inline std::map<int, NCPoly> uq_coproduct_images(const Presentation& uq,
                                                 const Presentation& tensor,
                                                 CoproductVariant v) {
    auto w = [&](const char* x, const char* y) {
        return nc_mul(tensor.gen(x, 0), tensor.gen(y, 1), tensor);
    };
    const char* k = v == CoproductVariant::q ? "K" : "Kinv";
    const char* ki = v == CoproductVariant::q ? "Kinv" : "K";
    std::map<int, NCPoly> images;
    images[uq.require("E")] = w("E", k) + w(ki, "E");
    images[uq.require("F")] = w("F", k) + w(ki, "F");
    images[uq.require("K")] = w("K", "K");
    images[uq.require("Kinv")] = w("Kinv", "Kinv");
    return images;
}

inline NCPoly delta_uq(const NCPoly& p, CoproductVariant v, const Presentation& uq,
                       const Presentation& tensor) {
    return apply_morphism(uq_coproduct_images(uq, tensor, v), p, tensor);
}

inline CheckReport check_delta_uq(CoproductVariant v) {
    const std::string name =
        v == CoproductVariant::q ? "delta-uq-q" : "delta-uq-qinv";
    const QScalar q = QScalar::q(), qi = QScalar::q_power(-1);
    const QScalar z = (q - qi).inverse();
    const Presentation uq = builtin_presentation("uq_sl2");
    const Presentation t = tensor_presentation(uq, uq);
    auto im = uq_coproduct_images(uq, t, v);
    const NCPoly &E = im[uq.require("E")], &F = im[uq.require("F")];
    const NCPoly &K = im[uq.require("K")], &Ki = im[uq.require("Kinv")];
    auto mul = [&](const NCPoly& x, const NCPoly& y) { return nc_mul(x, y, t); };
    struct Rel {
        const char* what;
        NCPoly residual;
    };
    const Rel rels[] = {
        {"D(K).D(E) = q D(E).D(K)", mul(K, E) - q * mul(E, K)},
        {"D(K).D(F) = q^-1 D(F).D(K)", mul(K, F) - qi * mul(F, K)},
        {"[D(E),D(F)] = (D(K)^2 - D(K^-1)^2)/(q-q^-1)",
         mul(E, F) - mul(F, E) - z * (mul(K, K) - mul(Ki, Ki))},
        {"D(K).D(K^-1) = 1(x)1", mul(K, Ki) - NCPoly::unit()},
    };
    for (const auto& r : rels)
        if (!r.residual.is_zero())
            return CheckReport::failed(name, CheckMode::exact,
                                       std::string(r.what) + " fails: " + t.poly_str(r.residual));
    return CheckReport::pass_exact(name);
}

/// The opposite coproduct is the slot flip of the first one, and the two
/// differ as polynomials (the noncocommutativity witness goes in the notes).
inline CheckReport check_delta_flip() {
    const std::string name = "delta-flip";
    const Presentation uq = builtin_presentation("uq_sl2");
    const Presentation t = tensor_presentation(uq, uq);
    const int off = uq.num_generators();
    std::map<int, NCPoly> flip;
    for (int i = 0; i < off; ++i) {
        flip[i] = NCPoly::from_gen(i + off);
        flip[i + off] = NCPoly::from_gen(i);
    }
    auto dq = uq_coproduct_images(uq, t, CoproductVariant::q);
    auto dqi = uq_coproduct_images(uq, t, CoproductVariant::q_inverse);
    for (const char* gname : {"E", "F", "K", "Kinv"}) {
        int g = uq.require(gname);
        NCPoly flipped = apply_morphism(flip, dq[g], t);
        if (flipped != dqi[g])
            return CheckReport::failed(name, CheckMode::exact,
                                       std::string("tau(Delta_q(") + gname +
                                           ")) != Delta_{q^-1}(" + gname + ")");
    }
    NCPoly witness = dq[uq.require("E")] - dqi[uq.require("E")];
    if (witness.is_zero())
        return CheckReport::failed(name, CheckMode::exact,
                                   "coproduct variants coincide; deformation lost");
    CheckReport r = CheckReport::pass_exact(name);
    r.convention_notes = "noncocommutativity: Delta_q(E) - Delta_{q^-1}(E) = " +
                         t.poly_str(normal_form(witness, t));
    return r;
}

}  // namespace qalg
