#pragma once

#include "qalg/ncpoly.hpp"

#include <string>

namespace qalg {

// ---------------------------------------------------------------------------
// Catalog of presentations. Generator orders are chosen so every defining
// relation is a valid reduction under the degree-lex word order; the quantum
// determinant is oriented as B.C -> q^-1 (A.D - 1), which is the orientation
// that keeps the order decreasing and the overlap set confluent.
// ---------------------------------------------------------------------------
inline Presentation builtin_presentation(const std::string& key) {
    const QScalar q = QScalar::q();
    const QScalar qi = QScalar::q_power(-1);
    const QScalar q2 = QScalar::q_power(2);
    const QScalar one = QScalar::one();

    if (key == "quantum_plane") {
        Presentation p("quantum_plane");
        int X = p.add_generator("X"), Y = p.add_generator("Y");
        int Dx = p.add_generator("Dx"), Dy = p.add_generator("Dy");
        p.add_rule(Y, X, NCPoly::from_word({X, Y}, qi));
        p.add_rule(Dy, Dx, NCPoly::from_word({Dx, Dy}, q));
        p.add_rule(Dx, Y, NCPoly::from_word({Y, Dx}, q));
        p.add_rule(Dy, X, NCPoly::from_word({X, Dy}, q));
        NCPoly dxx = NCPoly::unit();
        dxx.add_term({X, Dx}, q2);
        dxx.add_term({Y, Dy}, q2 - one);
        p.add_rule(Dx, X, std::move(dxx));
        NCPoly dyy = NCPoly::unit();
        dyy.add_term({Y, Dy}, q2);
        p.add_rule(Dy, Y, std::move(dyy));
        return p;
    }

    if (key == "funq_gl2" || key == "funq_sl2") {
        Presentation p(key);
        int A = p.add_generator("A"), B = p.add_generator("B");
        int C = p.add_generator("C"), D = p.add_generator("D");
        p.add_rule(B, A, NCPoly::from_word({A, B}, qi));
        p.add_rule(C, A, NCPoly::from_word({A, C}, qi));
        p.add_rule(D, B, NCPoly::from_word({B, D}, qi));
        p.add_rule(D, C, NCPoly::from_word({C, D}, qi));
        p.add_rule(C, B, NCPoly::from_word({B, C}));
        NCPoly da = NCPoly::from_word({A, D});
        da.add_term({B, C}, -(q - qi));
        p.add_rule(D, A, std::move(da));
        if (key == "funq_sl2") {
            NCPoly bc = NCPoly::from_word({A, D}, qi);
            bc.add_term({}, -qi);
            p.add_rule(B, C, std::move(bc));
        }
        return p;
    }

    if (key == "uq_sl2") {
        Presentation p("uq_sl2");
        int F = p.add_generator("F"), Kinv = p.add_generator("Kinv");
        int K = p.add_generator("K"), E = p.add_generator("E");
        p.add_rule(K, F, NCPoly::from_word({F, K}, qi));
        p.add_rule(Kinv, F, NCPoly::from_word({F, Kinv}, q));
        p.add_rule(E, K, NCPoly::from_word({K, E}, qi));
        p.add_rule(E, Kinv, NCPoly::from_word({Kinv, E}, q));
        const QScalar z = (q - qi).inverse();
        NCPoly ef = NCPoly::from_word({F, E});
        ef.add_term({K, K}, z);
        ef.add_term({Kinv, Kinv}, -z);
        p.add_rule(E, F, std::move(ef));
        p.add_inverse_pair(K, Kinv);
        return p;
    }

    if (key == "q_osc") {
        Presentation p("q_osc");
        int Ad = p.add_generator("Adag"), KNi = p.add_generator("KNinv");
        int KN = p.add_generator("KN"), A = p.add_generator("A");
        p.add_rule(KN, Ad, NCPoly::from_word({Ad, KN}, q));
        p.add_rule(KNi, Ad, NCPoly::from_word({Ad, KNi}, qi));
        p.add_rule(A, KN, NCPoly::from_word({KN, A}, q));
        p.add_rule(A, KNi, NCPoly::from_word({KNi, A}, qi));
        NCPoly aad = NCPoly::from_word({Ad, A}, q);
        aad.add_term({KNi}, one);
        p.add_rule(A, Ad, std::move(aad));
        p.add_inverse_pair(KN, KNi);
        return p;
    }

    if (key == "param_alg") {
        Presentation p("param_alg");
        int G = p.add_generator("gamma"), Ui = p.add_generator("uinv");
        int U = p.add_generator("u"), B = p.add_generator("beta");
        p.add_rule(U, G, NCPoly::from_word({G, U}, q));
        p.add_rule(Ui, G, NCPoly::from_word({G, Ui}, qi));
        p.add_rule(B, U, NCPoly::from_word({U, B}, qi));
        p.add_rule(B, Ui, NCPoly::from_word({Ui, B}, q));
        p.add_rule(B, G, NCPoly::from_word({G, B}));
        p.add_inverse_pair(U, Ui);
        return p;
    }

    if (key == "covariance") {
        // quantum-matrix entries commute with the plane coordinates and with
        // the partial derivatives; the whole calculus transforms under them.
        return detail::combine(builtin_presentation("funq_sl2"),
                               builtin_presentation("quantum_plane"), 0, "covariance");
    }

    throw config_error("builtin_presentation: unknown key '" + key + "'");
}

}  // namespace qalg
