#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qalg/presentations.hpp"
#include "qalg/qseries.hpp"

#include "support/gen.hpp"

#include <future>

using namespace qalg;

namespace {

NCPoly word_of(const Presentation& p, std::initializer_list<const char*> names) {
    Word w;
    for (const char* n : names) w.push_back(p.require(n));
    return NCPoly::from_word(std::move(w));
}

const QScalar q = QScalar::q();
const QScalar qi = QScalar::q_power(-1);

}  // namespace

TEST_CASE("quantum plane relations") {
    Presentation p = builtin_presentation("quantum_plane");
    // Dy.Y -> 1 + q^2 Y.Dy
    NCPoly nf = normal_form(word_of(p, {"Dy", "Y"}), p);
    NCPoly expect = NCPoly::unit();
    expect.add_term({p.require("Y"), p.require("Dy")}, QScalar::q_power(2));
    CHECK(nf == expect);
    // X.Y = q Y.X
    CHECK(nc_mul(p.gen("X"), p.gen("Y"), p) == q * nc_mul(p.gen("Y"), p.gen("X"), p));
}

TEST_CASE("quantum matrix relations") {
    Presentation p = builtin_presentation("funq_gl2");
    CHECK(normal_form(word_of(p, {"B", "A"}), p) == qi * word_of(p, {"A", "B"}));
    NCPoly da = normal_form(word_of(p, {"D", "A"}), p);
    NCPoly expect = word_of(p, {"A", "D"});
    expect.add_term({p.require("B"), p.require("C")}, -(q - qi));
    CHECK(da == expect);
    // (A+B)^2 = A^2 + (1+q^-1) A.B + B^2
    NCPoly apb = p.gen("A") + p.gen("B");
    NCPoly sq = nc_mul(apb, apb, p);
    NCPoly ref = word_of(p, {"A", "A"}) + word_of(p, {"B", "B"});
    ref.add_term({p.require("A"), p.require("B")}, QScalar::one() + qi);
    CHECK(sq == ref);
}

TEST_CASE("quantum determinant reduces to the unit") {
    Presentation p = builtin_presentation("funq_sl2");
    NCPoly det = word_of(p, {"A", "D"}) - q * word_of(p, {"B", "C"});
    CHECK(normal_form(det, p) == NCPoly::unit());
    // already-normal words are fixed points
    NCPoly w = word_of(p, {"A", "B", "C"});
    CHECK(normal_form(normal_form(w, p), p) == normal_form(w, p));
}

TEST_CASE("q-oscillator relation") {
    Presentation p = builtin_presentation("q_osc");
    NCPoly nf = normal_form(word_of(p, {"A", "Adag"}), p);
    NCPoly expect = NCPoly::from_word({p.require("Adag"), p.require("A")}, q);
    expect.add_term({p.require("KNinv")}, QScalar::one());
    CHECK(nf == expect);
}

TEST_CASE("sl_q(2) commutator of raising and lowering") {
    Presentation p = builtin_presentation("uq_sl2");
    const QScalar z = (q - qi).inverse();
    NCPoly com = commutator(p.gen("E"), p.gen("F"), p);
    NCPoly expect;
    expect.add_term({p.require("K"), p.require("K")}, z);
    expect.add_term({p.require("Kinv"), p.require("Kinv")}, -z);
    CHECK(com == expect);
    CHECK(commutator(p.gen("E"), p.gen("E"), p).is_zero());
    // K.E.Kinv reduces to q E, so [K.E.Kinv, F] = q [E, F]
    NCPoly kek = nc_mul({p.gen("K"), p.gen("E"), p.gen("Kinv")}, p);
    CHECK(kek == q * p.gen("E"));
    CHECK(commutator(kek, p.gen("F"), p) == q * com);
}

TEST_CASE("tensor products of presentations") {
    Presentation f = builtin_presentation("funq_gl2");
    Presentation t = tensor_presentation(f, f);
    const int off = f.num_generators();
    // cross-slot generators commute
    NCPoly ba = NCPoly::from_word({t.require("B", 1), t.require("A", 0)});
    CHECK(normal_form(ba, t) == NCPoly::from_word({t.require("A", 0), t.require("B", 1)}));
    // slot-local rules survive the embedding
    NCPoly ba0 = NCPoly::from_word({t.require("B", 0), t.require("A", 0)});
    CHECK(normal_form(ba0, t) ==
          qi * NCPoly::from_word({t.require("A", 0), t.require("B", 0)}));
    // (A(x)A + B(x)C)^2 = A^2(x)A^2 + AB(x)AC + BA(x)CA + B^2(x)C^2
    NCPoly x = NCPoly::from_word({t.require("A", 0), t.require("A", 1)}) +
               NCPoly::from_word({t.require("B", 0), t.require("C", 1)});
    NCPoly sq = nc_mul(x, x, t);
    auto pair4 = [&](const char* a, const char* b, const char* c, const char* d) {
        return normal_form(NCPoly::from_word({t.require(a, 0), t.require(b, 0),
                                              t.require(c, 1), t.require(d, 1)}),
                           t);
    };
    NCPoly ref = pair4("A", "A", "A", "A") + pair4("A", "B", "A", "C") +
                 pair4("B", "A", "C", "A") + pair4("B", "B", "C", "C");
    CHECK(sq == ref);
    CHECK(off == 4);
}

TEST_CASE("property: tensor factors multiply slotwise") {
    // (P(x)R)(Q(x)S) = PQ (x) RS for the induced product
    gen::Rng rng(8181);
    Presentation f = builtin_presentation("funq_sl2");
    Presentation u = builtin_presentation("uq_sl2");
    Presentation t = tensor_presentation(f, u);
    const int off = f.num_generators();
    auto embed = [&](const NCPoly& left, const NCPoly& right) {
        return nc_mul(lift_indices(left, 0), lift_indices(right, off), t);
    };
    for (int i = 0; i < 50; ++i) {
        NCPoly p = gen::random_ncpoly(rng, f, 2, 3), q = gen::random_ncpoly(rng, f, 2, 3);
        NCPoly r = gen::random_ncpoly(rng, u, 2, 3), s = gen::random_ncpoly(rng, u, 2, 3);
        NCPoly lhs = nc_mul(embed(p, r), embed(q, s), t);
        NCPoly rhs = embed(nc_mul(p, q, f), nc_mul(r, s, u));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("morphism application") {
    Presentation f = builtin_presentation("funq_gl2");
    Presentation t = tensor_presentation(f, f);
    // identity images reproduce the normal form
    std::map<int, NCPoly> ident;
    for (int i = 0; i < f.num_generators(); ++i) ident[i] = NCPoly::from_gen(i);
    gen::Rng rng(421);
    for (int i = 0; i < 20; ++i) {
        NCPoly p = gen::random_ncpoly(rng, f);
        CHECK(apply_morphism(ident, p, f) == normal_form(p, f));
    }
    // all-to-zero images keep only the constant term
    std::map<int, NCPoly> zero;
    for (int i = 0; i < f.num_generators(); ++i) zero[i] = NCPoly();
    NCPoly p = word_of(f, {"A", "B"});
    p.add_term({}, QScalar::rational(7, 2));
    CHECK(apply_morphism(zero, p, f) == NCPoly::constant(QScalar::rational(7, 2)));
    // missing image is a configuration error
    std::map<int, NCPoly> missing;
    CHECK_THROWS_AS(apply_morphism(missing, p, f), config_error);
    // comultiplication images send A.B into the tensor square
    std::map<int, NCPoly> delta;
    auto tg = [&](const char* n, int slot) { return NCPoly::from_gen(t.require(n, slot)); };
    delta[f.require("A")] = nc_mul(tg("A", 0), tg("A", 1), t) + nc_mul(tg("B", 0), tg("C", 1), t);
    delta[f.require("B")] = nc_mul(tg("A", 0), tg("B", 1), t) + nc_mul(tg("B", 0), tg("D", 1), t);
    delta[f.require("C")] = nc_mul(tg("C", 0), tg("A", 1), t) + nc_mul(tg("D", 0), tg("C", 1), t);
    delta[f.require("D")] = nc_mul(tg("C", 0), tg("B", 1), t) + nc_mul(tg("D", 0), tg("D", 1), t);
    NCPoly img = apply_morphism(delta, word_of(f, {"A", "B"}), t);
    CHECK(img == nc_mul(delta[f.require("A")], delta[f.require("B")], t));
}

TEST_CASE("confluence of the catalog presentations") {
    for (const char* key : {"quantum_plane", "funq_gl2", "funq_sl2", "uq_sl2", "q_osc",
                            "param_alg", "covariance"}) {
        CheckReport r = check_confluence(builtin_presentation(key));
        INFO(key, ": ", r.witness);
        CHECK(r.passed());
    }
    Presentation f = builtin_presentation("funq_sl2");
    CHECK(check_confluence(tensor_presentation(f, f)).passed());
}

TEST_CASE("a deliberately inconsistent rule set fails confluence") {
    Presentation p("broken");
    int a = p.add_generator("A"), b = p.add_generator("B");
    p.add_rule(b, a, NCPoly::from_word({a, b}));
    p.add_rule(b, a, NCPoly::from_word({a, b}, qi));
    CheckReport r = check_confluence(p);
    CHECK(!r.passed());
    CHECK(r.witness.find("B.A") != std::string::npos);
}

TEST_CASE("rules must decrease the word order and stay rho-free") {
    Presentation p("bad");
    int a = p.add_generator("A"), b = p.add_generator("B");
    CHECK_THROWS_AS(p.add_rule(a, b, NCPoly::from_word({b, a})), config_error);
    CHECK_THROWS_AS(p.add_rule(b, a, NCPoly::from_word({a, b}, QScalar::rho())), config_error);
    CHECK_THROWS_AS(p.add_generator("A"), config_error);
    CHECK_THROWS_AS(builtin_presentation("nosuch"), config_error);
}

TEST_CASE("property: termination within a bounded rewrite count") {
    gen::Rng rng(90210);
    for (const char* key : {"quantum_plane", "funq_gl2", "funq_sl2", "uq_sl2", "q_osc",
                            "param_alg", "covariance"}) {
        Presentation p = builtin_presentation(key);
        unsigned long long worst = 0;
        for (int i = 0; i < 1000; ++i) {
            Word w = gen::random_word(rng, p.num_generators(), 8);
            unsigned long long steps = 0;
            normal_form(NCPoly::from_word(w), p, &steps);
            worst = std::max(worst, steps);
        }
        INFO(key, " worst case ", worst);
        CHECK(worst < 300000ULL);
    }
}

TEST_CASE("property: random application orders give one normal form") {
    gen::Rng rng(3777);
    for (const char* key : {"quantum_plane", "funq_gl2", "funq_sl2", "uq_sl2", "q_osc",
                            "param_alg", "covariance"}) {
        Presentation p = builtin_presentation(key);
        for (int i = 0; i < 500; ++i) {
            Word w = gen::random_word(rng, p.num_generators(), 6);
            NCPoly poly = NCPoly::from_word(w);
            NCPoly a = normal_form_random(poly, p, rng);
            NCPoly b = normal_form_random(poly, p, rng);
            CHECK(a == b);
            CHECK(a == normal_form(poly, p));
        }
    }
}

TEST_CASE("property: reduction is linear and multiplication associative") {
    gen::Rng rng(60601);
    Presentation p = builtin_presentation("funq_sl2");
    for (int i = 0; i < 100; ++i) {
        NCPoly x = gen::random_ncpoly(rng, p), y = gen::random_ncpoly(rng, p);
        QScalar c = QScalar(gen::random_int(rng, -5, 5)), d = QScalar(gen::random_int(rng, -5, 5));
        CHECK(normal_form(c * x + d * y, p) == c * normal_form(x, p) + d * normal_form(y, p));
    }
    for (const char* key : {"quantum_plane", "funq_gl2", "funq_sl2", "uq_sl2", "q_osc",
                            "param_alg", "covariance"}) {
        Presentation pr = builtin_presentation(key);
        for (int i = 0; i < 100; ++i) {
            NCPoly x = gen::random_ncpoly(rng, pr, 2, 3);
            NCPoly y = gen::random_ncpoly(rng, pr, 2, 3);
            NCPoly z = gen::random_ncpoly(rng, pr, 2, 3);
            CHECK(nc_mul(nc_mul(x, y, pr), z, pr) == nc_mul(x, nc_mul(y, z, pr), pr));
        }
    }
}

TEST_CASE("classical limit of the plane calculus at s = 1") {
    Presentation p = builtin_presentation("quantum_plane").specialized_s(1, 1);
    auto g = [&](const char* n) { return p.gen(n); };
    CHECK(commutator(g("X"), g("Y"), p).is_zero());
    CHECK(commutator(g("Dx"), g("Dy"), p).is_zero());
    CHECK(commutator(g("Dx"), g("Y"), p).is_zero());
    CHECK(commutator(g("Dy"), g("X"), p).is_zero());
    CHECK(commutator(g("Dx"), g("X"), p) == NCPoly::unit());
    CHECK(commutator(g("Dy"), g("Y"), p) == NCPoly::unit());
}

TEST_CASE("concurrent reduction against one shared presentation") {
    Presentation p = builtin_presentation("funq_sl2");
    std::vector<NCPoly> inputs;
    gen::Rng seed_rng(13);
    for (int i = 0; i < 40; ++i) inputs.push_back(gen::random_ncpoly(seed_rng, p, 3, 6));
    std::vector<NCPoly> expected;
    expected.reserve(inputs.size());
    for (const auto& x : inputs) expected.push_back(normal_form(x, p));
    std::vector<std::future<std::vector<NCPoly>>> workers;
    for (int t = 0; t < 4; ++t)
        workers.push_back(std::async(std::launch::async, [&inputs, &p] {
            std::vector<NCPoly> out;
            out.reserve(inputs.size());
            for (const auto& x : inputs) out.push_back(normal_form(x, p));
            return out;
        }));
    for (auto& w : workers) {
        std::vector<NCPoly> got = w.get();
        for (size_t i = 0; i < inputs.size(); ++i) CHECK(got[i] == expected[i]);
    }
}

TEST_CASE("rendering of noncommutative polynomials") {
    Presentation f = builtin_presentation("funq_gl2");
    NCPoly p = normal_form(NCPoly::from_word({f.require("D"), f.require("A")}), f);
    CHECK(f.poly_str(p) == "(-s^2 + s^-2) * B.C + A.D");
    Presentation t = tensor_presentation(f, f);
    CHECK(t.poly_str(NCPoly::from_word({t.require("A", 0), t.require("B", 1)})) == "A.B@1");
    CHECK(f.poly_str(NCPoly()) == "0");
}
