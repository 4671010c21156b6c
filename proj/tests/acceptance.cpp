// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// pass. Optional argv[1] is the CLI binary, exercised end to end by the last
// criterion.

#include "qalg/suites.hpp"

#include "support/gen.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

using namespace qalg;

namespace {

struct Criterion {
    std::string id;
    std::string what;
    std::function<bool(std::string&)> run;
};

bool require(bool ok, const std::string& detail, std::string& why) {
    if (!ok && why.empty()) why = detail;
    return ok;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    std::vector<Criterion> criteria;

    criteria.push_back({"criterion-01", "fundamental R matches the catalog form exactly, < 10 ms",
                        [](std::string& why) {
                            auto t0 = std::chrono::steady_clock::now();
                            RMatrixValue r = fundamental_R();
                            const char* expect[4][4] = {{"s", "0", "0", "0"},
                                                        {"0", "s^-1", "s - s^-3", "0"},
                                                        {"0", "0", "s^-1", "0"},
                                                        {"0", "0", "0", "s"}};
                            bool ok = true;
                            for (int i = 0; i < 4; ++i)
                                for (int j = 0; j < 4; ++j)
                                    ok = require(r.R(i, j).to_string() == expect[i][j],
                                                 "entry mismatch at (" + std::to_string(i + 1) +
                                                     "," + std::to_string(j + 1) + ")",
                                                 why) && ok;
                            double el = ms_since(t0);
                            return require(el < 10.0, "took " + std::to_string(el) + " ms", why) &&
                                   ok;
                        }});

    criteria.push_back(
        {"criterion-02", "Yang-Baxter and braid relations for the fundamental matrix, < 1 s",
         [](std::string& why) {
             auto t0 = std::chrono::steady_clock::now();
             bool ok = require(check_ybe(fundamental_R(), "ybe-2").passed(), "ybe fails", why);
             ok = require(check_braid(fundamental_R(), "braid-2").passed(), "braid fails", why) &&
                  ok;
             ok = require(check_braid_far_commute(fundamental_R(), "braid-far").passed(),
                          "far commutation fails", why) &&
                  ok;
             double el = ms_since(t0);
             return require(el < 1000.0, "took " + std::to_string(el) + " ms", why) && ok;
         }});

    criteria.push_back(
        {"criterion-03",
         "universal construction: 2-dim matches up to one scalar, 3-dim truncates rho-free and "
         "satisfies Yang-Baxter, < 30 s",
         [](std::string& why) {
             auto t0 = std::chrono::steady_clock::now();
             Rep fund = builtin_rep("fund"), s1 = builtin_rep("spin1");
             RMatrixValue u2 = universal_R(fund, fund);
             auto lambda = proportionality_scalar(u2.R, fundamental_R().R);
             bool ok = require(lambda.has_value(), "2-dim output not proportional", why);
             if (lambda)
                 std::printf("        scalar vs catalog fundamental matrix: %s\n",
                             lambda->to_string().c_str());
             ok = require(check_intertwiner(u2, fund, fund, "i2").passed(),
                          "2-dim intertwiner fails", why) &&
                  ok;
             bool truncates_at_2 = true;
             try {
                 universal_R(s1, s1, 2);
             } catch (const domain_error&) {
                 truncates_at_2 = false;
             }
             ok = require(truncates_at_2, "3-dim series does not truncate at order 2", why) && ok;
             RMatrixValue u3 = universal_R(s1, s1);
             ok = require(u3.R.is_rho_free(), "3-dim output carries an unsquared radical", why) &&
                  ok;
             ok = require(check_ybe(u3, "ybe-3").passed(),
                          "Yang-Baxter fails on the 27-dimensional space", why) &&
                  ok;
             double el = ms_since(t0);
             return require(el < 30000.0, "took " + std::to_string(el) + " ms", why) && ok;
         }});

    criteria.push_back({"criterion-04", "defining relations hold for both catalog representations",
                        [](std::string& why) {
                            bool ok = require(check_rep(builtin_rep("fund")).passed(),
                                              "2-dim representation fails", why);
                            return require(check_rep(builtin_rep("spin1")).passed(),
                                           "3-dim representation fails", why) &&
                                   ok;
                        }});

    criteria.push_back(
        {"criterion-05", "corepresentation property for the 2x2 and 3x3 quantum matrices",
         [](std::string& why) {
             CheckReport fund = check_corep_fund();
             bool ok = require(fund.passed(), "2x2: " + fund.witness, why);
             CheckReport s1 = check_corep_spin1();
             return require(s1.passed(), "3x3: " + s1.witness, why) && ok;
         }});

    criteria.push_back(
        {"criterion-06", "comultiplications: quantum matrix, both enveloping variants, flip",
         [](std::string& why) {
             bool ok = require(check_delta_fun().passed(), "quantum-matrix images fail", why);
             ok = require(check_delta_uq(CoproductVariant::q).passed(), "variant q fails", why) &&
                  ok;
             ok = require(check_delta_uq(CoproductVariant::q_inverse).passed(),
                          "variant q^-1 fails", why) &&
                  ok;
             CheckReport flip = check_delta_flip();
             ok = require(flip.passed(), "flip identity fails", why) && ok;
             return require(!flip.convention_notes.empty(),
                            "no noncocommutativity witness produced", why) &&
                    ok;
         }});

    criteria.push_back(
        {"criterion-07", "exchange relations: 16 zero entries plus noncommutativity witness, and "
                         "all three triangular-realization relations",
         [](std::string& why) {
             CheckReport rtt = check_rtt();
             bool ok = require(rtt.passed(), "exchange relation fails: " + rtt.witness, why);
             ok = require(rtt.convention_notes.find("nonzero") != std::string::npos,
                          "no noncommutativity witness", why) &&
                  ok;
             for (auto kind : {RllKind::pp, RllKind::mm, RllKind::pm}) {
                 CheckReport r = check_rll(kind);
                 ok = require(r.passed(), r.name + " fails: " + r.witness, why) && ok;
             }
             return ok;
         }});

    criteria.push_back({"criterion-08", "covariance of the q-calculus, exact plus classical limit",
                        [](std::string& why) {
                            CheckReport r = check_covariance();
                            return require(r.passed(), r.witness, why);
                        }});

    criteria.push_back({"criterion-09", "quantum matrix inverse and determinant centrality",
                        [](std::string& why) {
                            CheckReport ti = check_t_inverse();
                            bool ok = require(ti.passed(), ti.witness, why);
                            CheckReport dc = check_detq_central();
                            return require(dc.passed(), dc.witness, why) && ok;
                        }});

    criteria.push_back({"criterion-10", "universal T-matrix reproduces both parametrized forms",
                        [](std::string& why) {
                            CheckReport f = check_universal_T("fund");
                            bool ok = require(f.passed(), "2-dim: " + f.witness, why);
                            CheckReport s = check_universal_T("spin1");
                            return require(s.passed(), "3-dim: " + s.witness, why) && ok;
                        }});

    criteria.push_back(
        {"criterion-11", "oscillator battery at q in {0.5, 0.9, 1.7}, d = 12",
         [](std::string& why) {
             bool ok = true;
             for (double q : {0.5, 0.9, 1.7}) {
                 CheckReport qb = check_qboson_relations(12, q);
                 ok = require(qb.passed() && qb.residual < 1e-9,
                              "deformed ladder fails at q = " + std::to_string(q), why) &&
                      ok;
                 CheckReport suq = check_js_suq2(12, q);
                 ok = require(suq.passed() && suq.residual < 1e-9,
                              "q-rotator fails at q = " + std::to_string(q), why) &&
                      ok;
                 JordanSchwinger js = jordan_schwinger(12, q);
                 ok = require((js.Jp.dagger() - js.Jm).max_abs() < 1e-12,
                              "hermiticity pairing fails", why) &&
                      ok;
                 ok = require(check_addition_rules(12, q, true).passed(),
                              "addition rule (+) fails at q = " + std::to_string(q), why) &&
                      ok;
                 ok = require(check_addition_rules(12, q, false).passed(),
                              "addition rule (-) fails at q = " + std::to_string(q), why) &&
                      ok;
             }
             CheckReport su2 = check_js_su2(12);
             ok = require(su2.passed() && su2.residual < 1e-9, "classical rotator fails", why) &&
                  ok;
             CheckReport cs41 = clock_shift_check(4, 1);
             ok = require(cs41.passed() && cs41.residual < 1e-12, "clock-shift (4,1) fails", why) &&
                  ok;
             CheckReport cs62 = clock_shift_check(6, 2);
             return require(cs62.passed() && cs62.residual < 1e-12, "clock-shift (6,2) fails",
                            why) &&
                    ok;
         }});

    criteria.push_back(
        {"criterion-12", "property suites: rewriting, field axioms, evaluation, scale invariance",
         [](std::string& why) {
             gen::Rng rng(987654);
             bool ok = true;
             for (const char* key : {"quantum_plane", "funq_gl2", "funq_sl2", "uq_sl2", "q_osc",
                                     "param_alg", "covariance"}) {
                 Presentation p = builtin_presentation(key);
                 ok = require(check_confluence(p).passed(),
                              std::string("overlap check fails for ") + key, why) &&
                      ok;
                 for (int i = 0; i < 500; ++i) {
                     Word w = gen::random_word(rng, p.num_generators(), 6);
                     NCPoly poly = NCPoly::from_word(w);
                     NCPoly nf = normal_form(poly, p);
                     if (!require(normal_form(nf, p) == nf,
                                  std::string("reduction not idempotent in ") + key, why)) {
                         ok = false;
                         break;
                     }
                     if (!require(normal_form_random(poly, p, rng) == nf,
                                  std::string("order-dependent normal form in ") + key, why)) {
                         ok = false;
                         break;
                     }
                 }
             }
             for (int i = 0; i < 100; ++i) {
                 QScalar x = gen::random_nonzero_qscalar(rng);
                 ok = require((x * x.inverse()).is_one(), "field inverse fails", why) && ok;
             }
             int done = 0;
             while (done < 100) {
                 QScalar x = gen::random_qscalar(rng), y = gen::random_qscalar(rng);
                 QValue q = gen::random_q(rng);
                 try {
                     double scale_ref = std::max({1.0, std::abs(x.eval(q)), std::abs(y.eval(q))});
                     ok = require(std::abs((x + y).eval(q) - (x.eval(q) + y.eval(q))) <=
                                      1e-9 * scale_ref,
                                  "evaluation is not additive", why) &&
                          ok;
                     ok = require(std::abs((x * y).eval(q) - x.eval(q) * y.eval(q)) <=
                                      1e-9 * (1.0 + std::abs(x.eval(q) * y.eval(q))),
                                  "evaluation is not multiplicative", why) &&
                          ok;
                     ++done;
                 } catch (const domain_error&) {
                 }
             }
             for (int n = 1; n <= 8; ++n)
                 ok = require(invert_q(q_int_sym(n)) == q_int_sym(n),
                              "symmetric q-integer moves under q -> 1/q", why) &&
                      ok;
             QScalar c = gen::random_nonzero_qscalar(rng);
             if (!c.is_rho_free()) c = c * c;
             RMatrixValue scaled = fundamental_R();
             scaled.R = c * scaled.R;
             Rep fund = builtin_rep("fund");
             ok = require(check_ybe(scaled, "ybe-scaled").passed(), "scaled ybe fails", why) && ok;
             ok = require(check_braid(scaled, "braid-scaled").passed(), "scaled braid fails",
                          why) &&
                  ok;
             ok = require(check_intertwiner(scaled, fund, fund, "int-scaled").passed(),
                          "scaled intertwiner fails", why) &&
                  ok;
             RepMatrix scaled_rtt = c * rtt_R();
             ok = require(check_rtt(&scaled_rtt).passed(), "scaled exchange relation fails",
                          why) &&
                  ok;
             return ok;
         }});

    criteria.push_back(
        {"criterion-13", "full suite under 60 s with a passing aggregate",
         [&cli](std::string& why) {
             auto t0 = std::chrono::steady_clock::now();
             SuiteResult all = run_suite("all", CheckParams{});
             double el = ms_since(t0);
             bool ok = require(all.aggregate_pass(), "aggregate fail in-process", why);
             ok = require(el < 60000.0, "took " + std::to_string(el) + " ms", why) && ok;
             if (!cli.empty()) {
                 std::string cmd = cli + " verify --suite all --format json --out /dev/null";
                 int rc = std::system(cmd.c_str());
                 int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
                 ok = require(code == 0,
                              "CLI exit code " + std::to_string(code) + " for the full suite",
                              why) &&
                      ok;
             }
             return ok;
         }});

    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double el = ms_since(t0);
        std::printf("%s  %s  %s  (%.1f ms)%s%s\n", ok ? "PASS" : "FAIL", c.id.c_str(),
                    c.what.c_str(), el, why.empty() ? "" : "  -- ", why.c_str());
        if (!ok) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
