#pragma once

#include "qalg/osc.hpp"
#include "qalg/qgroup.hpp"
#include "qalg/rmat.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace qalg {

/// Runtime parameters a check may consume. The exact checks ignore them; the
/// oscillator battery reads the truncation d and the deformation q, and the
/// clock-shift check reads d as its grid size.
struct CheckParams {
    double q = 1.3;
    int d = 8;
    int clock_m = 1;
};

struct CheckDef {
    std::string name;
    std::vector<std::string> suites;
    std::function<CheckReport(const CheckParams&)> run;
};

inline const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> defs = [] {
        std::vector<CheckDef> v;
        auto add = [&](std::string name, std::vector<std::string> suites,
                       std::function<CheckReport(const CheckParams&)> run) {
            v.push_back({std::move(name), std::move(suites), std::move(run)});
        };

        add("covariance", {"plane", "qgroup"}, [](const CheckParams&) { return check_covariance(); });
        add("detq-central", {"qgroup"}, [](const CheckParams&) { return check_detq_central(); });
        add("t-inverse", {"qgroup"}, [](const CheckParams&) { return check_t_inverse(); });
        add("delta-fun", {"qgroup"}, [](const CheckParams&) { return check_delta_fun(); });
        add("corep-fund", {"qgroup"}, [](const CheckParams&) { return check_corep_fund(); });
        add("corep-spin1", {"qgroup"}, [](const CheckParams&) { return check_corep_spin1(); });
        add("delta-uq-q", {"qgroup"},
            [](const CheckParams&) { return check_delta_uq(CoproductVariant::q); });
        add("delta-uq-qinv", {"qgroup"},
            [](const CheckParams&) { return check_delta_uq(CoproductVariant::q_inverse); });
        add("delta-flip", {"qgroup"}, [](const CheckParams&) { return check_delta_flip(); });

        add("rep-fund", {"universal-t"},
            [](const CheckParams&) { return check_rep(builtin_rep("fund")); });
        add("rep-spin1", {"universal-t"},
            [](const CheckParams&) { return check_rep(builtin_rep("spin1")); });
        add("ut-fund", {"universal-t"},
            [](const CheckParams&) { return check_universal_T("fund"); });
        add("ut-spin1", {"universal-t"},
            [](const CheckParams&) { return check_universal_T("spin1"); });

        add("r-fund", {"rmatrix"}, [](const CheckParams&) {
            const std::string name = "r-fund";
            RMatrixValue r = fundamental_R();
            const char* expect[4][4] = {{"s", "0", "0", "0"},
                                        {"0", "s^-1", "s - s^-3", "0"},
                                        {"0", "0", "s^-1", "0"},
                                        {"0", "0", "0", "s"}};
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    if (r.R(i, j).to_string() != expect[i][j])
                        return CheckReport::failed(
                            name, CheckMode::exact,
                            "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") = " + r.R(i, j).to_string() + ", expected " + expect[i][j]);
            if (r.R * r.R.inverse() != RepMatrix::identity(4))
                return CheckReport::failed(name, CheckMode::exact, "exact inverse fails");
            CheckReport rep = CheckReport::pass_exact(name);
            rep.convention_notes = r.note;
            return rep;
        });
        add("r-universal-2", {"rmatrix"}, [](const CheckParams&) {
            const std::string name = "r-universal-2";
            Rep fund = builtin_rep("fund");
            RMatrixValue u = universal_R(fund, fund);
            auto lambda = proportionality_scalar(u.R, fundamental_R().R);
            if (!lambda)
                return CheckReport::failed(name, CheckMode::exact,
                                           "not proportional to the catalog fundamental matrix");
            CheckReport rep = CheckReport::pass_exact(name);
            rep.convention_notes =
                u.note + "; overall scalar vs catalog fundamental matrix: " + lambda->to_string();
            return rep;
        });
        add("r-universal-3", {"rmatrix"}, [](const CheckParams&) {
            const std::string name = "r-universal-3";
            Rep s1 = builtin_rep("spin1");
            RMatrixValue u = universal_R(s1, s1);
            if (!u.R.is_rho_free())
                return CheckReport::failed(name, CheckMode::exact,
                                           "radical appears unsquared in an entry");
            if (u.R * u.R.inverse() != RepMatrix::identity(9))
                return CheckReport::failed(name, CheckMode::exact, "exact inverse fails");
            CheckReport rep = CheckReport::pass_exact(name);
            rep.convention_notes = u.note;
            return rep;
        });
        add("ybe-2", {"rmatrix"},
            [](const CheckParams&) { return check_ybe(fundamental_R(), "ybe-2"); });
        add("ybe-3", {"rmatrix"}, [](const CheckParams&) {
            Rep s1 = builtin_rep("spin1");
            return check_ybe(universal_R(s1, s1), "ybe-3");
        });
        add("braid-2", {"rmatrix"},
            [](const CheckParams&) { return check_braid(fundamental_R(), "braid-2"); });
        add("braid-far-commute", {"rmatrix"}, [](const CheckParams&) {
            return check_braid_far_commute(fundamental_R(), "braid-far-commute");
        });
        add("intertwine-2", {"rmatrix"}, [](const CheckParams&) {
            Rep fund = builtin_rep("fund");
            return check_intertwiner(fundamental_R(), fund, fund, "intertwine-2");
        });
        add("intertwine-3", {"rmatrix"}, [](const CheckParams&) {
            Rep s1 = builtin_rep("spin1");
            return check_intertwiner(universal_R(s1, s1), s1, s1, "intertwine-3");
        });
        add("rtt", {"rmatrix"}, [](const CheckParams&) { return check_rtt(); });
        add("rll-pp", {"rmatrix"}, [](const CheckParams&) { return check_rll(RllKind::pp); });
        add("rll-mm", {"rmatrix"}, [](const CheckParams&) { return check_rll(RllKind::mm); });
        add("rll-pm", {"rmatrix"}, [](const CheckParams&) { return check_rll(RllKind::pm); });

        add("boson-ccr", {"oscillator"},
            [](const CheckParams& p) { return check_boson_ccr(p.d); });
        add("qboson-relations", {"oscillator"},
            [](const CheckParams& p) { return check_qboson_relations(p.d, p.q); });
        add("js-su2", {"oscillator"}, [](const CheckParams& p) { return check_js_su2(p.d); });
        add("js-suq2", {"oscillator"},
            [](const CheckParams& p) { return check_js_suq2(p.d, p.q); });
        add("addition-q", {"oscillator"},
            [](const CheckParams& p) { return check_addition_rules(p.d, p.q, true); });
        add("addition-qinv", {"oscillator"},
            [](const CheckParams& p) { return check_addition_rules(p.d, p.q, false); });
        add("clock-shift", {"oscillator"},
            [](const CheckParams& p) { return clock_shift_check(p.d, p.clock_m); });

        std::sort(v.begin(), v.end(),
                  [](const CheckDef& a, const CheckDef& b) { return a.name < b.name; });
        return v;
    }();
    return defs;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"all",       "plane",   "qgroup",
                                                   "universal-t", "rmatrix", "oscillator"};
    return names;
}

inline bool is_suite_name(const std::string& s) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), s) != n.end();
}

/// Run a suite or a single named check, in name order, catching check-level
/// exceptions into error reports.
inline SuiteResult run_suite(const std::string& selector, const CheckParams& params) {
    SuiteResult result;
    result.suite = selector;
    bool any = false;
    for (const auto& def : check_registry()) {
        bool selected = def.name == selector || selector == "all";
        if (!selected)
            selected = std::find(def.suites.begin(), def.suites.end(), selector) !=
                       def.suites.end();
        if (!selected) continue;
        any = true;
        auto start = std::chrono::steady_clock::now();
        CheckReport report;
        try {
            report = def.run(params);
        } catch (const std::exception& e) {
            report = CheckReport::errored(def.name, CheckMode::exact, e.what());
        }
        report.duration_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        result.checks.push_back(std::move(report));
    }
    if (!any) throw config_error("run_suite: unknown suite or check '" + selector + "'");
    return result;
}

}  // namespace qalg
