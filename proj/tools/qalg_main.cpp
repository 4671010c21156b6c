// Command-line front end: run verification suites, emit catalog objects,
// evaluate q-series. Exit codes: 0 pass, 1 fail or domain error, 2 usage.

#include "qalg/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using qalg::QScalar;
using qalg::QValue;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Parse "a", "a+bi", "a-bi", "bi".
std::optional<QValue> parse_complex(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::string t = text;
    bool imag_only = t.back() == 'i' || t.back() == 'I';
    try {
        if (!imag_only) {
            size_t used = 0;
            double re = std::stod(t, &used);
            if (used == t.size()) return QValue(re, 0.0);
            return std::nullopt;
        }
        t.pop_back();  // drop the 'i'
        // split at the last +/- that is not an exponent sign or leading
        for (size_t k = t.size(); k-- > 1;) {
            if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
                size_t used = 0;
                double re = std::stod(t.substr(0, k), &used);
                if (used != k) return std::nullopt;
                std::string im_s = t.substr(k);
                double im = (im_s == "+" || im_s == "-") ? (im_s == "-" ? -1.0 : 1.0)
                                                         : std::stod(im_s);
                return QValue(re, im);
            }
        }
        double im = (t.empty() || t == "+") ? 1.0 : (t == "-" ? -1.0 : std::stod(t));
        return QValue(0.0, im);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

/// Exact scalar token: integers, rationals "p/r", and Laurent monomials in
/// s or q ("s", "s^-3", "q^2").
std::optional<QScalar> parse_exact_scalar(const std::string& text) {
    try {
        if (text == "s") return QScalar::s();
        if (text == "q") return QScalar::q();
        if (text.rfind("s^", 0) == 0) return QScalar::s_power(std::stoi(text.substr(2)));
        if (text.rfind("q^", 0) == 0) return QScalar::q_power(std::stoi(text.substr(2)));
        auto slash = text.find('/');
        if (slash != std::string::npos)
            return QScalar::rational(qalg::Int(text.substr(0, slash)),
                                     qalg::Int(text.substr(slash + 1)));
        return QScalar(qalg::Int(text));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::vector<QValue> parse_complex_list(const std::string& text) {
    std::vector<QValue> out;
    if (text.empty() || text == "-") return out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        auto v = parse_complex(tok);
        if (!v) throw qalg::config_error("cannot parse complex number '" + tok + "'");
        out.push_back(*v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitPass;
    }
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return kExitUsage;
    }
    f << text;
    return kExitPass;
}

std::string matrix_csv(const nlohmann::json& m) {
    std::string out;
    for (const auto& row : m["entries"]) {
        std::string line;
        for (const auto& cell : row) {
            if (!line.empty()) line += ",";
            line += cell.get<std::string>();
        }
        out += line + "\n";
    }
    return out;
}

int cmd_verify(const std::string& selector, const std::string& q_text, int d,
               const std::string& format, const std::string& out_path) {
    qalg::CheckParams params;
    params.d = d;
    bool needs_numeric = false;
    for (const auto& def : qalg::check_registry()) {
        bool selected = def.name == selector || selector == "all";
        for (const auto& s : def.suites) selected = selected || s == selector;
        if (selected)
            for (const auto& s : def.suites) needs_numeric = needs_numeric || s == "oscillator";
    }
    if (!q_text.empty()) {
        auto q = parse_complex(q_text);
        if (!q) {
            std::cerr << "cannot parse --q '" << q_text << "'\n";
            return kExitUsage;
        }
        if (needs_numeric && (q->imag() != 0.0 || q->real() <= 0.0)) {
            std::cerr << "the oscillator checks need a positive real q, got " << q_text << "\n";
            return kExitUsage;
        }
        params.q = q->real();
    }
    if (needs_numeric && d < 2) {
        std::cerr << "the oscillator checks need --d >= 2\n";
        return kExitUsage;
    }

    qalg::SuiteResult result;
    try {
        result = qalg::run_suite(selector, params);
    } catch (const qalg::config_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    std::string text =
        format == "json" ? qalg::to_json(result).dump(2) + "\n" : qalg::to_text(result);
    int wr = write_output(text, out_path);
    if (wr != kExitPass) return wr;
    return result.aggregate_pass() ? kExitPass : kExitFail;
}

int cmd_emit(const std::string& object, const std::string& format, const std::string& out_path) {
    using nlohmann::json;
    json doc;
    doc["object"] = object;
    std::vector<std::pair<std::string, json>> blocks;
    try {
        if (object == "R2") {
            blocks.emplace_back("matrix", qalg::matrix_to_json(qalg::fundamental_R().R));
        } else if (object == "R3") {
            qalg::Rep s1 = qalg::builtin_rep("spin1");
            blocks.emplace_back("matrix", qalg::matrix_to_json(qalg::universal_R(s1, s1).R));
        } else if (object == "P") {
            blocks.emplace_back("matrix", qalg::matrix_to_json(qalg::flip_matrix(2)));
        } else if (object == "T-fund") {
            qalg::Presentation param = qalg::builtin_presentation("param_alg");
            blocks.emplace_back(
                "matrix", qalg::matrix_to_json(qalg::universal_T(qalg::builtin_rep("fund"), param)));
        } else if (object == "T1-spin1") {
            qalg::Presentation sl = qalg::builtin_presentation("funq_sl2");
            blocks.emplace_back("matrix", qalg::matrix_to_json(qalg::spin1_tmatrix(sl)));
        } else if (object == "rep-fund" || object == "rep-spin1") {
            qalg::Rep r = qalg::builtin_rep(object == "rep-fund" ? "fund" : "spin1");
            blocks.emplace_back("E", qalg::matrix_to_json(r.E));
            blocks.emplace_back("F", qalg::matrix_to_json(r.F));
            blocks.emplace_back("K", qalg::matrix_to_json(r.K));
            blocks.emplace_back("Kinv", qalg::matrix_to_json(r.Kinv));
        } else {
            std::cerr << "unknown object '" << object << "'\n";
            return kExitUsage;
        }
    } catch (const qalg::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitFail;
    }
    std::string text;
    if (format == "csv") {
        for (const auto& [label, m] : blocks) {
            if (blocks.size() > 1) text += label + "\n";
            text += matrix_csv(m);
        }
    } else {
        for (auto& [label, m] : blocks) doc[label] = std::move(m);
        text = doc.dump(2) + "\n";
    }
    return write_output(text, out_path);
}

int cmd_qseries(const std::string& fn, const std::vector<std::string>& args,
                const std::string& q_text, int terms, const std::string& a_list,
                const std::string& b_list, const std::string& z_text,
                const std::string& out_path) {
    std::optional<QValue> qv;
    if (!q_text.empty()) {
        qv = parse_complex(q_text);
        if (!qv) {
            std::cerr << "cannot parse --q '" << q_text << "'\n";
            return kExitUsage;
        }
    }
    auto int_arg = [&](size_t i) -> std::optional<int> {
        if (i >= args.size()) return std::nullopt;
        try {
            return std::stoi(args[i]);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    };
    auto render_value = [&](const QValue& v) {
        std::string t = std::to_string(v.real());
        if (v.imag() != 0.0)
            t += (v.imag() > 0 ? "+" : "") + std::to_string(v.imag()) + "i";
        return t;
    };

    try {
        std::string text;
        if (fn == "qint" || fn == "qintsym" || fn == "qfact") {
            auto n = int_arg(0);
            if (!n || (*n < 0 && fn != "qintsym")) {
                std::cerr << fn << " needs a nonnegative integer argument\n";
                return kExitUsage;
            }
            QScalar exact = fn == "qint"      ? qalg::q_int_heine(*n)
                            : fn == "qintsym" ? qalg::q_int_sym(*n)
                                              : qalg::q_factorial(*n, QScalar::q());
            text = qv ? render_value(exact.eval(*qv)) : exact.to_string();
        } else if (fn == "qpoch") {
            auto n = int_arg(1);
            if (args.empty() || !n || *n < 0) {
                std::cerr << "qpoch needs <x> <n> with n >= 0\n";
                return kExitUsage;
            }
            if (qv) {
                auto x = parse_complex(args[0]);
                if (!x) {
                    std::cerr << "cannot parse x '" << args[0] << "'\n";
                    return kExitUsage;
                }
                text = render_value(qalg::q_shifted_factorial(*x, *qv, *n));
            } else {
                auto x = parse_exact_scalar(args[0]);
                if (!x) {
                    std::cerr << "exact mode needs x as an integer, rational or s/q monomial\n";
                    return kExitUsage;
                }
                text = qalg::q_shifted_factorial(*x, *n).to_string();
            }
        } else if (fn == "qexp") {
            if (args.empty()) {
                std::cerr << "qexp needs <z>\n";
                return kExitUsage;
            }
            if (qv) {
                auto z = parse_complex(args[0]);
                if (!z) {
                    std::cerr << "cannot parse z '" << args[0] << "'\n";
                    return kExitUsage;
                }
                text = render_value(qalg::q_exp(*z, *qv, terms));
            } else {
                auto z = parse_exact_scalar(args[0]);
                if (!z) {
                    std::cerr << "exact mode needs z as an integer, rational or s/q monomial\n";
                    return kExitUsage;
                }
                text = qalg::q_exp(*z, QScalar::q(), terms).to_string();
            }
        } else if (fn == "phi") {
            if (!qv) {
                std::cerr << "phi is numeric; pass --q\n";
                return kExitUsage;
            }
            auto z = parse_complex(z_text.empty() ? "0" : z_text);
            if (!z) {
                std::cerr << "cannot parse --z '" << z_text << "'\n";
                return kExitUsage;
            }
            text = render_value(qalg::basic_hypergeometric(parse_complex_list(a_list),
                                                           parse_complex_list(b_list), *qv, *z,
                                                           terms));
        } else {
            std::cerr << "unknown function '" << fn << "'\n";
            return kExitUsage;
        }
        return write_output(text + "\n", out_path);
    } catch (const qalg::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitFail;
    } catch (const qalg::config_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suites for q-deformed algebras"};
    app.require_subcommand(1);

    // verify
    std::string v_name = "all", v_suite, v_q, v_format = "text", v_out;
    int v_d = 8;
    auto* verify = app.add_subcommand("verify", "run a suite or a single check");
    verify->add_option("name", v_name, "suite or check name (default: all)");
    verify->add_option("--suite", v_suite, "suite name (overrides the positional)");
    verify->add_option("--q", v_q, "deformation parameter for numeric checks (a+bi accepted)");
    verify->add_option("--d", v_d, "Fock truncation / grid size for numeric checks");
    verify->add_option("--format", v_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", v_out, "write the report to this path");

    // emit
    std::string e_object, e_format = "json", e_out;
    auto* emit = app.add_subcommand("emit", "print a catalog object");
    emit->add_option("object", e_object,
                     "one of R2, R3, P, T-fund, T1-spin1, rep-fund, rep-spin1")
        ->required();
    emit->add_option("--format", e_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    emit->add_option("--out", e_out, "write to this path");

    // qseries
    std::string s_fn, s_q, s_a, s_b, s_z, s_out;
    std::vector<std::string> s_args;
    int s_terms = 20;
    auto* qseries = app.add_subcommand("qseries", "evaluate q-series functions");
    qseries->add_option("fn", s_fn, "one of qint, qintsym, qfact, qpoch, qexp, phi")->required();
    qseries->add_option("args", s_args, "positional arguments of the function");
    qseries->add_option("--q", s_q, "evaluate numerically at this q (a+bi accepted)");
    qseries->add_option("--terms", s_terms, "series truncation order");
    qseries->add_option("--a", s_a, "comma-separated upper parameters (phi)");
    qseries->add_option("--b", s_b, "comma-separated lower parameters (phi)");
    qseries->add_option("--z", s_z, "series argument (phi)");
    qseries->add_option("--out", s_out, "write to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    if (verify->parsed())
        return cmd_verify(v_suite.empty() ? v_name : v_suite, v_q, v_d, v_format, v_out);
    if (emit->parsed()) return cmd_emit(e_object, e_format, e_out);
    return cmd_qseries(s_fn, s_args, s_q, s_terms, s_a, s_b, s_z, s_out);
}
