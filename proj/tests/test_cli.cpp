#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// Golden tests for the command-line front end. The binary path arrives via
// the QALG_CLI environment variable (set by the test harness).

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
};

bool cli_available() { return std::getenv("QALG_CLI") != nullptr; }

#define REQUIRE_CLI()                                             \
    if (!cli_available()) {                                       \
        MESSAGE("QALG_CLI not set; run through ctest to enable"); \
        return;                                                   \
    }

CmdResult run_cmd(const std::string& args) {
    const char* cli = std::getenv("QALG_CLI");
    REQUIRE(cli != nullptr);
    std::string full = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

TEST_CASE("qseries golden outputs") {
    REQUIRE_CLI();
    CHECK(run_cmd("qseries qintsym 4").out == "s^6 + s^2 + s^-2 + s^-6\n");
    CHECK(run_cmd("qseries qint 0").out == "0\n");
    CHECK(run_cmd("qseries qint 3").out == "s^4 + s^2 + 1\n");
    CHECK(run_cmd("qseries qfact 2").out == "s^2 + 1\n");
    CHECK(run_cmd("qseries qpoch q 1").out == "-s^2 + 1\n");
    // numeric q-exponential agrees with its hypergeometric form
    CmdResult a = run_cmd("qseries qexp 1 --q 0.5 --terms 30");
    CmdResult b = run_cmd("qseries phi --a 0 --q 0.5 --z 0.5 --terms 30");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    // a pole is a domain error with exit 1
    CHECK(run_cmd("qseries qint 5 --q 0").status == 1);
    // unknown function is a usage error
    CHECK(run_cmd("qseries nosuch 1").status == 2);
}

TEST_CASE("emit golden outputs") {
    REQUIRE_CLI();
    CmdResult r2 = run_cmd("emit R2 --format json");
    CHECK(r2.status == 0);
    auto j = nlohmann::json::parse(r2.out);
    CHECK(j["object"] == "R2");
    CHECK(j["matrix"]["rows"] == 4);
    CHECK(j["matrix"]["entries"][0][0] == "s");
    CHECK(j["matrix"]["entries"][1][2] == "s - s^-3");

    CmdResult p = run_cmd("emit P --format csv");
    CHECK(p.out == "1,0,0,0\n0,0,1,0\n0,1,0,0\n0,0,0,1\n");

    CmdResult rep = run_cmd("emit rep-spin1");
    auto jr = nlohmann::json::parse(rep.out);
    CHECK(jr["E"]["entries"][0][1] == "r");
    CHECK(jr["E"]["entries"][1][2] == "s^2 * r");
    CHECK(jr["K"]["entries"][0][0] == "s^2");

    CmdResult tf = run_cmd("emit T-fund");
    auto jt = nlohmann::json::parse(tf.out);
    CHECK(jt["matrix"]["entries"][0][0] == "u");
    CHECK(jt["matrix"]["entries"][0][1] == "u.beta");
    CHECK(jt["matrix"]["entries"][1][0] == "gamma.u");

    // representation CSV stacks labeled blocks
    CmdResult rc = run_cmd("emit rep-fund --format csv");
    CHECK(rc.out.find("E\n0,1\n0,0\n") != std::string::npos);
    CHECK(rc.out.find("K\ns,0\n0,s^-1\n") != std::string::npos);

    CHECK(run_cmd("emit nosuch").status == 2);
}

TEST_CASE("--out writes the same content as standard output") {
    REQUIRE_CLI();
    std::string path = "/tmp/qalg_cli_out_test.json";
    CmdResult direct = run_cmd("emit R2");
    CmdResult redirected = run_cmd("emit R2 --out " + path);
    CHECK(redirected.status == 0);
    CHECK(redirected.out.empty());
    std::string from_file;
    {
        FILE* f = fopen(path.c_str(), "r");
        REQUIRE(f != nullptr);
        char buf[4096];
        size_t n;
        while ((n = fread(buf, 1, sizeof(buf), f)) > 0) from_file.append(buf, n);
        fclose(f);
    }
    std::remove(path.c_str());
    CHECK(from_file == direct.out);
}

TEST_CASE("verify exit codes and text format") {
    REQUIRE_CLI();
    CmdResult single = run_cmd("verify rtt");
    CHECK(single.status == 0);
    CHECK(single.out.find("rtt exact pass") != std::string::npos);
    CHECK(single.out.find("aggregate pass") != std::string::npos);

    CHECK(run_cmd("verify --suite oscillator --q -1.0").status == 2);
    CHECK(run_cmd("verify --suite oscillator --q 0.5+1i").status == 2);
    CHECK(run_cmd("verify nosuch").status == 2);

    CmdResult rmx = run_cmd("verify --suite rmatrix --format json");
    CHECK(rmx.status == 0);
    auto j = nlohmann::json::parse(rmx.out);
    CHECK(j["aggregate"] == "pass");
    CHECK(j["suite"] == "rmatrix");
    bool saw_calibration = false;
    for (const auto& c : j["checks"])
        if (c.contains("convention_notes") &&
            c["convention_notes"].get<std::string>().find("calibrated convention") !=
                std::string::npos)
            saw_calibration = true;
    CHECK(saw_calibration);
}

TEST_CASE("reports are byte-stable outside the timing region") {
    REQUIRE_CLI();
    CmdResult a = run_cmd("verify --suite qgroup --format json");
    CmdResult b = run_cmd("verify --suite qgroup --format json");
    auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
    ja.erase("timings");
    jb.erase("timings");
    CHECK(ja.dump() == jb.dump());
    // and the text format is stable outright
    CmdResult ta = run_cmd("verify --suite plane");
    CmdResult tb = run_cmd("verify --suite plane");
    CHECK(ta.out == tb.out);
}

TEST_CASE("oscillator suite accepts parameter overrides") {
    REQUIRE_CLI();
    CmdResult r = run_cmd("verify --suite oscillator --q 1.7 --d 10 --format json");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    for (const auto& c : j["checks"]) {
        CHECK(c["mode"] == "numeric");
        CHECK(c["status"] == "pass");
        CHECK(c["residual"].get<double>() < 1e-9);
    }
}
