// End-to-end checks of the CLI binary and the shipped fixtures.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "webcalc/web.hpp"

using namespace webcalc;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& cmd) {
    std::string full = cmd + " 2>&1";
    FILE* p = popen(full.c_str(), "r");
    RunResult r{-1, {}};
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WEXITSTATUS(status);
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(WEBCALC_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main() {
    std::string bin = WEBCALC_BIN_PATH;

    // check certifies sT2 = T2 and the two T3 recursions
    expect(run(bin + " check " + fixture("sT2_N2.web") + " " + fixture("T2_N2.web")).code == 0,
           "sT2 = T2");
    expect(run(bin + " check " + fixture("T3_rec1_N2.web") + " " + fixture("T3_rec2_N2.web"))
                   .code == 0,
           "two T3 recursions agree");
    expect(run(bin + " check " + fixture("u_N2.web") + " " + fixture("s_N2.web")).code == 1,
           "u and s are unequal with exit 1");

    // eval: dumps and exit codes
    RunResult empty = run(bin + " eval " + fixture("empty_N2.web"));
    expect(empty.code == 0 && empty.out.find("()\t()\t1") != std::string::npos,
           "empty word evaluates to the 1x1 identity");
    RunResult circ = run(bin + " eval " + fixture("circle1_zeta_N3.web"));
    expect(circ.code == 0 && circ.out.empty(), "essential 1-circle at N=3 evaluates to 0");
    RunResult qcirc = run(bin + " eval " + fixture("circle1_q_N2.web"));
    expect(qcirc.code == 0 && qcirc.out.find("q + q^-1") != std::string::npos,
           "planar circle evaluates to q + q^-1");
    RunResult t2dump = run(bin + " eval " + fixture("T2_N2.web"));
    expect(t2dump.code == 0 && t2dump.out.find("{1}|{1}\t{1}|{1}\t1") != std::string::npos &&
               t2dump.out.find("{2}|{2}\t{2}|{2}\t1") != std::string::npos,
           "T2 dump has the two diagonal entries");

    // parse error -> exit 2
    {
        std::string bad = std::filesystem::temp_directory_path() / "webcalc_bad.web";
        std::ofstream(bad) << "N=2 mode=zeta annular=1\n[merge@1(1,1]\n";
        expect(run(bin + " eval " + bad).code == 2, "parse error exits 2");
    }
    // boundary mismatch between files -> exit 3
    expect(run(bin + " check " + fixture("T2_N2.web") + " " + fixture("T3_rec1_N2.web")).code == 3,
           "boundary mismatch exits 3");
    // unknown suite -> exit 2
    expect(run(bin + " suite nosuch").code == 2, "unknown suite exits 2");

    // parse/print round trip on every fixture
    for (auto& entry : std::filesystem::directory_iterator(WEBCALC_FIXTURE_DIR)) {
        if (entry.path().extension() != ".web") continue;
        ParsedFile pf = parse_web_file(slurp(entry.path().string()));
        std::string printed = print_web(pf.expr);
        WebExpr again = parse_web(printed, pf.mode, pf.N, pf.annular);
        expect(print_web(again) == printed,
               "round trip on " + entry.path().filename().string());
    }

    // named suites advertised by the spec surface run clean at their ranges
    expect(run(bin + " --jobs 4 suite tm --N 2..4").code == 0, "suite tm --N 2..4");
    expect(run(bin + " --jobs 4 suite newton --N 2..3 --k 2..4").code == 0,
           "suite newton --N 2..3 --k 2..4");
    expect(run(bin + " --jobs 4 suite end2 --N 2..5").code == 0, "suite end2 --N 2..5");
    expect(run(bin + " --jobs 2 suite spanning --N 2..3").code == 0, "suite spanning");

    // deterministic reports: identical invocations agree byte for byte
    {
        std::string a = run(bin + " --format json --jobs 2 suite tm --N 2..2").out;
        std::string b = run(bin + " --format json --jobs 2 suite tm --N 2..2").out;
        auto strip = [](std::string s) {
            std::string r;
            std::istringstream is(s);
            std::string line;
            while (std::getline(is, line))
                if (line.find("millis") == std::string::npos) r += line + "\n";
            return r;
        };
        expect(strip(a) == strip(b), "suite reports deterministic modulo timings");
    }

    // char command
    {
        RunResult ch = run(bin + " char T:2 --N 2");
        expect(ch.code == 0 && ch.out.find("X1^2 + X2^2") != std::string::npos,
               "char T:2 prints p_2");
        expect(run(bin + " char T:2 --N 2 --mode q").code == 2, "char requires zeta mode");
    }

    // projector cache round trip through WEBCALC_CACHE_DIR
    {
        auto dir = std::filesystem::temp_directory_path() / "webcalc_cache_test";
        std::filesystem::remove_all(dir);
        std::string env = "WEBCALC_CACHE_DIR=" + dir.string() + " ";
        expect(run(env + bin + " char T:3 --N 2").code == 0, "char with cache dir");
        bool has_file = std::filesystem::exists(dir) &&
                        !std::filesystem::is_empty(dir);
        expect(has_file, "cache dir populated");
        RunResult second = run(env + bin + " char T:3 --N 2");
        expect(second.code == 0 && second.out.find("X1^3 + X2^3") != std::string::npos,
               "cached projector reloads");
    }

    if (failures == 0) std::cout << "test_cli: all checks passed\n";
    return failures == 0 ? 0 : 1;
}
