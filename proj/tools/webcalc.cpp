#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "webcalc/projectors.hpp"
#include "webcalc/suites.hpp"
#include "webcalc/symfun.hpp"

using namespace webcalc;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    out << text;
}

// N range syntax: "3" or "2..4"
std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(s);
        return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

constexpr int EXIT_UNEQUAL = 1;
constexpr int EXIT_PARSE = 2;
constexpr int EXIT_BOUNDARY = 3;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact evaluator and identity checker for annular gl(N) webs"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    int jobs = 1;
    app.add_option("--format", format, "report format: text or json");
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--jobs", jobs, "number of worker threads for suites");

    auto* cmd_eval = app.add_subcommand("eval", "evaluate a web expression file to an operator dump");
    std::string eval_file;
    cmd_eval->add_option("file", eval_file)->required();

    auto* cmd_check = app.add_subcommand("check", "compare the evaluations of two web files");
    std::string file_a, file_b;
    cmd_check->add_option("fileA", file_a)->required();
    cmd_check->add_option("fileB", file_b)->required();

    auto* cmd_suite = app.add_subcommand("suite", "run a named identity suite");
    std::string suite_name, n_range = "2..2", k_range = "2..4";
    cmd_suite->add_option("name", suite_name)->required();
    cmd_suite->add_option("--N", n_range, "rank range, e.g. 2..4");
    cmd_suite->add_option("--k", k_range, "k range for the newton suite, e.g. 2..4");

    auto* cmd_char = app.add_subcommand("char", "character of a named projector");
    std::string char_key;
    int char_N = 2;
    std::string char_mode = "zeta";
    cmd_char->add_option("key", char_key, "projector key, e.g. T:3, P:2, Vclasp:2, O:3, part:2+1")
        ->required();
    cmd_char->add_option("--N", char_N, "ambient rank");
    cmd_char->add_option("--mode", char_mode, "must be zeta");

    auto* cmd_list = app.add_subcommand("list", "list suites and projector kinds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_PARSE;
    }

    try {
        if (*cmd_eval) {
            ParsedFile pf;
            try {
                pf = parse_web_file(slurp(eval_file));
            } catch (const std::exception& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return EXIT_PARSE;
            }
            EvalConfig cfg{pf.N, pf.mode};
            emit(out_path, evaluate(pf.expr, cfg).dump());
            return 0;
        }
        if (*cmd_check) {
            ParsedFile pa, pb;
            try {
                pa = parse_web_file(slurp(file_a));
                pb = parse_web_file(slurp(file_b));
            } catch (const std::exception& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return EXIT_PARSE;
            }
            if (pa.N != pb.N || pa.mode != pb.mode) {
                std::cerr << "mode mismatch between files\n";
                return EXIT_BOUNDARY;
            }
            EvalConfig cfg{pa.N, pa.mode};
            SparseOperator a = evaluate(pa.expr, cfg), b = evaluate(pb.expr, cfg);
            if (!(a.src() == b.src()) || !(a.tgt() == b.tgt())) {
                std::cerr << "boundary mismatch: " << a.src().to_string() << " -> "
                          << a.tgt().to_string() << " vs " << b.src().to_string() << " -> "
                          << b.tgt().to_string() << "\n";
                return EXIT_BOUNDARY;
            }
            if (operator_equal(a, b)) {
                emit(out_path, "equal\n");
                return 0;
            }
            SparseOperator diff = a - b;
            std::istringstream ds(diff.dump());
            std::string first;
            std::getline(ds, first);
            emit(out_path, "unequal; first differing entry: " + first + "\n");
            return EXIT_UNEQUAL;
        }
        if (*cmd_suite) {
            SuiteOptions opt;
            auto [nlo, nhi] = parse_range(n_range);
            auto [klo, khi] = parse_range(k_range);
            opt.N_lo = nlo;
            opt.N_hi = nhi;
            opt.k_lo = klo;
            opt.k_hi = khi;
            opt.jobs = jobs;
            SuiteReport rep;
            try {
                rep = run_suite(suite_name, opt);
            } catch (const std::invalid_argument& e) {
                std::cerr << e.what() << "\n";
                return EXIT_PARSE;
            }
            emit(out_path,
                 format == "json" ? report_to_json(rep, true) + "\n" : report_to_text(rep));
            return rep.all_pass() ? 0 : 1;
        }
        if (*cmd_char) {
            if (mode_from_name(char_mode) != Mode::Zeta) {
                std::cerr << "char requires --mode zeta\n";
                return EXIT_PARSE;
            }
            EvalConfig cfg{char_N, Mode::Zeta};
            SparseOperator op = projector_by_key(char_key, cfg);
            Character ch = character(op);
            LaurentX poly = character_poly(ch, char_N);
            std::ostringstream os;
            os << "character: " << poly.to_string() << "\n";
            try {
                SymPoly sp(poly);
                os << "e-expansion:";
                for (auto& [expo, c] : sp.e_expansion()) {
                    os << " " << (c >= 0 ? "+" : "-") << rat_to_string(c < 0 ? -c : c);
                    bool any = false;
                    for (size_t i = 0; i < expo.size(); ++i) {
                        if (expo[i] == 0) continue;
                        os << "*e" << (i + 1);
                        if (expo[i] != 1) os << "^" << expo[i];
                        any = true;
                    }
                    if (!any) os << "*1";
                }
                os << "\n";
            } catch (const std::exception&) {
                os << "(character is not symmetric; no e-expansion)\n";
            }
            emit(out_path, os.str());
            return 0;
        }
        if (*cmd_list) {
            std::ostringstream os;
            os << "suites:";
            for (auto& s : suite_names()) os << " " << s;
            os << "\nprojector keys: T:<m> P:<k> Vclasp:<m> Pclasp:<m> O:<n> part:<a+b+...>\n";
            emit(out_path, os.str());
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_BOUNDARY;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_PARSE;
    }
    return 0;
}
