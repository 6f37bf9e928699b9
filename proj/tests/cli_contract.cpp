// Black-box contract tests for the baker-gamma binary: exit codes, JSON
// fields, CSV shape, byte determinism. Takes the binary path as argv[1].
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

int g_failures = 0;
std::string g_binary;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + g_binary + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << cmd << "\n";
        ++g_failures;
        return r;
    }
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        r.out.append(buf, n);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "FAIL: " << what << "\n";
        ++g_failures;
    }
}

void expect_exit(const RunResult& r, int code, const std::string& what) {
    if (r.exit_code != code) {
        std::cerr << "FAIL: " << what << " (exit " << r.exit_code << ", expected " << code
                  << ")\n";
        ++g_failures;
    }
}

bool has(const RunResult& r, const std::string& needle) {
    return r.out.find(needle) != std::string::npos;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find('\n', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_contract <path-to-baker-gamma>\n";
        return 2;
    }
    g_binary = argv[1];

    // minpoly
    {
        auto r = run("minpoly 1/4 --digits 12");
        expect_exit(r, 0, "minpoly 1/4");
        expect(has(r, "\"minpoly\":[\"-1\",\"0\",\"2\"]"), "minpoly 1/4 coefficients");
        expect(has(r, "\"decimal\":\"0.707106781186\""), "minpoly 1/4 decimal");

        expect(has(run("minpoly 1/2"), "\"minpoly\":[\"-1\",\"1\"]"), "minpoly 1/2 coefficients");
        expect(has(run("minpoly 1/3"), "\"minpoly\":[\"-3\",\"0\",\"4\"]"),
               "minpoly 1/3 coefficients");

        expect_exit(run("minpoly abc"), 2, "minpoly malformed");
        expect_exit(run("minpoly 5/4"), 2, "minpoly out of range");
        expect_exit(run("minpoly 1/2 --prec 32"), 2, "minpoly precision too low");
    }

    // eval
    {
        auto r = run("eval 1/2 --prec 256 --digits 15");
        expect_exit(r, 0, "eval 1/2");
        expect(has(r, "\"f_mid\":\"1.144729885849400\""), "eval 1/2 midpoint");
        expect(has(r, "\"prec_bits\":256"), "eval precision echo");

        auto rq = run("eval 1/4 --prec 256 --digits 10 --verify");
        expect_exit(rq, 0, "eval 1/4 verify");
        expect(has(rq, "\"f_mid\":\"1.4913034761\""), "eval 1/4 midpoint");
        expect(has(rq, "\"mode\":\"verify\""), "eval mode echo");
    }

    // scan
    {
        const std::string args = "scan --from 1/10 --to 9/10 --steps 8 --digits 12 --prec 256";
        auto r1 = run(args);
        expect_exit(r1, 0, "scan basic");
        const auto rows = lines(r1.out);
        expect(rows.size() == 10, "scan row count (header + 9)");
        expect(rows[0] == "x_num,x_den,f_mid,f_width", "scan header");
        expect(rows[5].substr(0, 17) == "1,2,1.14472988584", "scan center row");

        auto r2 = run(args);
        expect(r1.out == r2.out, "scan byte determinism");

        auto r3 = run(args + " --threads 2");
        expect(r1.out == r3.out, "scan threading equivalence");

        expect_exit(run("scan --from 1/10 --to 9/10 --steps 8 --out /nonexistent-dir/x.csv"), 3,
                    "scan unwritable path");
        expect_exit(run("scan --from 1/10 --to 9/10 --steps 1"), 2, "scan too few steps");
        expect_exit(run("scan --from 9/10 --to 1/10 --steps 8"), 2, "scan inverted range");
    }

    // verify
    {
        auto r = run("verify counterexample --prec 256");
        expect_exit(r, 0, "verify counterexample");
        expect(has(r, "\"exact_null\":true"), "counterexample exact null");
        expect(has(r, "\"pass\":true"), "counterexample pass");

        expect_exit(run("verify reflection --prec 512"), 0, "verify reflection");
        expect_exit(run("verify monotonic --prec 256"), 0, "verify monotonic");
        expect_exit(run("verify symmetry --prec 256"), 0, "verify symmetry");
        expect_exit(run("verify bogus"), 2, "verify unknown kind");
    }

    // exceptions
    {
        auto r0 = run("exceptions --set \"\"");
        expect_exit(r0, 0, "exceptions empty set");
        expect(has(r0, "\"case\":\"I\""), "exceptions case I");
        expect(has(r0, "\"log_pi_status\":\"Transcendental\""), "exceptions empty status");

        auto r1 = run("exceptions --set 1/2");
        expect_exit(r1, 0, "exceptions {1/2}");
        expect(has(r1, "\"case\":\"II\""), "exceptions case II");
        expect(has(r1, "\"log_pi_status\":\"Algebraic\""), "exceptions center status");

        auto r2 = run("exceptions --set 1/3,2/3");
        expect_exit(r2, 0, "exceptions mirror pair");
        expect(has(r2, "\"case\":\"III\""), "exceptions case III");

        auto r3 = run("exceptions --set 1/3,1/4");
        expect_exit(r3, 1, "exceptions inconsistent");
        expect(has(r3, "\"consistent\":false"), "exceptions inconsistent flag");

        expect_exit(run("exceptions --set x/y"), 2, "exceptions malformed");
        expect_exit(run("exceptions"), 2, "exceptions missing set");
    }

    // period
    {
        auto r = run("period diff 1/3 1/4 --prec 128");
        expect_exit(r, 0, "period diff generic");
        expect(has(r, "\"classification\":\"Transcendental\""), "period diff classification");
        expect(has(r, "\"kind\":\"NonNull\""), "period diff nullity");
        expect(has(r, "\"lo\":\"2.027"), "period diff witness value");

        auto rz = run("period diff 2/5 3/5 --prec 128");
        expect_exit(rz, 0, "period diff symmetric");
        expect(has(rz, "\"kind\":\"Null\""), "period diff null kind");
        expect(has(rz, "\"classification\":\"Zero\""), "period diff zero class");
        expect(has(rz, "\"terms\":[]"), "period diff empty terms");

        auto rp = run("period pair 1/2 1/3 --prec 128");
        expect_exit(rp, 0, "period pair");
        expect(has(rp, "\"kind\":\"AtLeastOneTranscendental\""), "period pair kind");

        auto rna = run("period pair 1/4 3/4 --prec 128");
        expect(has(rna, "\"kind\":\"NotApplicable\""), "period pair mirror");
    }

    // pie
    {
        auto r = run("pie 1/2 --prec 128");
        expect_exit(r, 0, "pie 1/2");
        expect(has(r, "8.5397342226"), "pie constant prefix");
        expect(has(r, "\"k_ge_one\":true"), "pie k >= 1");
        expect(has(r, "\"uses\":[\"HL\"]"), "pie provenance");
    }

    // precision resolution: flag > env > default
    {
        auto renv = run("eval 1/2 --digits 10", "BG_PREC_BITS=128");
        expect(has(renv, "\"prec_bits\":128"), "env precision respected");

        auto rflag = run("eval 1/2 --digits 10 --prec 256", "BG_PREC_BITS=128");
        expect(has(rflag, "\"prec_bits\":256"), "flag beats env");

        expect_exit(run("eval 1/2", "BG_PREC_BITS=banana"), 2, "malformed env precision");
        expect_exit(run("eval 1/2", "BG_PREC_BITS=12"), 2, "env precision too low");
    }

    // top-level usage
    {
        expect_exit(run(""), 2, "missing subcommand");
        expect_exit(run("--help"), 0, "help exits cleanly");
        expect_exit(run("frobnicate"), 2, "unknown subcommand");
    }

    if (g_failures == 0) {
        std::cout << "cli_contract: all checks passed\n";
        return 0;
    }
    std::cerr << "cli_contract: " << g_failures << " failure(s)\n";
    return 1;
}
