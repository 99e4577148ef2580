// Integration checks for the command-line surface: exit codes and key lines.
// Invokes the built binary through the shell; paths come from the build.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CLI_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, "popen failed"};
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string data(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

int failures = 0;

void expect(bool ok, const std::string& what, const RunResult& r) {
    if (ok) {
        std::printf("[ ok ] %s\n", what.c_str());
    } else {
        ++failures;
        std::printf("[FAIL] %s\n  exit=%d\n  output:\n%s\n", what.c_str(), r.exit_code,
                    r.output.c_str());
    }
}

bool contains(const RunResult& r, const std::string& needle) {
    return r.output.find(needle) != std::string::npos;
}

}  // namespace

int main() {
    {
        auto r = run("h3 --p 3 --n 3");
        expect(r.exit_code == 0 && contains(r, "7") && contains(r, "delta image rank"),
               "h3 --p 3 --n 3 reports dim 7", r);
    }
    {
        auto r = run("h3 --p 2 --n 3");
        expect(r.exit_code == 0 && contains(r, "7"), "h3 --p 2 --n 3 reports dim 7", r);
    }
    {
        auto r = run("h3 --p 4 --n 2");
        expect(r.exit_code != 0 && contains(r, "prime"), "h3 rejects p = 4 with a message", r);
    }
    {
        auto r = run("stab " + data("omega_d_p2_n1.form.json") + " --workers 2");
        expect(r.exit_code == 0 && contains(r, "24") && contains(r, "S_4"),
               "stab omega_D (p=2, n=1) gives 24, matched to S_4", r);
    }
    {
        auto r = run("stab " + data("omega_q_p3_n1.form.json") + " --workers 2 --json");
        expect(r.exit_code == 0 && contains(r, "\"order\": \"36\"") && contains(r, "AffO2"),
               "stab omega_Q (p=3, n=1) gives 36, matched to AffO2", r);
    }
    {
        // |GL_3(F_7)| = 33,784,128 exceeds the default guard
        auto r = run("extraspecial --p 7 --n 1 --type D --verify");
        expect(r.exit_code == 2 && contains(r, "guard"),
               "guarded sweep aborts with exit 2 and a hint", r);
    }
    {
        auto r = run("brpic " + data("omega_d_p3_n1.form.json") + " --workers 2");
        expect(r.exit_code == 0 && contains(r, "5616") && contains(r, "kernel exponent   0"),
               "brpic omega_D (p=3, n=1) gives 5616", r);
    }
    {
        auto r = run("brpic " + data("zero_p3_n3.form.json"));
        expect(r.exit_code == 3 && contains(r, "degenerate"),
               "brpic refuses a degenerate alternating part with exit 3", r);
    }
    {
        auto r = run("extraspecial --p 2 --n 1 --type D --verify --workers 2");
        expect(r.exit_code == 0 && contains(r, "PASS"),
               "extraspecial --verify passes for p=2, n=1, D", r);
    }
    {
        auto r = run("extraspecial --p 3 --n 1 --type Q --verify --workers 2");
        expect(r.exit_code == 0 && contains(r, "PASS") && contains(r, "36"),
               "extraspecial --verify passes for p=3, n=1, Q against the AffO2 order", r);
    }
    {
        auto r = run("lie " + data("sl2_f5.lie.json") + " --verify --workers 2");
        expect(r.exit_code == 0 && contains(r, "120"),
               "lie sl2 over F_5 gives stabilizer order 120", r);
    }
    {
        auto r = run("beta-check --p 3 --n 2 --samples 50");
        expect(r.exit_code == 0 && contains(r, "PASS") && contains(r, "mismatches        0"),
               "beta-check passes at p=3, n=2", r);
    }
    {
        // emitted form files load back: omega for p=2, n=2 equals the fixture
        std::string tmp = "/tmp/brpic_cli_test_omega.form.json";
        auto r1 = run("extraspecial --p 2 --n 2 --type D --out " + tmp);
        auto r2 = run("stab " + tmp + " --workers 2 --json");
        expect(r1.exit_code == 0 && r2.exit_code == 0 && contains(r2, "\"order\": \"720\""),
               "extraspecial --out emits a form whose stabilizer is 720", r2);
        std::remove(tmp.c_str());
    }
    {
        auto r = run("stab " + data("omega_d_p3_n1.form.json") + " --method closure");
        expect(r.exit_code != 0 && contains(r, "gens"),
               "closure method without --gens is a usage error", r);
    }

    if (failures) {
        std::printf("%d CLI check(s) failed\n", failures);
        return 1;
    }
    std::printf("all CLI checks passed\n");
    return 0;
}
