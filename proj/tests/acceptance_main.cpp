// Acceptance gate: runs every required law suite at its pinned parameters
// (exact arithmetic, zero tolerance) and checks the committed CLI outputs.
// Prints one PASS/FAIL line per criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "flatcomp/suites.hpp"

using namespace flatcomp;

namespace {

int failures_total = 0;

void line(int criterion, const char* label, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion-" << criterion << "  " << label;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    std::cout.flush();
    if (!ok) ++failures_total;
}

struct TimedReport {
    SuiteReport report;
    double seconds;
};

TimedReport timed(const std::string& name, const InstanceGrid& grid) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report = run_suite(name, grid);
    const auto stop = std::chrono::steady_clock::now();
    return {std::move(report), std::chrono::duration<double>(stop - start).count()};
}

std::string summary(const TimedReport& t) {
    std::ostringstream out;
    out << t.report.instances << " instances, " << t.report.failures.size() << " failures, ";
    out.precision(2);
    out << std::fixed << t.seconds << "s";
    return out.str();
}

bool suite_ok(const TimedReport& t) { return t.report.passed() && t.report.instances > 100; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string run_cli(const std::string& command) {
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    pclose(pipe);
    return output;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::string golden = argc > 2 ? argv[2] : "";
    const auto default_values = default_grid().values;

    // 1. quantale laws, exhaustive over {0, 1/3, 1/2, 1, 2, inf}, under a second
    {
        const auto t = timed("quantale-laws",
                             make_grid(0, {Cost::zero(), Cost::fin(1, 3), Cost::fin(1, 2),
                                           Cost::fin(1), Cost::fin(2), Cost::inf()}));
        line(1, "quantale-laws", suite_ok(t) && t.seconds < 1.0, summary(t));
    }

    // 2. flatness decision procedures vs sampled witness conditions, under 5 min
    {
        const auto t = timed("flat-3.6", make_grid(3, default_values));
        line(2, "flat-3.6", suite_ok(t) && t.seconds < 300.0, summary(t));
    }

    // 3. filter equalities
    for (const char* name : {"eq-3.21", "eq-3.42", "eq-3.43", "eq-3.44", "eq-3.45"}) {
        const auto t = timed(name, make_grid(3, default_values));
        line(3, name, suite_ok(t), summary(t));
    }

    // 4. Galois correspondence and reflection round trips
    for (const char* name : {"galois-3.20", "reflection-3.15"}) {
        const auto t = timed(name, make_grid(3, default_values));
        line(4, name, suite_ok(t), summary(t));
    }

    // 5. inclusion chain everywhere; symmetric consequences up to 5 objects
    {
        const auto t = timed("inclusion-chain", make_grid(4, default_values));
        line(5, "inclusion-chain", suite_ok(t), summary(t));
    }
    {
        const auto t = timed("sym-3.33", make_grid(5, default_values));
        line(5, "sym-3.33", suite_ok(t), summary(t));
    }

    // 6. hyperspace description of the weak completion of symmetric spaces
    {
        const auto t = timed("sym-3.60", make_grid(4, {Cost::zero(), Cost::fin(1), Cost::fin(2),
                                                       Cost::inf()}));
        line(6, "sym-3.60", suite_ok(t), summary(t));
    }

    // 7. finite self-completion of cost subspaces, plus the pinned completions
    {
        const auto t = timed("rbar-3.53-finite", default_grid());
        line(7, "rbar-3.53-finite", suite_ok(t), summary(t));

        const SpacePtr a2 = make_space(
            {"a", "b"}, {{Cost::zero(), Cost::fin(1)}, {Cost::fin(2), Cost::zero()}});
        const CompletedSpace p1 = complete(a2, CompletionMode::P1);
        const bool matrix_ok =
            p1.points.size() == 3 &&
            p1.space->dist ==
                std::vector<std::vector<Cost>>{
                    {Cost::zero(), Cost::fin(1), Cost::zero()},
                    {Cost::fin(2), Cost::zero(), Cost::zero()},
                    {Cost::fin(2), Cost::fin(1), Cost::zero()}};
        line(7, "two-point-weak-completion-matrix", matrix_ok);
        const CompletedSpace p2 = complete(a2, CompletionMode::P2);
        const bool isometric = p2.points.size() == 2 && p2.space->d(0, 1) == Cost::fin(1) &&
                               p2.space->d(1, 0) == Cost::fin(2);
        line(7, "two-point-flat-completion-isometric", isometric);
    }

    // 8. flat filters are exactly the forward Cauchy sequence filters
    {
        const auto t = timed("seq-3.35", make_grid(4, default_values));
        line(8, "seq-3.35", suite_ok(t), summary(t));
    }

    // 9. boolean correspondences
    {
        const auto t = timed("bool-4.1", make_grid(4, default_values));
        line(9, "bool-4.1", suite_ok(t), summary(t));
    }
    for (const char* name : {"ideal-quotient", "dm-cross"}) {
        const auto t = timed(name, make_grid(4, default_values));
        line(9, name, suite_ok(t), summary(t));
    }
    {
        const auto antichain = validate_preorder({"x", "y"}, {});
        const auto dm = complete_preorder(antichain, PreorderCompletionMode::Dm);
        line(9, "two-antichain-has-four-cuts", dm.points.size() == 4);
    }

    // 10. extension universality
    {
        const auto t = timed("ext-3.50", make_grid(2, default_values));
        line(10, "ext-3.50", suite_ok(t), summary(t));
    }
    for (const char* name : {"bool-4.2", "bool-4.3"}) {
        const auto t = timed(name, make_grid(3, default_values));
        line(10, name, suite_ok(t), summary(t));
    }

    // 11. committed CLI outputs, byte for byte
    if (cli.empty() || golden.empty()) {
        line(11, "cli-golden-files", false, "usage: acceptance <cli-path> <golden-dir>");
    } else {
        const struct {
            const char* label;
            std::string command;
            const char* expected;
        } cases[] = {
            {"a2-p1-completion", cli + " complete -i " + golden + "/a2_space.json --mode p1",
             "a2_p1_completion.json"},
            {"p3-ideal-completion",
             cli + " complete -i " + golden + "/p3_preorder.json --base bool --mode ideal",
             "p3_ideal_completion.json"},
            {"z2-classification", cli + " classify -i " + golden + "/z2_filter.json",
             "z2_classification.json"},
        };
        for (const auto& c : cases) {
            const std::string actual = run_cli(c.command);
            const std::string expected = read_file(golden + "/" + c.expected);
            line(11, c.label, !expected.empty() && actual == expected);
        }
    }

    if (failures_total) std::cout << failures_total << " criterion check(s) failed\n";
    return failures_total ? 1 : 0;
}
