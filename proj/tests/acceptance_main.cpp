// Acceptance suite: one line per criterion, nonzero exit if any fails.
// argv[1] is the path to the cylcob executable for the CLI contract checks.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "cylcob/bar_rep.hpp"
#include "cylcob/selftest.hpp"
#include "cylcob/text.hpp"
#include "json.hpp"

using namespace cylcob;

namespace {

constexpr unsigned long long kSeed = 20240817;

struct CliResult {
    int exit_code;
    std::string out;
};

std::string cli_path;

CliResult run_cli(const std::string& args) {
    const std::string cmd = cli_path + " " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    std::string out;
    char buf[4096];
    while (pipe && fgets(buf, sizeof(buf), pipe.get())) out += buf;
    const int status = pipe ? pclose(pipe.release()) : -1;
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

int failures_total = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what;
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures_total;
}

void report(int criterion, const SuiteResult& r) {
    report(criterion, r.name + " (" + std::to_string(r.cases) + " cases)", r.ok(), r.detail);
}

bool check_invariants_cli(const std::string& word, int tau, bool has_t0, int t0, long long beta,
                          long long mu, std::string& detail) {
    const CliResult r = run_cli("invariants \"" + word + "\"");
    if (r.exit_code != 0) {
        detail = word + " exited with " + std::to_string(r.exit_code);
        return false;
    }
    const auto j = nlohmann::json::parse(r.out);
    const bool ok = j["tau"] == tau && (has_t0 ? j["t0"] == t0 : j["t0"].is_null()) &&
                    j["beta"] == beta && j["mu"] == mu;
    if (!ok) detail = word + " produced " + first_line(r.out);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) cli_path = argv[1];

    // 1. every defining relation instance, k <= 8, in both cylinder semantics
    report(1, relation_suite(8));

    // 2. normal-form completeness on seeded random words and pairs
    report(2, normal_form_suite(500, 200, kSeed, 10, 20));

    // 3. matrix oracle: homomorphism on 200 pairs, relation instances map to
    //    equal matrices (circle instances to dim * identity), full twists to
    //    identity matrices, dims 1..3 at desk-scale sizes
    report(3, matrix_homomorphism_suite(200, kSeed + 1));
    report(3, matrix_relation_suite(8, 512 * 512));

    // 4. loop discrimination and winding bounds
    report(4, loop_discrimination_suite(500, kSeed + 2));

    // 5. the category tower and its strictness witnesses
    report(5, category_tower_suite(200, kSeed + 3));

    // 6. rotation-category and square-root embeddings, doubling, annular translation
    report(6, cyclic_embedding_suite(5));

    // 7. affine TL bookkeeping against diagram composition and the tensor model
    report(7, tl_suite(100, kSeed + 4));

    // 8. CLI contract: library round trip plus the documented binary behavior
    report(8, parser_roundtrip_suite(500, kSeed + 5));

    if (cli_path.empty()) {
        report(8, "CLI binary checks", false, "no binary path given");
    } else {
        std::string detail;

        bool ok = check_invariants_cli("tw(3)", 3, true, 2, 0, 0, detail) &&
                  check_invariants_cli("d(2,1) . b(0,0)", 0, false, 0, 1, 0, detail) &&
                  check_invariants_cli("d(4,1) . b(2,1)", 2, true, 1, 0, 1, detail);
        report(8, "invariants examples", ok, detail);

        const auto eq_is = [&](const std::string& cat, const std::string& w1,
                               const std::string& w2, const std::string& want) {
            const CliResult r = run_cli("eq --category " + cat + " \"" + w1 + "\" \"" + w2 + "\"");
            if (r.exit_code != 0 || first_line(r.out) != want) {
                detail = cat + " " + w1 + " vs " + w2 + " -> " + first_line(r.out);
                return false;
            }
            return true;
        };
        ok = eq_is("cyl", "tw(4)^4", "id(4)", "equal") &&
             eq_is("da", "tw(4)^4", "id(4)", "unequal") &&
             eq_is("cyla", "d(4,1).b(2,1)", "id(2)", "unequal");
        report(8, "eq examples", ok, detail);

        const auto normalizes_to = [&](const std::string& in, const std::string& want) {
            const CliResult r = run_cli("normalize \"" + in + "\"");
            if (r.exit_code != 0 || first_line(r.out) != want) {
                detail = in + " -> " + first_line(r.out);
                return false;
            }
            return true;
        };
        ok = normalizes_to("tw(2)^5", "tw(2)") && normalizes_to("d(4,2) . b(2,1)", "id(2)") &&
             normalizes_to("(d(2,1).b(0,0))^2", "(d(2,1).b(0,0))^2");
        report(8, "normalize examples", ok, detail);

        ok = run_cli("eq --category cyl \"tw(2\" \"id(2)\"").exit_code == 2 &&
             run_cli("invariants \"b(2,0) . b(2,0)\"").exit_code == 1 &&
             run_cli("eq --category cyl \"id(2)\" \"id(4)\"").exit_code == 1 &&
             run_cli("invariants \"tw(3)\"").exit_code == 0 &&
             run_cli("matrix \"tw(2)\" --dim 0").exit_code == 1;
        report(8, "documented exit codes", ok);

        const CliResult m = run_cli("matrix \"d(2,0).b(0,0)\" --dim 3 --format json");
        ok = m.exit_code == 0 && m.out.find("[[\"3\"]]") != std::string::npos;
        report(8, "matrix example", ok, first_line(m.out));
    }

    std::cout << (failures_total == 0 ? "acceptance: all criteria passed\n"
                                      : "acceptance: " + std::to_string(failures_total) +
                                            " criterion checks failed\n");
    return failures_total == 0 ? 0 : 1;
}
