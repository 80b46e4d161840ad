#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cylcob/bar_rep.hpp"
#include "cylcob/json_io.hpp"
#include "cylcob/render.hpp"
#include "cylcob/selftest.hpp"
#include "cylcob/text.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitType = 1;
constexpr int kExitParse = 2;

void report_span(const std::string& text, std::size_t offset, std::size_t length) {
    std::cerr << "  " << text << "\n  " << std::string(offset, ' ')
              << std::string(std::max<std::size_t>(length, 1), '^') << "\n";
}

// Thrown once an error has been reported, carrying the documented exit code.
struct ExitRequest {
    int code;
};

// Parses one word, reporting syntax (exit 2) and typing (exit 1) errors with
// a caret under the offending span of this word's own text.
template <class W, class P>
W parse_reported(const std::string& text, P&& parser) {
    try {
        return parser(text);
    } catch (const cylcob::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        report_span(text, e.offset, e.length);
        throw ExitRequest{kExitParse};
    } catch (const cylcob::WordTypeError& e) {
        std::cerr << "type error: " << e.what() << "\n";
        report_span(text, e.offset, e.length);
        throw ExitRequest{kExitType};
    }
}

// Maps remaining library errors to the documented exit codes.
template <class F>
int guarded(F&& body) {
    try {
        return body();
    } catch (const ExitRequest& e) {
        return e.code;
    } catch (const cylcob::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const cylcob::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitType;
    }
}

int write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return kExitType;
    }
    out << payload;
    return out ? kExitOk : kExitType;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"striped-cylinder cobordism calculator"};
    app.require_subcommand(1);

    std::string word_text, word_text2, category = "cyl", format = "json", out_path, source;
    int dim = 2;
    int max_arity = 8;
    int samples = 500;
    unsigned long long seed = 12345;

    auto* cmd_invariants = app.add_subcommand("invariants", "invariant tuple of a word as JSON");
    cmd_invariants->add_option("word", word_text, "cylinder word")->required();
    cmd_invariants->add_option("-o,--output", out_path, "write to a file instead of stdout");

    auto* cmd_eq = app.add_subcommand("eq", "decide equality of two words");
    cmd_eq->add_option("--category", category, "cyl, cyla or da")
        ->check(CLI::IsMember({"cyl", "cyla", "da"}));
    cmd_eq->add_option("word1", word_text, "first word")->required();
    cmd_eq->add_option("word2", word_text2, "second word")->required();

    auto* cmd_normalize = app.add_subcommand("normalize", "canonical form of a word");
    cmd_normalize->add_option("word", word_text, "cylinder word")->required();

    auto* cmd_matrix = app.add_subcommand("matrix", "tensor-model matrix of a word");
    cmd_matrix->add_option("word", word_text, "cylinder word")->required();
    cmd_matrix->add_option("--dim", dim, "dimension of the underlying space")->required();
    cmd_matrix->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_matrix->add_option("-o,--output", out_path, "write to a file instead of stdout");

    auto* cmd_render = app.add_subcommand("render", "draw a word as an SVG annulus");
    cmd_render->add_option("word", word_text, "cylinder word")->required();
    cmd_render->add_option("-o,--output", out_path, "output SVG path")->required();

    auto* cmd_translate = app.add_subcommand("translate", "translate a word into the cylinder category");
    cmd_translate->add_option("--source", source, "lambda, sqrtlambda or atl")
        ->required()
        ->check(CLI::IsMember({"lambda", "sqrtlambda", "atl"}));
    cmd_translate->add_option("word", word_text, "word in the source grammar")->required();

    auto* cmd_selftest = app.add_subcommand("selftest", "run the property suites");
    cmd_selftest->add_option("--max-arity", max_arity, "relation arity bound");
    cmd_selftest->add_option("--samples", samples, "random samples per suite");
    cmd_selftest->add_option("--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    const auto parse_cyl = [](const std::string& text) {
        return parse_reported<cylcob::GeneratorWord>(
            text, [](const std::string& t) { return cylcob::parse_word(t); });
    };

    if (cmd_invariants->parsed()) {
        return guarded([&] {
            const auto d = cylcob::evaluate(parse_cyl(word_text));
            return write_output(cylcob::invariant_json(d) + "\n", out_path);
        });
    }

    if (cmd_eq->parsed()) {
        return guarded([&] {
            const auto w1 = parse_cyl(word_text);
            const auto w2 = parse_cyl(word_text2);
            const cylcob::Category cat = category == "cyl"    ? cylcob::Category::cyl
                                         : category == "cyla" ? cylcob::Category::cyla
                                                              : cylcob::Category::da;
            std::cout << (cylcob::eq_in(cat, w1, w2) ? "equal" : "unequal") << "\n";
            return kExitOk;
        });
    }

    if (cmd_normalize->parsed()) {
        return guarded([&] {
            const auto w = parse_cyl(word_text);
            const auto nf = cylcob::normalize(cylcob::eliminate_twist_inverses(w));
            std::cout << cylcob::print_normal_form(nf) << "\n";
            std::cout << cylcob::invariant_json(cylcob::evaluate(nf.assemble())) << "\n";
            return kExitOk;
        });
    }

    if (cmd_matrix->parsed()) {
        return guarded([&] {
            if (dim < 1) {
                std::cerr << "error: --dim must be at least 1\n";
                return kExitType;
            }
            const auto w = parse_cyl(word_text);
            const cylcob::Matrix m = cylcob::word_matrix(w, dim);
            std::string payload = "# shape: " + std::to_string(m.rows()) + "x" +
                                  std::to_string(m.cols()) + "\n";
            payload += format == "json" ? cylcob::matrix_json(m) + "\n" : cylcob::matrix_csv(m);
            return write_output(payload, out_path);
        });
    }

    if (cmd_render->parsed()) {
        return guarded([&] {
            const auto d = cylcob::evaluate(parse_cyl(word_text));
            std::ostringstream svg;
            cylcob::render_svg(svg, d);
            return write_output(svg.str(), out_path);
        });
    }

    if (cmd_translate->parsed()) {
        return guarded([&] {
            if (source == "lambda") {
                const auto w = parse_reported<cylcob::CyclicWord>(
                    word_text, [](const std::string& t) { return cylcob::parse_lambda_word(t); });
                std::cout << cylcob::print_word(cylcob::lambda_to_cyl(w)) << "\n";
            } else if (source == "sqrtlambda") {
                const auto w = parse_reported<cylcob::SqrtCyclicWord>(
                    word_text, [](const std::string& t) { return cylcob::parse_sqrt_word(t); });
                std::cout << cylcob::print_word(cylcob::sqrtlambda_to_cyl(w)) << "\n";
            } else {
                const auto w = parse_reported<cylcob::AtlWord>(
                    word_text, [](const std::string& t) { return cylcob::parse_atl_word(t); });
                const cylcob::AtlImage img = cylcob::atl_to_cyla(w);
                std::cout << cylcob::print_word(img.word) << "\n";
                if (img.loop_tally > 0) std::cout << "mu: " << img.loop_tally << "\n";
            }
            return kExitOk;
        });
    }

    if (cmd_selftest->parsed()) {
        return guarded([&] {
            const auto results = cylcob::run_all_suites(max_arity, samples, seed);
            long long cases = 0, failures = 0;
            for (const auto& r : results) {
                std::cout << (r.ok() ? "[pass] " : "[FAIL] ") << r.name << ": " << r.cases
                          << " cases, " << r.failures << " failures\n";
                if (!r.ok()) std::cout << "       first failure: " << r.detail << "\n";
                cases += r.cases;
                failures += r.failures;
            }
            std::cout << "total: " << cases << " cases, " << failures << " failures\n";
            return failures == 0 ? kExitOk : kExitType;
        });
    }

    return kExitOk;
}
