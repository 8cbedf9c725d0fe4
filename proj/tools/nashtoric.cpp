// nashtoric: toric surface singular loci and Nash-blowup minor ideals.
//
//   nashtoric validate --input gens.json
//   nashtoric analyze  --input gens.json [--out report.json] [--order lex|degrevlex]
//                      [--family minimal|groebner] [--jobs N]
//   nashtoric examples [--corpus DIR]       (also: nashtoric --examples)
//
// Exit codes: 0 ok, 1 parse error, 2 validation failure, 3 theorem or fixture violation.

#include "nashtoric/error.hpp"
#include "nashtoric/fixtures.hpp"
#include "nashtoric/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace nashtoric;

namespace {

enum Exit { kOk = 0, kParse = 1, kValidation = 2, kViolation = 3 };

std::string read_input(const std::string& path) {
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::Parse, "cannot read '" + path + "'");
        ss << in.rdbuf();
    }
    return ss.str();
}

int exit_for(const Error& e) {
    if (e.code() == ErrorCode::Parse) return kParse;
    if (e.is_validation_failure()) return kValidation;
    return kViolation;
}

struct Options {
    std::string input = "-";
    std::string out;
    std::string order;
    std::string family;
    unsigned jobs = 1;
    std::string corpus;
};

InputSpec load_input(const Options& o) {
    auto in = parse_input(read_input(o.input));
    if (!o.order.empty()) in.order = parse_order(o.order);
    if (!o.family.empty()) in.family = parse_family(o.family);
    return in;
}

int cmd_validate(const Options& o) {
    auto in = load_input(o);
    auto vs = validate(in.generators);
    std::cout << render_validation(vs, canonical_names(vs, in.names));
    return kOk;
}

int cmd_analyze(const Options& o) {
    auto report = analyze(load_input(o), o.jobs);
    std::cout << render_human(report);
    if (!o.out.empty()) {
        std::ofstream out(o.out);
        if (!out) throw Error(ErrorCode::Parse, "cannot write '" + o.out + "'");
        out << render_json(report);
    }
    return report.violation() ? kViolation : kOk;
}

int cmd_examples(const Options& o) {
    auto fixtures = o.corpus.empty() ? builtin_fixtures() : load_corpus(o.corpus);
    std::size_t passed = 0;
    for (const auto& f : fixtures) {
        auto res = run_fixture(f, o.jobs);
        std::cout << "fixture " << res.name << ": " << (res.ok() ? "pass" : "FAIL") << "\n";
        for (const auto& d : res.diffs) std::cout << "  " << d << "\n";
        passed += res.ok();
    }
    std::cout << passed << "/" << fixtures.size() << " fixtures pass\n";
    return passed == fixtures.size() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Singular loci and Nash-blowup minor ideals of toric surfaces"};
    app.require_subcommand(0, 1);
    Options o;
    bool examples_flag = false;
    app.add_flag("--examples", examples_flag, "Run the bundled fixtures");
    app.add_option("--corpus", o.corpus, "Fixture directory used instead of the bundled fixtures");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input,-i", o.input, "Input JSON file, '-' for stdin")->capture_default_str();
        sub->add_option("--order", o.order, "Term order: lex or degrevlex")->check(CLI::IsMember({"lex", "degrevlex"}));
        sub->add_option("--family", o.family, "Relation family: minimal or groebner")
            ->check(CLI::IsMember({"minimal", "groebner"}));
    };
    auto* validate_cmd = app.add_subcommand("validate", "Check the generators and print the block structure");
    add_common(validate_cmd);
    auto* analyze_cmd = app.add_subcommand("analyze", "Run the full pipeline and print the report");
    add_common(analyze_cmd);
    analyze_cmd->add_option("--out,-o", o.out, "Also write the JSON report here");
    analyze_cmd->add_option("--jobs,-j", o.jobs, "Worker threads for the subset search")->check(CLI::Range(1u, 256u));
    auto* examples_cmd = app.add_subcommand("examples", "Run the bundled fixtures");
    examples_cmd->add_option("--corpus", o.corpus, "Fixture directory used instead of the bundled fixtures");
    examples_cmd->add_option("--jobs,-j", o.jobs, "Worker threads for the subset search")->check(CLI::Range(1u, 256u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (examples_flag || examples_cmd->parsed()) return cmd_examples(o);
        if (validate_cmd->parsed()) return cmd_validate(o);
        if (analyze_cmd->parsed()) return cmd_analyze(o);
        std::cerr << app.help();
        return kParse;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_for(e);
    }
}
