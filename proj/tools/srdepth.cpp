// Command-line front end: depth, limits, verify, corpus.
//
// Exit codes: 0 success / all checks pass, 1 a verification failed,
// 2 bad input or I/O, 3 internal invariant violated.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "srdepth/corpus.hpp"
#include "srdepth/error.hpp"
#include "srdepth/report.hpp"

namespace {

int exit_code_for(srdepth::ErrorCode code)
{
    using srdepth::ErrorCode;
    switch (code) {
    case ErrorCode::EngineDisagreement:
    case ErrorCode::NotAComplex:
        return 3;
    default:
        return 2;
    }
}

void emit(const srdepth::AnalysisReport& report, bool json)
{
    if (json)
        std::cout << srdepth::to_json(report).dump(2) << '\n';
    else
        std::cout << srdepth::to_text(report);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Depth of Stanley-Reisner face rings and higher limits over face posets"};
    app.require_subcommand(1);

    std::string input;
    std::string field_text = "p=2";
    bool json = false;
    int d_max = -1;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "facet-list or JSON complex file")->required();
        cmd->add_option("--field", field_text, "coefficient field: q or p=<prime>")->capture_default_str();
        cmd->add_flag("--json", json, "emit the JSON report");
    };

    auto* depth_cmd = app.add_subcommand("depth", "depth by all three engines");
    add_common(depth_cmd);
    auto* limits_cmd = app.add_subcommand("limits", "lim^i of the star functor per degree");
    add_common(limits_cmd);
    limits_cmd->add_option("--dmax", d_max, "largest internal degree (default 4m)");
    auto* verify_cmd = app.add_subcommand("verify", "run every verification harness");
    add_common(verify_cmd);
    verify_cmd->add_option("--dmax", d_max, "largest internal degree (default 4m)");

    std::string kind;
    std::string out_dir;
    int corpus_m = 8;
    int corpus_count = 200;
    std::uint64_t corpus_seed = srdepth::default_corpus_seed;
    auto* corpus_cmd = app.add_subcommand("corpus", "write a named or random corpus");
    corpus_cmd->add_option("kind", kind, "named | random")->required()->check(CLI::IsMember({"named", "random"}));
    corpus_cmd->add_option("out", out_dir, "output directory")->required();
    corpus_cmd->add_option("--m", corpus_m, "largest vertex count")->capture_default_str();
    corpus_cmd->add_option("--count", corpus_count, "number of random complexes")->capture_default_str();
    corpus_cmd->add_option("--seed", corpus_seed, "corpus seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (corpus_cmd->parsed()) {
            const auto entries = kind == "named" ? srdepth::named_corpus()
                                                 : srdepth::random_corpus(corpus_count, corpus_m, corpus_seed);
            srdepth::write_corpus(entries, out_dir);
            std::cout << "wrote " << entries.size() << " complexes to " << out_dir << '\n';
            return 0;
        }

        const srdepth::FieldSpec field = srdepth::FieldSpec::parse(field_text);
        const srdepth::SimplicialComplex K = srdepth::read_complex_file(input);
        srdepth::AnalysisOptions options;
        options.d_max = d_max;
        if (limits_cmd->parsed()) {
            options.limits = true;
            options.srdec = true;
        }
        if (verify_cmd->parsed()) options.verify = true;
        const srdepth::AnalysisReport report = srdepth::analyze(K, field, options);
        emit(report, json);
        return report.all_pass() ? 0 : 1;
    } catch (const srdepth::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
}
