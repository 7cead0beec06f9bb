#include "filtadm/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"filtadm: admissibility checks for filtered (phi, N)-modules"};
    app.require_subcommand(1);

    filtadm::CommandOptions opts;
    bool modified = false;
    bool json = true;
    std::size_t cap = 0;

    auto add_common = [&](CLI::App* sub, bool weights) {
        sub->add_option("--spec", opts.spec_path, "module spec JSON file")->required();
        if (weights) sub->add_option("--weights", opts.weights_path, "weight profile JSON file")->required();
        sub->add_option("--seed", opts.seed, "RNG seed");
        sub->add_flag("--json", json, "JSON report on stdout (the only format)");
    };
    auto add_modify = [&](CLI::App* sub) {
        sub->add_flag("--no-modify", opts.no_modify, "use the unmodified Frobenius");
        sub->add_flag("--modified", modified, "use the modified Frobenius (default)");
    };

    add_common(app.add_subcommand("order", "canonical summand ordering"), false);
    add_common(app.add_subcommand("check-iii", "slope chain over the canonical order"), true);
    add_common(app.add_subcommand("check-emerton", "Emerton-style criterion over block shuffles"), true);
    add_common(app.add_subcommand("equivalence", "compare the two criteria"), true);

    auto* phi = app.add_subcommand("build-phi", "concrete Frobenius and monodromy matrices");
    add_common(phi, false);
    add_modify(phi);

    auto* subs = app.add_subcommand("subobjects", "enumerate stable subobjects");
    add_common(subs, false);
    add_modify(subs);
    subs->add_option("--cap", cap, "largest d+1 for the concrete enumeration");

    auto* fil = app.add_subcommand("build-filtration", "sample a transverse Hodge filtration");
    add_common(fil, true);
    add_modify(fil);

    auto* adm = app.add_subcommand("verify-admissible", "check weak admissibility of the concrete module");
    add_common(adm, true);
    add_modify(adm);
    adm->add_option("--cap", cap, "largest d+1 for the concrete enumeration");

    auto* fuzz = app.add_subcommand("fuzz-special", "randomized check of the special-pair inequality");
    fuzz->add_option("--trials", opts.trials, "number of trials");
    fuzz->add_option("--seed", opts.seed, "RNG seed");
    fuzz->add_flag("--json", json, "JSON report on stdout (the only format)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : filtadm::exit_code::input_error;
    }

    opts.command = app.get_subcommands().front()->get_name();
    if (cap > 0) opts.cap = cap;
    // --no-modify wins when both are given; --json is the default format.
    (void)modified;
    (void)json;

    const auto result = filtadm::run_command(opts);
    std::cout << filtadm::render_report(result.report);
    return result.exit;
}
