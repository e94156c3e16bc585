#include <string>

#include "CLI11.hpp"
#include "qsb/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Query-model spread simulator and bound checker"};
    app.require_subcommand(1);

    qsb::RunConfig cfg;

    auto* grover = app.add_subcommand(
        "grover", "Success probability and spread of the standard search iteration");
    grover->add_option("--n", cfg.n, "State-space dimension")
        ->required()
        ->check(CLI::PositiveNumber);
    grover->add_option("--steps", cfg.steps, "Iteration count")->required();
    grover->add_option("--out", cfg.out, "Output CSV path (default stdout)");

    auto* ensemble = app.add_subcommand(
        "ensemble", "Spread trace of an N+1-trajectory run under a schedule");
    ensemble->add_option("--n", cfg.n, "State-space dimension")
        ->required()
        ->check(CLI::PositiveNumber);
    ensemble->add_option("--steps", cfg.steps, "Query count of the schedule")->required();
    ensemble
        ->add_option("--schedule", cfg.schedule,
                     "Schedule kind: the standard iteration or Haar-random stages")
        ->required()
        ->check(CLI::IsMember({"grover", "random"}));
    ensemble->add_option("--seed", cfg.seed, "Random seed (default 0)");
    ensemble->add_flag("--per-alpha", cfg.per_alpha,
                       "Append one deviation column per trajectory");
    ensemble->add_option("--out", cfg.out, "Output CSV path (default stdout)");
    ensemble->add_option("--max-n", cfg.max_dim,
                         "Dimension cap override (default 4096; random schedules cap at 64)");

    auto* bounds = app.add_subcommand(
        "bounds", "Minimum-query report: thresholds, envelope and closed-form counts");
    bounds->add_option("--n", cfg.n, "State-space dimension")
        ->required()
        ->check(CLI::PositiveNumber);
    bounds->add_option("--out", cfg.out, "Output JSON path (default stdout)");

    auto* adversary = app.add_subcommand(
        "adversary", "Hill-climbing search for spread-maximizing phase schedules");
    adversary->add_option("--n", cfg.n, "State-space dimension (<= 64)")
        ->required()
        ->check(CLI::PositiveNumber);
    adversary->add_option("--steps", cfg.steps, "Queries in the schedule (<= 32)")
        ->required()
        ->check(CLI::PositiveNumber);
    adversary->add_option("--restarts", cfg.restarts, "Hill-climb starting points")
        ->required()
        ->check(CLI::PositiveNumber);
    adversary->add_option("--seed", cfg.seed, "Random seed (default 0)");
    adversary->add_option("--out", cfg.out, "Output JSON path (default stdout)");
    adversary->add_option("--trace-out", cfg.trace_out,
                          "Also write the winning schedule's spread trace CSV here");

    auto* lemma = app.add_subcommand(
        "lemma", "Randomized check of the component-gap bound for same-sign vectors");
    lemma->add_option("--samples", cfg.samples, "Random pairs to draw (default 100000)")
        ->check(CLI::PositiveNumber);
    lemma->add_option("--seed", cfg.seed, "Random seed (default 0)");
    lemma->add_option("--out", cfg.out, "Output JSON path (default stdout)");

    auto* selfcheck =
        app.add_subcommand("selfcheck", "Run every invariant suite at fixed small sizes");
    selfcheck->add_option("--inject-fault", cfg.inject_fault,
                          "Corrupt a checker walk to prove the suite catches it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (grover->parsed()) return qsb::cmd_grover(cfg);
    if (ensemble->parsed()) return qsb::cmd_ensemble(cfg);
    if (bounds->parsed()) return qsb::cmd_bounds(cfg);
    if (adversary->parsed()) return qsb::cmd_adversary(cfg);
    if (lemma->parsed()) return qsb::cmd_lemma(cfg);
    if (selfcheck->parsed()) return qsb::cmd_selfcheck(cfg);
    return 2;
}
