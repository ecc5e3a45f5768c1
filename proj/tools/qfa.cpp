#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <qfa/cli/config.hpp>
#include <qfa/cli/eval.hpp>
#include <qfa/cli/parser.hpp>
#include <qfa/laws.hpp>

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

int run_eval(const std::string &config_path, const std::string &text, bool renormalised)
{
    const qfa::cli::evaluator ev(qfa::cli::load_config(config_path), renormalised);
    std::cout << qfa::cli::format(ev.eval(text)) << '\n';
    return exit_ok;
}

int run_green(const std::string &config_path, unsigned i, unsigned j, const std::string &lagrangian, unsigned order,
              bool renormalised)
{
    const auto cfg = qfa::cli::load_config(config_path);
    const qfa::cli::evaluator ev(cfg, renormalised);
    const auto u = ev.eval(lagrangian);
    qfa::element lag;
    if (const auto *c = std::get_if<qfa::scalar>(&u)) {
        lag = qfa::element(*c);
    } else if (const auto *e = std::get_if<qfa::element>(&u)) {
        lag = *e;
    } else {
        throw qfa::cli::eval_error("the Lagrangian must be an element, got " + qfa::cli::kind_name(u), 0);
    }
    if (i < 1 || i > cfg.dimension || j < 1 || j > cfg.dimension) {
        throw qfa::cli::config_error("green indices must lie in 1.." + std::to_string(cfg.dimension));
    }
    const qfa::t_context ctx(cfg.pairing, cfg.zeta);
    const auto g = qfa::green(i, j, lag, ctx, order, renormalised);
    for (const auto &line : qfa::format_lines(g)) {
        std::cout << line << '\n';
    }
    return exit_ok;
}

int run_check(const std::string &config_path, std::optional<std::uint32_t> max_grade, std::optional<std::uint64_t> trials,
              std::optional<std::uint64_t> seed)
{
    const auto cfg = qfa::cli::load_config(config_path);
    qfa::check_options opts;
    opts.max_grade = max_grade.value_or(cfg.max_grade.value_or(opts.max_grade));
    opts.trials = trials.value_or(cfg.trials.value_or(opts.trials));
    opts.seed = seed.value_or(cfg.seed.value_or(opts.seed));
    const qfa::check_environment env{cfg.pairing, cfg.zeta, cfg.fock};
    std::cout << "config " << config_path << ": d = " << cfg.dimension << ", "
              << (env.symmetric() ? "symmetric" : "asymmetric") << " pairing, " << cfg.zeta.values().size()
              << " zeta value(s), " << (cfg.fock ? "fock split" : "no fock split") << "\n"
              << "max grade " << opts.max_grade << ", " << opts.trials << " trials, seed " << opts.seed << "\n";
    const auto results = qfa::run_laws(env, opts);
    qfa::print_report(std::cout, results);
    return qfa::all_passed(results) ? exit_ok : exit_check_failed;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact computations in the symmetric Hopf algebra S(V) with Laplace pairings, circle products, "
                 "renormalisation schemes and T-maps."};
    app.require_subcommand(1);

    std::string config_path;
    bool renormalised = false;

    auto *eval = app.add_subcommand("eval", "Evaluate an expression and print it in canonical form");
    std::string text;
    eval->add_option("--config", config_path, "JSON config file")->required();
    eval->add_flag("--renormalised", renormalised, "Use Tbar in S(...) and green(...)");
    eval->add_option("expression", text, "Expression, e.g. \"e1 o e2 o e3\"")->required();

    auto *check = app.add_subcommand("check", "Run every identity suite on seeded random elements");
    std::optional<std::uint32_t> max_grade;
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> seed;
    check->add_option("--config", config_path, "JSON config file")->required();
    check->add_option("--max-grade", max_grade, "Largest grading of random elements (default 4)");
    check->add_option("--trials", trials, "Random trials per law (default 100)");
    check->add_option("--seed", seed, "Seed of the random streams (default 0)");

    auto *green = app.add_subcommand("green", "Print the Green function G_ij as a lambda-series");
    unsigned gi = 0, gj = 0, order = 2;
    std::string lagrangian;
    green->add_option("--config", config_path, "JSON config file")->required();
    green->add_option("--order", order, "Truncation order N (default 2)");
    green->add_flag("--renormalised", renormalised, "Use Tbar instead of T");
    green->add_option("i", gi, "First generator index")->required();
    green->add_option("j", gj, "Second generator index")->required();
    green->add_option("lagrangian", lagrangian, "Interaction element, e.g. \"e1 v e1 v e2\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (eval->parsed()) {
            return run_eval(config_path, text, renormalised);
        }
        if (check->parsed()) {
            return run_check(config_path, max_grade, trials, seed);
        }
        return run_green(config_path, gi, gj, lagrangian, order, renormalised);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
