#include <functional>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "commands.hpp"
#include "localprop/checked.hpp"
#include "localprop/io.hpp"

namespace cli = localprop::cli;

namespace {

void add_io(CLI::App* sub, cli::Options& opt, bool needs_input = true) {
    auto* in = sub->add_option("--input,-i", opt.input, "Input JSON file");
    if (needs_input) {
        in->required()->check(CLI::ExistingFile);
    }
    sub->add_option("--output,-o", opt.output, "Write the payload here instead of stdout");
}

void add_spec(CLI::App* sub, cli::Options& opt, bool required = true) {
    auto* k = sub->add_option("--k", opt.k, "Subset size k")->check(CLI::Range(2U, 1U << 20));
    auto* ell = sub->add_option("--ell", opt.ell, "Minimum distinct count ell")->check(CLI::PositiveNumber);
    if (required) {
        k->required();
        ell->required();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local-property colorings, point sets and difference sets"};
    app.set_version_flag("--version", std::string(localprop::kVersion));
    app.require_subcommand(1, 1);
    app.fallthrough();

    cli::Options opt;
    app.add_option("--threads", opt.threads, "Worker cap; results do not depend on it")
        ->check(CLI::Range(1U, 1024U));
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    std::function<int(const cli::Options&)> handler;

    auto* vc = app.add_subcommand("verify-coloring", "Check a coloring file against (k, ell)");
    add_io(vc, opt);
    add_spec(vc, opt);
    vc->callback([&] { handler = cli::verify_coloring; });

    auto* vd = app.add_subcommand("verify-diffset", "Check an integer set's k-subset difference counts");
    add_io(vd, opt);
    add_spec(vd, opt);
    vd->callback([&] { handler = cli::verify_diffset; });

    auto* vp = app.add_subcommand("verify-distances", "Check a point set's k-subset distance counts");
    add_io(vp, opt);
    add_spec(vp, opt);
    vp->callback([&] { handler = cli::verify_distances; });

    auto* cs = app.add_subcommand("construct", "Random colorings, Behrend sets, collinear point sets");
    add_io(cs, opt, false);
    add_spec(cs, opt, false);
    cs->add_option("--kind", opt.kind, "random-coloring | estimate | eg-count | behrend | collinear")->required();
    cs->add_option("--n", opt.n, "Vertex count")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 20));
    cs->add_option("--colors", opt.colors, "Color budget c")->check(CLI::PositiveNumber);
    cs->add_option("--seed", opt.seed, "RNG seed (required for randomized kinds)");
    cs->add_option("--size", opt.size, "Behrend set size")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 24));
    cs->add_option("--trials", opt.trials, "Monte-Carlo trials")->check(CLI::PositiveNumber);
    cs->add_option("--artifact", opt.artifact, "Also write the constructed object in its shared JSON format");
    cs->callback([&] { handler = cli::construct; });

    auto* sf = app.add_subcommand("solve-f", "Exact minimum number of colors f(n, k, ell)");
    sf->add_option("--n", opt.n, "Vertex count")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{64}));
    add_spec(sf, opt);
    sf->add_option("--node-limit", opt.node_limit, "Search node budget")->check(CLI::PositiveNumber);
    sf->add_option("--time-limit", opt.time_limit, "Time budget in seconds")->check(CLI::PositiveNumber);
    sf->add_option("--certificate", opt.artifact, "Write the optimal coloring here");
    sf->add_option("--log", opt.log, "Write the solve log (CSV) here");
    sf->add_option("--output,-o", opt.output, "Write the payload here instead of stdout");
    sf->callback([&] { handler = cli::solve_f; });

    auto* sg = app.add_subcommand("solve-g", "Exact minimum |A-A| over A in {1..M}");
    sg->add_option("--n", opt.n, "Set size")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{64}));
    add_spec(sg, opt);
    sg->add_option("--range", opt.range, "Range cap M")->required()->check(CLI::PositiveNumber);
    sg->add_option("--budget", opt.budget, "Candidate-set budget")->check(CLI::PositiveNumber);
    sg->add_option("--certificate", opt.artifact, "Write the optimal set here");
    sg->add_option("--output,-o", opt.output, "Write the payload here instead of stdout");
    sg->callback([&] { handler = cli::solve_g; });

    auto* en = app.add_subcommand("energy", "Color energy, Cauchy-Schwarz floor, dyadic decomposition");
    add_io(en, opt);
    en->callback([&] { handler = cli::energy; });

    auto* pr = app.add_subcommand("profile", "Dyadic profile and per-j bound report for (k, m)");
    add_io(pr, opt);
    pr->add_option("--k", opt.k, "Theorem parameter k")->required()->check(CLI::Range(3U, 1U << 20));
    pr->add_option("--m", opt.m, "Theorem parameter m")->required()->check(CLI::Range(2U, 1U << 20));
    pr->callback([&] { handler = cli::profile; });

    auto* lc = app.add_subcommand("lemma-check", "Search a set system for a large d-wise intersection");
    add_io(lc, opt);
    lc->callback([&] { handler = cli::lemma_check; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kUsage;
    }

    try {
        return handler(opt);
    } catch (const localprop::OverflowError& e) {
        std::cerr << "error: arithmetic overflow: " << e.what() << '\n';
        return cli::kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kUsage;
    }
}
