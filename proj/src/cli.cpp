#include "parrondo/cli.hpp"

#include <filesystem>
#include <iomanip>
#include <optional>

#include <CLI11.hpp>

#include "parrondo/analysis.hpp"
#include "parrondo/csv.hpp"
#include "parrondo/engine.hpp"
#include "parrondo/mixing.hpp"
#include "parrondo/refute.hpp"

namespace parrondo::cli {

namespace {

namespace fs = std::filesystem;

struct Config {
    double epsilon = 0.005;
    int m = 3;
    double gamma = 0.5;
    int trials = 10000;
    int games = 200;
    std::uint64_t seed = 0;
    std::string out = ".";
    bool svg = false;
    unsigned threads = 0;
    std::string start = "stationary";

    // simulate / mix
    std::optional<int> scheme;
    std::optional<double> p2;
    std::optional<double> p3;
    bool history = false;
    // boundary
    int samples = 101;
    // classify
    std::vector<double> point;
    // mix
    std::vector<double> kappa{-0.05, 0.0, 0.05, 0.1};
    // refute
    int trace_steps = 4;
};

engine::EnsembleOptions ensemble_options(const Config& c) {
    engine::EnsembleOptions o;
    o.threads = c.threads;
    o.start = c.start == "zero" ? engine::StartPolicy::Zero : engine::StartPolicy::StationaryResidue;
    return o;
}

fs::path output_dir(const Config& c) {
    const fs::path dir(c.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw IoError("cannot create output directory " + dir.string());
    }
    return dir;
}

void emit_series(const Config& c, const fs::path& dir, const std::string& name,
                 const engine::EnsembleStats& stats, std::ostream& out) {
    const auto csv = dir / (name + ".csv");
    io::write_file(csv, io::series_csv(stats));
    out << "wrote " << csv.string() << '\n';
    if (c.svg) {
        const auto svg = dir / (name + ".svg");
        io::write_file(svg, io::line_chart_svg(name, {{name, stats.mean}}));
        out << "wrote " << svg.string() << '\n';
    }
}

std::string num(double v) { return io::format_number(v); }

std::string drift_text(const GameSpec& g) {
    try {
        return num(analysis::exact_drift(g));
    } catch (const DegenerateChainError&) {
        return "undefined";
    }
}

CapitalGameB capital_b(const Config& c, const BiasParams& bias) {
    auto [a, b] = build_parrondo_games(bias);
    if (c.p2) {
        b.p2 = Probability(*c.p2);
    }
    if (c.p3) {
        b.p3 = Probability(*c.p3);
    }
    return b;
}

void summarize(std::ostream& out, const std::string& name, const GameSpec& game,
               const engine::EnsembleStats& stats) {
    out << std::left << std::setw(10) << name << " exact_drift=" << drift_text(game)
        << " mean_final=" << num(stats.mean.back()) << " stderr_final=" << num(stats.standard_error.back()) << '\n';
}

int cmd_simulate(const Config& c, std::ostream& out) {
    const BiasParams bias(c.epsilon, c.m);
    GameSpec a;
    GameSpec b;
    GameSpec compound;
    if (c.history) {
        if (c.scheme || c.p2 || c.p3) {
            throw ArgumentError("--history cannot be combined with --scheme, --p2 or --p3");
        }
        auto [ga, gb] = build_history_games(bias);
        a = ga;
        b = gb;
        compound = CompoundGame(c.gamma, ga, gb);
    } else if (c.scheme) {
        if (c.p2 || c.p3) {
            throw ArgumentError("--scheme cannot be combined with --p2 or --p3");
        }
        const Scheme s = build_scheme(SchemeId(*c.scheme), bias, c.gamma);
        a = s.a;
        b = s.b;
        compound = s.compound;
    } else {
        const GameA ga = build_parrondo_games(bias).first;
        const CapitalGameB gb = capital_b(c, bias);
        a = ga;
        b = gb;
        compound = CompoundGame(c.gamma, ga, gb);
    }

    const auto dir = output_dir(c);
    const auto opts = ensemble_options(c);
    const std::pair<std::string, const GameSpec*> games[] = {{"game_a", &a}, {"game_b", &b}, {"compound", &compound}};
    for (const auto& [name, game] : games) {
        const auto stats = engine::run_ensemble(*game, c.games, c.trials, c.seed, opts);
        emit_series(c, dir, name, stats, out);
        summarize(out, name, *game, stats);
    }
    return kExitOk;
}

int cmd_boundary(const Config& c, std::ostream& out) {
    const BiasParams bias(c.epsilon, c.m);
    const auto csv = io::boundary_csv(bias.m(), c.samples);
    const auto path = output_dir(c) / ("boundary_m" + std::to_string(bias.m()) + ".csv");
    io::write_file(path, csv);
    out << "wrote " << path.string() << '\n';
    return kExitOk;
}

int cmd_classify(const Config& c, std::ostream& out) {
    if (c.point.size() < 2 || c.point.size() > 3) {
        throw ArgumentError("classify expects P2 P3 [M]");
    }
    int m = c.m;
    if (c.point.size() == 3) {
        m = static_cast<int>(c.point[2]);
        if (static_cast<double>(m) != c.point[2]) {
            throw ArgumentError("M must be an integer");
        }
    }
    const BiasParams bias(c.epsilon, m);
    const analysis::ProbabilityPoint p{Probability(c.point[0]), Probability(c.point[1])};
    out << "point: (" << num(p.p2.value()) << ", " << num(p.p3.value()) << ") m=" << bias.m() << '\n';
    out << "region: " << analysis::to_string(analysis::classify_point(p, bias.m())) << '\n';
    out << "fairness_ratio: " << num(analysis::fairness_ratio(p, bias.m())) << '\n';
    out << "exact_drift: " << drift_text(CapitalGameB(p.p2, p.p3, bias.m())) << '\n';
    return kExitOk;
}

int cmd_schemes(const Config& c, std::ostream& out) {
    const BiasParams bias(c.epsilon, c.m);
    out << std::left << std::setw(8) << "scheme" << std::setw(20) << "description" << std::setw(20)
        << "paradoxical effect" << std::setw(18) << "drift_a" << std::setw(18) << "drift_b"
        << "drift_compound" << '\n';
    for (int id = 1; id <= 8; ++id) {
        const SchemeId sid(id);
        const auto cls = analysis::classify_scheme(sid, bias, c.gamma);
        const Scheme s = build_scheme(sid, bias, c.gamma);
        out << std::left << std::setw(8) << ("#" + std::to_string(id)) << std::setw(20) << cls.description()
            << std::setw(20) << analysis::to_string(cls.paradox) << std::setw(18) << num(s.a.p1.bias())
            << std::setw(18) << num(analysis::exact_drift(s.b)) << num(analysis::exact_drift(s.compound)) << '\n';
    }
    return kExitOk;
}

int cmd_mix(const Config& c, std::ostream& out) {
    const BiasParams bias(c.epsilon, c.m);
    const GameA a = build_parrondo_games(bias).first;
    const CapitalGameB b = capital_b(c, bias);
    const auto dir = output_dir(c);
    const auto opts = ensemble_options(c);

    emit_series(c, dir, "game_a", engine::run_ensemble(a, c.games, c.trials, c.seed, opts), out);
    emit_series(c, dir, "game_b", engine::run_ensemble(b, c.games, c.trials, c.seed, opts), out);

    std::string summary = "kappa,pc1,pc2,region,signed_distance,exact_drift,mean_final,stderr_final\n";
    for (double kappa : c.kappa) {
        const auto path = mixing::make_path(a, b, mixing::Bent{kappa});
        const auto mid = mixing::path_point(path, 0.5);
        const CapitalGameB game = mixing::compound_from_point(mid, bias.m());
        const auto stats = engine::run_ensemble(game, c.games, c.trials, c.seed, opts);
        emit_series(c, dir, "mix_kappa_" + num(kappa), stats, out);
        summary += num(kappa) + "," + num(mid.p2.value()) + "," + num(mid.p3.value()) + "," +
                   analysis::to_string(analysis::classify_point(mid, bias.m())) + "," +
                   num(mixing::signed_boundary_distance(mid, bias.m())) + "," + drift_text(game) + "," +
                   num(stats.mean.back()) + "," + num(stats.standard_error.back()) + "\n";
    }
    const auto summary_path = dir / "mix_summary.csv";
    io::write_file(summary_path, summary);
    out << "wrote " << summary_path.string() << '\n' << summary;
    return kExitOk;
}

std::string join(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s;
}

std::string signed_delta(std::int64_t d) { return (d > 0 ? "+" : "") + std::to_string(d); }

int cmd_refute(const Config& c, std::ostream& out) {
    check_gamma(c.gamma);
    const auto dir = output_dir(c);
    const auto pure_a = refute::simulate_simple_compound(1.0, c.games, c.trials, c.seed, c.threads);
    const auto pure_b = refute::simulate_simple_compound(0.0, c.games, c.trials, c.seed, c.threads);
    const auto mixed = refute::simulate_simple_compound(c.gamma, c.games, c.trials, c.seed, c.threads);
    emit_series(c, dir, "simple_a", pure_a, out);
    emit_series(c, dir, "simple_b", pure_b, out);
    emit_series(c, dir, "simple_compound", mixed, out);

    const auto report = [&](const char* name, const SimpleGameRule& rule) {
        const auto abs = refute::parity_absorption(rule, 0);
        const bool winning = abs.absorbed_parity != refute::Parity::None && abs.post_absorption_delta > 0;
        out << name << ": " << (winning ? "WINNING" : "LOSING") << " (absorbed parity "
            << refute::to_string(abs.absorbed_parity) << ", " << signed_delta(abs.post_absorption_delta)
            << "/step)\n";
    };
    report("game A", refute::kSimpleGameA);
    report("game B", refute::kSimpleGameB);
    out << "compound (gamma=" << num(c.gamma) << "): " << (mixed.mean.back() > 0.0 ? "WINNING" : "LOSING")
        << " (mean final " << num(mixed.mean.back()) << ", pure B " << num(pure_b.mean.back()) << ")\n";
    out << "game B trace from 9: " << join(refute::simple_trace(refute::kSimpleGameB, 9, c.trace_steps)) << '\n';
    out << "game B trace from 10: " << join(refute::simple_trace(refute::kSimpleGameB, 10, c.trace_steps)) << '\n';
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Parrondo game simulation and exact analysis", "parrondo"};
    app.set_config("--config", "", "key=value configuration file; flags override its values");
    app.fallthrough();
    app.require_subcommand(1);

    app.add_option("--epsilon", c.epsilon, "biasing offset")->capture_default_str();
    app.add_option("--m", c.m, "capital modulus")->capture_default_str();
    app.add_option("--gamma", c.gamma, "probability of playing game A")->capture_default_str();
    app.add_option("--trials", c.trials, "trials per ensemble")->capture_default_str();
    app.add_option("--games", c.games, "plays per trial")->capture_default_str();
    app.add_option("--seed", c.seed, "random seed")->capture_default_str();
    app.add_option("--out", c.out, "output directory")->capture_default_str();
    app.add_flag("--svg", c.svg, "also write an SVG line chart per CSV");
    app.add_option("--threads", c.threads, "worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--start", c.start, "starting capital policy")
        ->check(CLI::IsMember({"stationary", "zero"}))
        ->capture_default_str();

    auto* simulate = app.add_subcommand("simulate", "ensemble simulation of games A, B and their mixture");
    simulate->add_option("--scheme", c.scheme, "scheme 1..8");
    simulate->add_option("--p2", c.p2, "override game B scenario-1 probability");
    simulate->add_option("--p3", c.p3, "override game B scenario-2 probability");
    simulate->add_flag("--history", c.history, "history-dependent game B");

    auto* boundary = app.add_subcommand("boundary", "sample the fair-game curve");
    boundary->add_option("--samples", c.samples, "number of p3 samples")->capture_default_str();

    auto* classify = app.add_subcommand("classify", "region, fairness ratio and drift of a point");
    classify->add_option("point", c.point, "P2 P3 [M]")->required()->expected(2, 3);

    auto* schemes = app.add_subcommand("schemes", "classify the eight win/lose schemes");

    auto* mixcmd = app.add_subcommand("mix", "linear and bent mixtures promoted to compound games");
    mixcmd->add_option("--kappa", c.kappa, "bend of the mixing path (repeatable)")->capture_default_str();
    mixcmd->add_option("--p2", c.p2, "override game B scenario-1 probability");
    mixcmd->add_option("--p3", c.p3, "override game B scenario-2 probability");

    auto* refutecmd = app.add_subcommand("refute", "deterministic parity game");
    refutecmd->add_option("--trace-steps", c.trace_steps, "length of the printed traces")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitArgument;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(c, out);
        if (boundary->parsed()) return cmd_boundary(c, out);
        if (classify->parsed()) return cmd_classify(c, out);
        if (schemes->parsed()) return cmd_schemes(c, out);
        if (mixcmd->parsed()) return cmd_mix(c, out);
        if (refutecmd->parsed()) return cmd_refute(c, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitArgument;
    }
    return kExitArgument;
}

} // namespace parrondo::cli
