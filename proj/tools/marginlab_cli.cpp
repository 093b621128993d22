// marginlab command-line interface: margin distributions, complexity
// estimates, generalization bounds, boosting, Levy-rate and intervals
// experiments, and penalized network selection.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "marginlab/boosting.hpp"
#include "marginlab/bounds.hpp"
#include "marginlab/complexity.hpp"
#include "marginlab/errors.hpp"
#include "marginlab/experiments.hpp"
#include "marginlab/gamma.hpp"
#include "marginlab/levy.hpp"
#include "marginlab/network.hpp"
#include "marginlab/serialize.hpp"

namespace {

using namespace marginlab;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content << "\n";
    else
        write_file(out_path, content);
}

// MARGINLAB_SEED overrides --seed when set.
std::uint64_t effective_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("MARGINLAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError("MARGINLAB_SEED is not a valid integer");
        }
    }
    return flag_seed;
}

std::vector<std::pair<double, double>> parse_targets(const std::vector<double>& flat) {
    if (flat.empty()) return IntervalsProblem{}.targets;
    if (flat.size() % 2 != 0)
        throw std::invalid_argument("--targets needs an even number of endpoints");
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < flat.size(); i += 2) out.emplace_back(flat[i], flat[i + 1]);
    return out;
}

struct ComplexityFlags {
    double rn = -1.0;
    double gn = -1.0;
    int vc = 0;
    double vc_const = 1.0;
    int draws = 0;
    std::uint64_t seed = 1;

    // (estimate, source); needs data when draws > 0
    std::pair<ComplexityEstimate, std::string> resolve(const Dataset* data, int n) const {
        if (rn >= 0.0) {
            ComplexityEstimate est;
            est.value = rn;
            est.kind = MultiplierKind::rademacher;
            return {est, "given"};
        }
        if (gn >= 0.0) {
            ComplexityEstimate est;
            est.value = gn;
            est.kind = MultiplierKind::gaussian;
            return {est, "given"};
        }
        if (vc > 0) {
            ComplexityEstimate est;
            est.value = vc_complexity_bound(vc, n, vc_const);
            est.kind = MultiplierKind::rademacher;
            return {est, "vc-bound"};
        }
        if (draws > 0) {
            if (data == nullptr)
                throw std::invalid_argument("--draws needs --data to estimate the complexity");
            StumpClass stumps;
            return {estimate_rademacher(stumps, *data, draws, effective_seed(seed)),
                    "monte-carlo"};
        }
        throw std::invalid_argument(
            "provide a complexity input: --rn, --gn, --vc, or --draws with --data");
    }
};

std::vector<int> geometric_n_list(int nmin, int nmax, int npoints) {
    if (nmin < 2 || nmax <= nmin || npoints < 2)
        throw std::invalid_argument("need nmin >= 2, nmax > nmin, npoints >= 2");
    std::vector<int> out;
    for (int i = 0; i < npoints; ++i) {
        double f = static_cast<double>(i) / (npoints - 1);
        double v = std::pow(10.0, std::log10(static_cast<double>(nmin)) +
                                      f * (std::log10(static_cast<double>(nmax)) -
                                           std::log10(static_cast<double>(nmin))));
        int n = static_cast<int>(std::llround(v));
        if (out.empty() || n != out.back()) out.push_back(n);
    }
    return out;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"margin-based generalization bounds for combined classifiers"};
    app.require_subcommand(1);

    // ---- boost ----------------------------------------------------------
    auto* boost = app.add_subcommand("boost", "run AdaBoost and record the trace");
    std::string boost_data, boost_weak = "stump", boost_trace = "trace.json",
                boost_model = "model.json";
    int boost_rounds = 10;
    bool boost_header = false;
    double boost_clamp = 0.0;
    std::uint64_t boost_seed = 1;
    boost->add_option("--data", boost_data, "training CSV (label first column)")->required();
    boost->add_flag("--header", boost_header, "skip one CSV header row");
    boost->add_option("--rounds", boost_rounds, "boosting rounds")->required();
    boost->add_option("--weak", boost_weak, "weak learner: stump or interval")
        ->check(CLI::IsMember({"stump", "interval"}));
    boost->add_option("--e-clamp", boost_clamp, "error clamp (default 1/(2n))");
    boost->add_option("--seed", boost_seed, "seed echoed into the trace");
    boost->add_option("--trace", boost_trace, "trace output path");
    boost->add_option("--model", boost_model, "final classifier output path");
    boost->callback([&]() {
        Dataset data = load_csv(boost_data, LabelKind::binary, boost_header);
        WeakLearner learner = boost_weak == "stump" ? WeakLearner(weak_learn_stump)
                                                    : WeakLearner(weak_learn_interval);
        BoostingTrace trace = adaboost(data, boost_rounds, learner, {boost_clamp});
        nlohmann::json jt = nlohmann::json::parse(trace_to_json(trace));
        jt["seed"] = effective_seed(boost_seed);
        jt["weak"] = boost_weak;
        write_file(boost_trace, jt.dump(2));
        write_file(boost_model, classifier_to_json(trace.prefix_classifier()).dump(2));
    });

    // ---- complexity ------------------------------------------------------
    auto* cpx = app.add_subcommand("complexity", "Monte Carlo Rademacher/Gaussian complexity");
    std::string cpx_class = "stumps", cpx_data, cpx_kind = "rademacher", cpx_out;
    bool cpx_header = false, cpx_labeled = false;
    int cpx_draws = 2000;
    std::uint64_t cpx_seed = 1;
    cpx->add_option("--class", cpx_class, "function class: stumps or conv-stumps")
        ->check(CLI::IsMember({"stumps", "conv-stumps"}));
    cpx->add_option("--data", cpx_data, "evaluation dataset CSV")->required();
    cpx->add_flag("--header", cpx_header, "skip one CSV header row");
    cpx->add_option("--draws", cpx_draws, "multiplier draws (default 2000)");
    cpx->add_option("--seed", cpx_seed, "seed");
    cpx->add_option("--kind", cpx_kind, "rademacher or gaussian")
        ->check(CLI::IsMember({"rademacher", "gaussian"}));
    cpx->add_flag("--labeled", cpx_labeled, "multiply the draws by the -1/+1 labels");
    cpx->add_option("--out", cpx_out, "output JSON path (stdout when omitted)");
    cpx->callback([&]() {
        Dataset data = load_csv(cpx_data, LabelKind::binary, cpx_header);
        StumpClass stumps;
        ConvexHullClass conv(std::make_shared<StumpClass>());
        const FunctionClassHandle& cls =
            cpx_class == "stumps" ? static_cast<const FunctionClassHandle&>(stumps)
                                  : static_cast<const FunctionClassHandle&>(conv);
        EstimatorOptions opt;
        opt.label_multipliers = cpx_labeled;
        std::uint64_t seed = effective_seed(cpx_seed);
        ComplexityEstimate est =
            cpx_kind == "rademacher" ? estimate_rademacher(cls, data, cpx_draws, seed, opt)
                                     : estimate_gaussian(cls, data, cpx_draws, seed, opt);
        emit(cpx_out, complexity_to_json(est).dump(2));
    });

    // ---- bounds ----------------------------------------------------------
    auto* bounds = app.add_subcommand("bounds", "evaluate a generalization bound");
    std::string b_variant, b_margins, b_data, b_model, b_trace, b_cost = "upper", b_out, b_curve;
    bool b_header = false;
    int b_n = 0, b_classes = 2;
    double b_t = 2.0;
    std::vector<double> b_deltas;
    ComplexityFlags b_cpx;
    bounds->add_option("--variant", b_variant, "t2, t4, t11, or adaboost")
        ->required()
        ->check(CLI::IsMember({"t2", "t4", "t11", "adaboost"}));
    bounds->add_option("--margins", b_margins, "margins CSV (value[,weight] rows)");
    bounds->add_option("--data", b_data, "dataset CSV");
    bounds->add_flag("--header", b_header, "skip one CSV header row");
    bounds->add_option("--model", b_model, "voting classifier JSON (with --data)");
    bounds->add_option("--trace", b_trace, "boosting trace JSON (adaboost variant)");
    bounds->add_option("--n", b_n, "sample size (read from --data when omitted)");
    bounds->add_option("--t", b_t, "confidence parameter t (default 2)");
    bounds->add_option("--classes", b_classes, "number of classes M (t11)");
    bounds->add_option("--cost", b_cost, "cost function: upper or lower (t2)")
        ->check(CLI::IsMember({"upper", "lower"}));
    bounds->add_option("--deltas", b_deltas, "explicit delta grid")->delimiter(',');
    bounds->add_option("--rn", b_cpx.rn, "Rademacher complexity value");
    bounds->add_option("--gn", b_cpx.gn, "Gaussian complexity value");
    bounds->add_option("--vc", b_cpx.vc, "VC dimension for the closed-form complexity");
    bounds->add_option("--vc-const", b_cpx.vc_const, "constant C in C sqrt(V/n)");
    bounds->add_option("--draws", b_cpx.draws, "Monte Carlo draws over the stump class");
    bounds->add_option("--seed", b_cpx.seed, "seed for the Monte Carlo complexity");
    bounds->add_option("--out", b_out, "report JSON path (stdout when omitted)");
    bounds->add_option("--curve", b_curve, "write (delta, bound) CSV here");
    bounds->callback([&]() {
        std::optional<Dataset> data;
        if (!b_data.empty()) data = load_csv(b_data, LabelKind::binary, b_header);
        int n = b_n > 0 ? b_n : (data ? static_cast<int>(data->size()) : 0);
        if (b_variant == "adaboost") {
            if (b_trace.empty()) throw std::invalid_argument("adaboost variant needs --trace");
            BoostingTrace trace = trace_from_json(read_file(b_trace));
            if (n == 0) n = trace.n;
            auto [est, source] = b_cpx.resolve(data ? &*data : nullptr, n);
            std::vector<AdaBoostRoundSummary> rounds;
            for (const auto& r : trace.rounds) rounds.push_back({r.error});
            BoundReport rep = adaboost_product_bound(rounds, est, b_t, n);
            emit(b_out, bound_report_to_json(rep, source));
            return;
        }
        std::optional<MarginDistribution> margins;
        if (!b_margins.empty()) {
            margins = MarginDistribution::from_csv(read_file(b_margins));
        } else if (data && !b_model.empty()) {
            VotingClassifier f = classifier_from_json(nlohmann::json::parse(read_file(b_model)));
            margins = empirical_margin_distribution(f, *data);
        } else {
            throw std::invalid_argument("provide --margins, or --data with --model");
        }
        if (n == 0) throw std::invalid_argument("provide --n (or --data) for the sample size");
        auto [est, source] = b_cpx.resolve(data ? &*data : nullptr, n);
        std::vector<double> grid = b_deltas.empty() ? default_delta_grid(*margins, n) : b_deltas;
        BoundReport rep;
        if (b_variant == "t2") {
            auto cost = b_cost == "upper" ? CostFunction::upper_step() : CostFunction::lower_step();
            rep = theorem2_bound(*margins, est, cost, b_t, n, grid);
        } else if (b_variant == "t4") {
            rep = theorem4_two_sided(*margins, est, b_t, n, grid);
        } else {
            rep = theorem11_multiclass_bound(*margins, est, b_classes, b_t, n, grid);
        }
        emit(b_out, bound_report_to_json(rep, source));
        if (!b_curve.empty()) write_file(b_curve, bound_curve_to_csv(rep));
    });

    // ---- gamma -----------------------------------------------------------
    auto* gamma = app.add_subcommand("gamma", "gamma-margins, gamma-bounds, ratio experiment");
    std::string g_margins, g_trace, g_data, g_out, g_table, g_csv;
    bool g_header = false, g_ratio = false;
    int g_n = 0, g_rounds = 20, g_reps = 50;
    double g_cgamma = 1.0, g_noise = 0.0;
    std::vector<double> g_gammas = {2.0 / 3.0, 0.8, 1.0};
    std::vector<double> g_targets;
    std::uint64_t g_seed = 1;
    gamma->add_option("--gamma,--gammas", g_gammas, "gamma values")->delimiter(',');
    gamma->add_option("--margins", g_margins, "margins CSV");
    gamma->add_option("--n", g_n, "sample size");
    gamma->add_option("--c-gamma", g_cgamma, "reporting constant C_gamma (default 1)");
    gamma->add_option("--trace", g_trace, "boosting trace JSON for per-round bounds");
    gamma->add_option("--data", g_data, "dataset CSV (with --trace)");
    gamma->add_flag("--header", g_header, "skip one CSV header row");
    gamma->add_option("--table", g_table, "per-round (round,gamma,bound) CSV path");
    gamma->add_flag("--ratio", g_ratio, "run the empirical/true gamma-margin ratio experiment");
    gamma->add_option("--rounds", g_rounds, "boosting rounds (ratio experiment)");
    gamma->add_option("--reps", g_reps, "replicates (ratio experiment)");
    gamma->add_option("--noise", g_noise, "label noise (ratio experiment)");
    gamma->add_option("--targets", g_targets, "target interval endpoints (ratio experiment)")
        ->delimiter(',');
    gamma->add_option("--seed", g_seed, "seed (ratio experiment)");
    gamma->add_option("--out", g_out, "output JSON (stdout when omitted)");
    gamma->add_option("--csv", g_csv, "ratio CSV path (ratio experiment)");
    gamma->callback([&]() {
        if (g_ratio) {
            RatioConfig config;
            config.problem.targets = parse_targets(g_targets);
            config.problem.noise = g_noise;
            if (g_n > 0) config.n = g_n;
            config.rounds = g_rounds;
            config.replicates = g_reps;
            config.gammas = g_gammas;
            config.seed = effective_seed(g_seed);
            RatioReport report = margin_ratio_experiment(config);
            emit(g_out, ratio_report_to_json(report));
            if (!g_csv.empty()) write_file(g_csv, ratio_report_to_csv(report));
            return;
        }
        if (!g_trace.empty()) {
            if (g_data.empty()) throw std::invalid_argument("--trace needs --data");
            Dataset data = load_csv(g_data, LabelKind::binary, g_header);
            BoostingTrace trace = trace_from_json(read_file(g_trace));
            int n = g_n > 0 ? g_n : static_cast<int>(data.size());
            std::string csv = "round,gamma,bound\n";
            char buf[96];
            nlohmann::json last = nlohmann::json::array();
            for (std::size_t k = 1; k <= trace.rounds.size(); ++k) {
                VotingClassifier f = trace.prefix_classifier(k);
                MarginDistribution margins = empirical_margin_distribution(f, data);
                last = nlohmann::json::array();
                for (double g : g_gammas) {
                    GammaMarginResult res = gamma_margin_report(margins, g, n, g_cgamma);
                    std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", k, g, res.gamma_bound);
                    csv += buf;
                    last.push_back({{"gamma", res.gamma},
                                    {"delta_hat", res.delta_hat},
                                    {"gamma_bound", res.gamma_bound},
                                    {"n", res.n},
                                    {"c_gamma", res.c_gamma}});
                }
            }
            if (!g_table.empty()) write_file(g_table, csv);
            emit(g_out, last.dump(2));
            return;
        }
        if (g_margins.empty() || g_n <= 0)
            throw std::invalid_argument("provide --margins with --n (or --trace/--ratio)");
        MarginDistribution margins = MarginDistribution::from_csv(read_file(g_margins));
        nlohmann::json out = nlohmann::json::array();
        for (double g : g_gammas) {
            GammaMarginResult res = gamma_margin_report(margins, g, g_n, g_cgamma);
            out.push_back({{"gamma", res.gamma},
                           {"delta_hat", res.delta_hat},
                           {"gamma_bound", res.gamma_bound},
                           {"n", res.n},
                           {"c_gamma", res.c_gamma}});
        }
        emit(g_out, out.dump(2));
    });

    // ---- levy-rate -------------------------------------------------------
    auto* levy = app.add_subcommand("levy-rate", "Levy-distance convergence-rate experiment");
    double l_alpha = 2.0;
    int l_nmin = 100, l_nmax = 100000, l_npoints = 7, l_reps = 20;
    std::uint64_t l_seed = 1;
    std::string l_out, l_csv;
    bool l_serial = false;
    levy->add_option("--alpha", l_alpha, "entropy exponent alpha in (0, 2]")->required();
    levy->add_option("--nmin", l_nmin, "smallest sample size");
    levy->add_option("--nmax", l_nmax, "largest sample size");
    levy->add_option("--npoints", l_npoints, "geometric grid size");
    levy->add_option("--reps", l_reps, "replicates per sample size");
    levy->add_option("--seed", l_seed, "seed");
    levy->add_flag("--serial", l_serial, "disable the parallel replicate loop");
    levy->add_option("--out", l_out, "output JSON (stdout when omitted)");
    levy->add_option("--csv", l_csv, "(n, median_distance) CSV path");
    levy->callback([&]() {
        std::vector<int> ns = geometric_n_list(l_nmin, l_nmax, l_npoints);
        LevyRateResult res =
            levy_rate_experiment(l_alpha, ns, l_reps, effective_seed(l_seed),
                                 l_serial ? Execution::serial : Execution::parallel);
        nlohmann::json j;
        j["alpha"] = res.alpha;
        j["slope"] = res.slope;
        j["stderr"] = res.slope_std_error;
        j["intercept"] = res.intercept;
        j["expected_slope"] = res.expected_slope;
        j["residuals"] = res.residuals;
        j["seed"] = effective_seed(l_seed);
        j["replicates"] = l_reps;
        emit(l_out, j.dump(2));
        if (!l_csv.empty()) {
            std::string csv = "n,median_distance\n";
            char buf[80];
            for (const auto& [n, d] : res.medians) {
                std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", n, d);
                csv += buf;
            }
            write_file(l_csv, csv);
        }
    });

    // ---- nn-select -------------------------------------------------------
    auto* nn = app.add_subcommand("nn-select", "penalized selection over network candidates");
    std::string nn_dir, nn_data, nn_out;
    bool nn_header = false;
    double nn_gn = 0.0, nn_alpha = 3.0;
    nn->add_option("--nets", nn_dir, "directory of network JSON files")->required();
    nn->add_option("--data", nn_data, "dataset CSV")->required();
    nn->add_flag("--header", nn_header, "skip one CSV header row");
    nn->add_option("--gn", nn_gn, "Gaussian complexity of the base class")->required();
    nn->add_option("--alpha", nn_alpha, "architecture-sum exponent (zeta(alpha) < 3/2)");
    nn->add_option("--out", nn_out, "output JSON (stdout when omitted)");
    nn->callback([&]() {
        Dataset data = load_csv(nn_data, LabelKind::binary, nn_header);
        std::vector<std::string> files;
        for (const auto& entry : std::filesystem::directory_iterator(nn_dir))
            if (entry.path().extension() == ".json") files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
        if (files.empty()) throw ParseError("no .json network files in " + nn_dir);
        std::vector<FeedforwardNet> nets;
        std::vector<MarginDistribution> margins;
        for (const auto& file : files) {
            nets.push_back(net_from_json(read_file(file)));
            std::vector<double> m(data.size());
            for (std::size_t i = 0; i < data.size(); ++i)
                m[i] = static_cast<double>(data.label(i)) * nets.back().value(data.sample(i));
            margins.push_back(MarginDistribution::from_values(m));
        }
        std::vector<std::pair<const FeedforwardNet*, const MarginDistribution*>> candidates;
        for (std::size_t c = 0; c < nets.size(); ++c)
            candidates.emplace_back(&nets[c], &margins[c]);
        ComplexityEstimate gn;
        gn.value = nn_gn;
        gn.kind = MultiplierKind::gaussian;
        MarginDistribution pooled = margins.front();
        SelectionResult sel = penalized_select(candidates, static_cast<int>(data.size()), gn,
                                               nn_alpha, default_delta_grid(pooled,
                                                                            static_cast<int>(data.size())));
        nlohmann::json j;
        j["winner"] = sel.winner;
        j["winner_file"] = files[sel.winner];
        j["gn"] = nn_gn;
        j["alpha"] = nn_alpha;
        j["table"] = nlohmann::json::array();
        for (const auto& rep : sel.table) {
            nlohmann::json jr;
            jr["file"] = files[rep.index];
            jr["training_error"] = rep.training_error;
            jr["penalty"] = rep.penalty;
            jr["objective"] = rep.objective;
            jr["best_delta"] = rep.best_delta;
            jr["lambda"] = rep.breakdown.lambda;
            jr["gamma_alpha"] = rep.breakdown.gamma_alpha;
            jr["w_per_layer"] = rep.breakdown.w_per_layer;
            j["table"].push_back(jr);
        }
        emit(nn_out, j.dump(2));
    });

    // ---- intervals -------------------------------------------------------
    auto* intervals = app.add_subcommand("intervals", "replicated intervals-testbed experiment");
    ExperimentConfig icfg;
    std::vector<double> i_targets;
    std::string i_outdir = ".";
    bool i_serial = false;
    intervals->add_option("--n", icfg.n, "sample size per replicate");
    intervals->add_option("--rounds", icfg.rounds, "boosting rounds");
    intervals->add_option("--reps", icfg.replicates, "replicates");
    intervals->add_option("--gammas", icfg.gammas, "gamma values for the gamma-bounds")
        ->delimiter(',');
    intervals->add_option("--t", icfg.t, "confidence parameter t");
    intervals->add_option("--draws", icfg.complexity_draws, "Monte Carlo complexity draws");
    intervals->add_option("--noise", icfg.problem.noise, "label-flip probability");
    intervals->add_option("--targets", i_targets, "target interval endpoints, flattened")
        ->delimiter(',');
    intervals->add_option("--c-gamma", icfg.c_gamma, "reporting constant C_gamma");
    intervals->add_option("--seed", icfg.seed, "master seed");
    intervals->add_flag("--serial", i_serial, "disable the parallel replicate loop");
    intervals->add_option("--outdir", i_outdir, "output directory (report.json, curves.csv)");
    intervals->callback([&]() {
        icfg.problem.targets = parse_targets(i_targets);
        icfg.seed = effective_seed(icfg.seed);
        std::sort(icfg.gammas.begin(), icfg.gammas.end());
        ExperimentReport report = run_intervals_experiment(
            icfg, i_serial ? Execution::serial : Execution::parallel);
        std::filesystem::create_directories(i_outdir);
        write_file((std::filesystem::path(i_outdir) / "report.json").string(),
                   report_to_json(report));
        write_file((std::filesystem::path(i_outdir) / "curves.csv").string(),
                   curves_csv(report));
        std::cout << "coverage_t2=" << report.coverage_t2
                  << " coverage_t10=" << report.coverage_t10
                  << " gamma_ordering_violations=" << report.gamma_ordering_violations << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // usage error
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
