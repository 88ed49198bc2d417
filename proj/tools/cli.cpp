#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "restab/corpus.hpp"
#include "restab/csv.hpp"
#include "restab/dls.hpp"
#include "restab/error.hpp"
#include "restab/eval.hpp"
#include "restab/model.hpp"
#include "restab/nonparam.hpp"
#include "restab/sampler.hpp"
#include "restab/synth.hpp"
#include "restab/tables.hpp"
#include "restab/version.hpp"

namespace fs = std::filesystem;

namespace restab::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MissingImputation:
        case ErrorKind::SliceCollapse:
        case ErrorKind::EmptySamples:
            return kExitNumerical;
        default:
            return kExitData;
    }
}

std::string version_text() {
    return std::string("restab ") + kVersion + "\nembedded table: " + kDlTableVersion;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    return in;
}

// Files are rendered in memory and only written once the command has
// finished computing; each lands via a temp file and a rename.
class Outputs {
public:
    explicit Outputs(fs::path dir) : dir_(std::move(dir)) {}

    void add(const std::string& name, std::string body) { files_.emplace_back(name, std::move(body)); }

    void commit() const {
        if (!dir_.empty()) fs::create_directories(dir_);
        for (const auto& [name, body] : files_) {
            const fs::path path = dir_ / name;
            fs::path tmp = path;
            tmp += ".tmp";
            {
                std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
                if (!f) throw Error(ErrorKind::Io, "cannot write '" + tmp.string() + "'");
                f << body;
                f.flush();
                if (!f) throw Error(ErrorKind::Io, "write failed for '" + tmp.string() + "'");
            }
            fs::rename(tmp, path);
        }
    }

    const fs::path& dir() const { return dir_; }

private:
    fs::path dir_;
    std::vector<std::pair<std::string, std::string>> files_;
};

struct Manifest {
    std::string command;
    std::vector<std::string> inputs;
    std::string out_dir;
    std::vector<std::string> overrides;
    std::optional<std::uint64_t> seed;
    std::string settings;  // key=value lines

    std::string render() const {
        std::ostringstream os;
        os << "command=" << command << '\n' << "version=" << kVersion << '\n';
        for (const auto& in : inputs) os << "input=" << in << '\n';
        os << "output_dir=" << out_dir << '\n';
        for (const auto& o : overrides) os << "override=" << o << '\n';
        if (seed) os << "seed=" << *seed << '\n';
        os << settings << "timestamp=" << utc_timestamp() << '\n';
        return os.str();
    }
};

template <typename F>
std::string render(F&& write) {
    std::ostringstream os;
    write(os);
    return os.str();
}

// --config key=value: every key names a setting of the running command.
using Setters = std::map<std::string, std::function<void(const std::string&)>>;

template <typename T>
std::function<void(const std::string&)> set_int(T& slot) {
    return [&slot](const std::string& v) {
        const auto x = csv::parse_int(v);
        if (!x) throw UsageError("expected an integer, got '" + v + "'");
        slot = static_cast<T>(*x);
    };
}

std::function<void(const std::string&)> set_double(double& slot) {
    return [&slot](const std::string& v) {
        const auto x = csv::parse_double(v);
        if (!x) throw UsageError("expected a number, got '" + v + "'");
        slot = *x;
    };
}

std::function<void(const std::string&)> set_string(std::string& slot) {
    return [&slot](const std::string& v) { slot = v; };
}

void apply_overrides(const std::vector<std::string>& overrides, const Setters& setters) {
    for (const auto& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--config expects key=value, got '" + kv + "'");
        const auto key = kv.substr(0, eq);
        const auto it = setters.find(key);
        if (it == setters.end()) {
            std::string known;
            for (const auto& [k, _] : setters) known += (known.empty() ? "" : ", ") + k;
            throw UsageError("unknown --config key '" + key + "'" + (known.empty() ? "" : " (known: " + known + ")"));
        }
        try {
            it->second(kv.substr(eq + 1));
        } catch (const UsageError& e) {
            throw UsageError("--config " + key + ": " + e.what());
        }
    }
}

std::vector<InningsSummary> load_innings(const std::string& path, std::ostream& out) {
    auto in = open_input(path);
    const auto parsed = parse_corpus(in);
    auto result = summarize_all(parsed.matches);
    std::size_t short_count = 0;
    std::size_t all_out = 0;
    for (const auto& r : result.rejected) (r.reason == RejectReason::ShortInnings ? short_count : all_out)++;
    out << "matches: " << parsed.matches.size() << " accepted: " << result.accepted.size()
        << " rejected: " << result.rejected.size() << " (short " << short_count << ", all out " << all_out << ")\n";
    if (result.accepted.empty())
        throw Error(ErrorKind::EmptyCorpus, "no innings passed the 50-over filter (" + std::to_string(short_count) +
                                                " shorter than 50 overs, " + std::to_string(all_out) +
                                                " all out)");
    return std::move(result.accepted);
}

MatchState parse_state(const std::string& text) {
    const auto f = csv::split(text);
    const auto u = f.size() == 2 ? csv::parse_int(f[0]) : std::nullopt;
    const auto w = f.size() == 2 ? csv::parse_int(f[1]) : std::nullopt;
    if (!u || !w || *u < 0 || *u > kOvers || *w < 0 || *w >= kWicketStates)
        throw UsageError("state must be u,w with u in 0..50 and w in 0..9, got '" + text + "'");
    return {static_cast<int>(*u), static_cast<int>(*w)};
}

ResourceTable load_table(const std::string& spec) {
    if (spec == "dl2013") return dl_reference();
    auto in = open_input(spec);
    return read_table_csv(in, TableSource::Bayes);
}

void check_splits(const std::vector<int>& splits) {
    for (int u : splits)
        if (u < 1 || u >= kOvers) throw UsageError("split points must lie in 1..49, got " + std::to_string(u));
}

// ---------------------------------------------------------------- commands

struct Common {
    std::string out_dir = ".";
    std::vector<std::string> overrides;
};

struct IngestArgs {
    std::string corpus;
};

int cmd_ingest(const IngestArgs& a, const Common& c, std::ostream& out) {
    apply_overrides(c.overrides, {});
    const auto innings = load_innings(a.corpus, out);
    const CellGrid grid = aggregate(innings);
    out << "observed cells: " << grid.observed_count() << "/" << kCells << '\n';

    Outputs files(c.out_dir);
    files.add("grid.csv", render([&](std::ostream& os) { write_grid_csv(os, grid); }));
    files.add("manifest_ingest.txt", Manifest{"ingest", {a.corpus}, c.out_dir, c.overrides, {}, ""}.render());
    files.commit();
    return kExitOk;
}

struct FitArgs {
    std::string grid;
    McmcConfig mcmc;
    PriorSpec prior;
    std::string parametrization = "ab";
};

int cmd_fit(FitArgs a, const Common& c, std::ostream& out) {
    apply_overrides(c.overrides, {
                                     {"burn_in", set_int(a.mcmc.burn_in)},
                                     {"keep", set_int(a.mcmc.keep)},
                                     {"thin", set_int(a.mcmc.thin)},
                                     {"seed", set_int(a.mcmc.seed)},
                                     {"chains", set_int(a.mcmc.n_chains)},
                                     {"slice_width_a", set_double(a.mcmc.slice_width_a)},
                                     {"slice_width_b", set_double(a.mcmc.slice_width_b)},
                                     {"slice_max_steps", set_int(a.mcmc.slice_max_steps)},
                                     {"prior", set_string(a.parametrization)},
                                     {"A0", set_double(a.prior.A0)},
                                     {"B0", set_double(a.prior.B0)},
                                     {"C0", set_double(a.prior.C0)},
                                     {"gamma_a", set_double(a.prior.gamma_a)},
                                     {"gamma_b", set_double(a.prior.gamma_b)},
                                 });
    const auto p = parse_parametrization(a.parametrization);
    if (!p) throw UsageError("--prior must be ab or ac");
    a.prior.parametrization = *p;
    if (a.mcmc.burn_in < 0 || a.mcmc.keep < 0 || a.mcmc.thin < 1 || a.mcmc.n_chains < 1 ||
        a.mcmc.slice_max_steps < 1 || !(a.mcmc.slice_width_a > 0) || !(a.mcmc.slice_width_b > 0))
        throw UsageError("burn_in and keep must be >= 0; thin, chains and slice_max_steps >= 1; widths > 0");
    if (!(a.prior.A0 > 0) || !(a.prior.B0 > 0) || !(a.prior.C0 > 0) || !(a.prior.gamma_a > 0) ||
        !(a.prior.gamma_b > 0))
        throw UsageError("prior bounds and gamma hyperparameters must be positive");

    auto in = open_input(a.grid);
    const CellGrid grid = read_grid_csv(in);
    const PosteriorSamples samples = run_chains(grid, a.prior, a.mcmc);
    const MedianEstimate est = posterior_median_theta(samples);
    const ResourceTable table = bayes_table(est.theta);
    const MonoList strict = check_monotone(table, true);

    out << "draws: " << samples.size() << " (" << a.mcmc.n_chains << " chain" << (a.mcmc.n_chains == 1 ? "" : "s")
        << ")\n";
    out << "median repaired: " << (est.repaired ? "yes" : "no") << '\n';
    if (strict.empty()) {
        out << "strict monotonicity: ok\n";
    } else {
        out << "strict monotonicity: " << strict.size() << " violations; first " << describe(strict.front()) << '\n';
    }

    std::ostringstream settings;
    write_config_echo(settings, a.mcmc, a.prior);
    settings << "median_repaired=" << (est.repaired ? "true" : "false") << '\n';

    Outputs files(c.out_dir);
    files.add("posterior.csv", render([&](std::ostream& os) { write_posterior_csv(os, samples); }));
    files.add("theta_hat.csv", render([&](std::ostream& os) { write_theta_csv(os, est.theta); }));
    files.add("table_bayes.csv", render([&](std::ostream& os) { write_table_csv(os, table); }));
    files.add("manifest_fit.txt",
              Manifest{"fit", {a.grid}, c.out_dir, c.overrides, {}, settings.str()}.render());
    files.commit();
    return kExitOk;
}

struct TableArgs {
    std::string source;
    std::string theta;
    std::string grid;
};

int cmd_table(const TableArgs& a, const Common& c, std::ostream& out) {
    apply_overrides(c.overrides, {});
    const auto source = parse_table_source(a.source);
    if (!source) throw UsageError("--source must be bayes, empirical or dl2013");

    ResourceTable table;
    std::vector<std::string> inputs;
    switch (*source) {
        case TableSource::DL2013:
            table = dl_reference();
            break;
        case TableSource::Bayes: {
            if (a.theta.empty()) throw UsageError("--source bayes needs --theta theta_hat.csv");
            auto in = open_input(a.theta);
            table = bayes_table(read_theta_csv(in));
            inputs.push_back(a.theta);
            break;
        }
        case TableSource::Empirical: {
            if (a.grid.empty()) throw UsageError("--source empirical needs --grid grid.csv");
            auto in = open_input(a.grid);
            table = empirical_table(read_grid_csv(in)).table;
            inputs.push_back(a.grid);
            break;
        }
    }

    const MonoList weak = check_monotone(table, false);
    const MonoList strict = check_monotone(table, true);
    std::ostringstream report;
    report << "source: " << to_string(*source) << '\n'
           << "increases: " << weak.size() << '\n'
           << "ties: " << strict.size() - weak.size() << '\n';
    for (const auto& v : strict) report << describe(v) << '\n';
    out << "source: " << to_string(*source) << "\nincreases: " << weak.size()
        << "\nties: " << strict.size() - weak.size() << '\n';
    if (!strict.empty()) out << "first: " << describe(strict.front()) << '\n';

    const std::string name = to_string(*source);
    Outputs files(c.out_dir);
    files.add("table_" + name + ".csv", render([&](std::ostream& os) { write_table_csv(os, table); }));
    files.add("mono_" + name + ".txt", report.str());
    files.add("manifest_table.txt",
              Manifest{"table", inputs, c.out_dir, c.overrides, {}, "source=" + name + "\n"}.render());
    files.commit();
    return kExitOk;
}

struct TargetArgs {
    long long score = 0;
    std::optional<double> p1;
    std::optional<double> p2;
    std::optional<double> g50;
    std::string table;
    std::string state1 = "50,0";
    std::string state2;
    bool write_manifest = false;
};

int cmd_target(const TargetArgs& a, const Common& c, std::ostream& out) {
    apply_overrides(c.overrides, {});
    TargetInput in;
    in.score = a.score;
    std::vector<std::string> inputs;
    if (!a.table.empty()) {
        if (a.p1 || a.p2) throw UsageError("give either --p1/--p2 or --table with states, not both");
        if (a.state2.empty()) throw UsageError("--table needs --state2 u,w");
        const ResourceTable table = load_table(a.table);
        in.p1 = resources(table, parse_state(a.state1));
        in.p2 = resources(table, parse_state(a.state2));
        inputs.push_back(a.table);
    } else {
        if (!a.p1 || !a.p2) throw UsageError("target needs --p1 and --p2, or --table with --state2");
        in.p1 = *a.p1;
        in.p2 = *a.p2;
    }
    if (in.p2 > in.p1) {
        if (!a.g50) throw UsageError("--g50 is required when P2 > P1");
        in.g50 = *a.g50;
    }
    if (in.score < 0) throw UsageError("--score must be non-negative");

    const TargetResult r = target(in);
    out << "P1: " << csv::format_fixed(in.p1, 2) << '\n'
        << "P2: " << csv::format_fixed(in.p2, 2) << '\n'
        << "Par: " << csv::format_exact(r.par) << '\n'
        << "Target: " << r.target << '\n';

    if (a.write_manifest) {
        std::ostringstream settings;
        settings << "score=" << in.score << "\np1=" << csv::format_exact(in.p1)
                 << "\np2=" << csv::format_exact(in.p2) << "\ng50=" << csv::format_exact(in.g50)
                 << "\ntarget=" << r.target << '\n';
        Outputs files(c.out_dir);
        files.add("manifest_target.txt",
                  Manifest{"target", inputs, c.out_dir, c.overrides, {}, settings.str()}.render());
        files.commit();
    }
    return kExitOk;
}

struct EvaluateArgs {
    std::string corpus;
    std::string table;
    std::string reference = "dl2013";
    std::string posterior;
    std::string splits;
    int predict_at = 15;
};

int cmd_evaluate(EvaluateArgs a, const Common& c, std::ostream& out) {
    apply_overrides(c.overrides, {{"predict_at", set_int(a.predict_at)}, {"reference", set_string(a.reference)}});
    if (a.table.empty() && a.posterior.empty()) throw UsageError("evaluate needs --table and/or --posterior");
    if (a.predict_at < 1 || a.predict_at >= kOvers) throw UsageError("--predict-at must lie in 1..49");

    std::vector<int> curve_splits;
    std::vector<int> density_splits;
    try {
        curve_splits = parse_splits(a.splits.empty() ? "1..30" : a.splits);
        density_splits = parse_splits(a.splits.empty() ? "20,25,...,45" : a.splits);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    check_splits(curve_splits);
    check_splits(density_splits);

    const auto innings = load_innings(a.corpus, out);
    const ResourceTable reference = load_table(a.reference);
    std::vector<std::string> inputs{a.corpus, a.reference};
    Outputs files(c.out_dir);

    if (!a.table.empty()) {
        inputs.push_back(a.table);
        const ResourceTable table = load_table(a.table);
        const RssCurve curve = ratio_curve(innings, table, reference, curve_splits);
        int below = 0;
        for (const auto& p : curve) below += p.ratio < 1.0;
        out << "splits with ratio < 1: " << below << "/" << curve.size() << '\n';
        files.add("rss_curve.csv", render([&](std::ostream& os) { write_rss_curve_csv(os, curve); }));
        const auto preds = predictions_at(innings, table, a.predict_at);
        files.add("predictions_u" + std::to_string(a.predict_at) + ".csv",
                  render([&](std::ostream& os) { write_predictions_csv(os, preds); }));
    }
    if (!a.posterior.empty()) {
        inputs.push_back(a.posterior);
        auto in = open_input(a.posterior);
        const PosteriorSamples samples = read_posterior_csv(in);
        if (samples.size() == 0) throw Error(ErrorKind::EmptySamples, "posterior file holds no draws");
        const auto ratios = posterior_ratio_density(samples, innings, reference, density_splits);
        out << "ratio samples: " << ratios.size() << '\n';
        files.add("ratio_samples.csv", render([&](std::ostream& os) { write_ratio_samples_csv(os, ratios); }));
    }

    std::ostringstream settings;
    settings << "splits=" << (a.splits.empty() ? "default" : a.splits) << "\npredict_at=" << a.predict_at
             << "\nreference=" << a.reference << '\n';
    files.add("manifest_evaluate.txt",
              Manifest{"evaluate", inputs, c.out_dir, c.overrides, {}, settings.str()}.render());
    files.commit();
    return kExitOk;
}

struct SynthArgs {
    SynthConfig config;
    std::string theta;
};

int cmd_synth(SynthArgs a, const Common& c, std::ostream& out) {
    apply_overrides(c.overrides, {
                                     {"matches", set_int(a.config.n_matches)},
                                     {"seed", set_int(a.config.seed)},
                                     {"noise_sd", set_double(a.config.noise_sd)},
                                     {"hazard_base", set_double(a.config.hazard.base)},
                                     {"hazard_slope", set_double(a.config.hazard.slope)},
                                 });
    std::vector<std::string> inputs;
    if (!a.theta.empty()) {
        auto in = open_input(a.theta);
        a.config.theta_star = read_theta_csv(in);
        inputs.push_back(a.theta);
    }
    if (!valid(a.config))
        throw UsageError("invalid synth settings: matches >= 0, noise >= 0, hazard in [0, 1], valid theta");

    const auto matches = generate(a.config);
    out << "matches: " << matches.size() << '\n';

    std::ostringstream settings;
    settings << "matches=" << a.config.n_matches << "\nnoise_sd=" << csv::format_exact(a.config.noise_sd)
             << "\nhazard_base=" << csv::format_exact(a.config.hazard.base)
             << "\nhazard_slope=" << csv::format_exact(a.config.hazard.slope) << '\n';
    Outputs files(c.out_dir);
    files.add("corpus.csv", render([&](std::ostream& os) { write_corpus_csv(os, matches); }));
    files.add("theta_star.csv", render([&](std::ostream& os) { write_theta_csv(os, a.config.theta_star); }));
    files.add("manifest_synth.txt",
              Manifest{"synth", inputs, c.out_dir, c.overrides, a.config.seed, settings.str()}.render());
    files.commit();
    return kExitOk;
}

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("-o,--out", c.out_dir, "Output directory")->capture_default_str();
    sub->add_option("--config", c.overrides, "Setting override key=value (repeatable)");
}

}  // namespace

std::vector<int> parse_splits(const std::string& text) {
    auto number = [&](std::string_view s) {
        const auto v = csv::parse_int(s);
        if (!v) throw std::invalid_argument("bad split list '" + text + "'");
        return static_cast<int>(*v);
    };
    std::vector<int> out;
    if (const auto dots = text.find(".."); dots != std::string::npos && text.find(',') == std::string::npos) {
        const int lo = number(std::string_view(text).substr(0, dots));
        const int hi = number(std::string_view(text).substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("empty split range '" + text + "'");
        for (int u = lo; u <= hi; ++u) out.push_back(u);
        return out;
    }
    const auto f = csv::split(text);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] != "...") {
            out.push_back(number(f[i]));
            continue;
        }
        // x, y, ..., z continues the step y - x up to z.
        if (i != 2 || i + 1 >= f.size() || out.size() != 2)
            throw std::invalid_argument("'...' must follow two values, as in 20,25,...,45");
        const int step = out[1] - out[0];
        const int last = number(f[i + 1]);
        if (step <= 0 || last < out[1] || (last - out[1]) % step != 0)
            throw std::invalid_argument("'" + text + "' is not an increasing progression");
        for (int u = out[1] + step; u <= last; u += step) out.push_back(u);
        if (i + 2 != f.size()) throw std::invalid_argument("nothing may follow the last value after '...'");
        return out;
    }
    if (out.empty()) throw std::invalid_argument("empty split list");
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bayesian resource tables for limited-overs cricket", "restab"};
    app.set_version_flag("--version", version_text());
    app.require_subcommand(1);

    Common common;

    IngestArgs ingest;
    auto* s_ingest = app.add_subcommand("ingest", "Summarize a ball-by-ball corpus into the 50x10 grid");
    s_ingest->add_option("corpus", ingest.corpus, "Corpus CSV")->required();
    add_common(s_ingest, common);

    FitArgs fit;
    auto* s_fit = app.add_subcommand("fit", "Run the MCMC fit on a grid and derive the Bayesian table");
    s_fit->add_option("grid", fit.grid, "Grid CSV")->required();
    s_fit->add_option("--burn-in", fit.mcmc.burn_in)->capture_default_str();
    s_fit->add_option("--keep", fit.mcmc.keep)->capture_default_str();
    s_fit->add_option("--thin", fit.mcmc.thin)->capture_default_str();
    s_fit->add_option("--seed", fit.mcmc.seed)->capture_default_str();
    s_fit->add_option("--chains", fit.mcmc.n_chains)->capture_default_str();
    s_fit->add_option("--prior", fit.parametrization, "ab or ac")->capture_default_str();
    add_common(s_fit, common);

    TableArgs table;
    auto* s_table = app.add_subcommand("table", "Write a resource table and its monotonicity report");
    s_table->add_option("--source", table.source, "bayes, empirical or dl2013")->required();
    s_table->add_option("--theta", table.theta, "theta_hat.csv (bayes)");
    s_table->add_option("--grid", table.grid, "grid.csv (empirical)");
    add_common(s_table, common);

    TargetArgs tgt;
    auto* s_target = app.add_subcommand("target", "Reset team 2's target after an interruption");
    s_target->add_option("--score", tgt.score, "Team 1 score")->required();
    s_target->add_option("--p1", tgt.p1, "Team 1 resources, percent");
    s_target->add_option("--p2", tgt.p2, "Team 2 resources, percent");
    s_target->add_option("--g50", tgt.g50, "Mean full-innings score, needed when P2 > P1");
    s_target->add_option("--table", tgt.table, "dl2013 or a table CSV");
    s_target->add_option("--state1", tgt.state1, "Team 1 state u,w")->capture_default_str();
    s_target->add_option("--state2", tgt.state2, "Team 2 state u,w");
    auto* target_out = s_target->add_option("-o,--out", common.out_dir, "Write a manifest to this directory");
    s_target->add_option("--config", common.overrides, "Setting override key=value (repeatable)");

    EvaluateArgs ev;
    auto* s_eval = app.add_subcommand("evaluate", "Compare a table with the reference by split-point RSS");
    s_eval->add_option("corpus", ev.corpus, "Corpus CSV")->required();
    s_eval->add_option("--table", ev.table, "Fitted table CSV");
    s_eval->add_option("--reference", ev.reference, "dl2013 or a table CSV")->capture_default_str();
    s_eval->add_option("--posterior", ev.posterior, "posterior.csv for the ratio density");
    s_eval->add_option("--splits", ev.splits, "1..30, 20,25,...,45 or a comma list");
    s_eval->add_option("--predict-at", ev.predict_at, "Split for the prediction export")->capture_default_str();
    add_common(s_eval, common);

    SynthArgs syn;
    auto* s_synth = app.add_subcommand("synth", "Generate a synthetic corpus from a known theta");
    s_synth->add_option("--matches", syn.config.n_matches)->capture_default_str();
    s_synth->add_option("--seed", syn.config.seed)->capture_default_str();
    s_synth->add_option("--noise-sd", syn.config.noise_sd)->capture_default_str();
    s_synth->add_option("--hazard-base", syn.config.hazard.base)->capture_default_str();
    s_synth->add_option("--hazard-slope", syn.config.hazard.slope)->capture_default_str();
    s_synth->add_option("--theta", syn.theta, "theta CSV replacing the built-in theta*");
    add_common(s_synth, common);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back(args.empty() ? "restab" : args.front().c_str());
    for (std::size_t i = 1; i < args.size(); ++i) argv.push_back(args[i].c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*s_ingest) return cmd_ingest(ingest, common, out);
        if (*s_fit) return cmd_fit(fit, common, out);
        if (*s_table) return cmd_table(table, common, out);
        if (*s_target) {
            tgt.write_manifest = target_out->count() > 0;
            return cmd_target(tgt, common, out);
        }
        if (*s_eval) return cmd_evaluate(ev, common, out);
        if (*s_synth) return cmd_synth(syn, common, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const fs::filesystem_error& e) {
        err << "error (io): " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitUsage;
}

}  // namespace restab::cli
