#include "brnet/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "brnet/checkpoint.hpp"

namespace brnet {

namespace {

std::string default_data_dir() {
    const char* env = std::getenv("BRNET_DATA_DIR");
    return env != nullptr ? std::string(env) : std::string("data");
}

std::string join_sizes(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(static_cast<std::size_t>(std::stoull(tok)));
        } catch (const std::exception&) {
            throw std::invalid_argument("config: bad layer width '" + tok + "' in arch");
        }
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_f64(const std::string& key, const std::string& val) {
    try {
        std::size_t used = 0;
        const double v = std::stod(val, &used);
        if (used != val.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for " + key + ": '" + val + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& val) {
    try {
        if (!val.empty() && val[0] == '-') throw std::invalid_argument("negative");
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(val, &used);
        if (used != val.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad count value for " + key + ": '" + val + "'");
    }
}

/// Resolve an MNIST file under the data dir, accepting a .gz variant.
std::string resolve_idx(const std::string& dir, const std::string& name) {
    namespace fs = std::filesystem;
    const std::string plain = dir + "/" + name;
    if (fs::exists(plain)) return plain;
    const std::string gz = plain + ".gz";
    if (fs::exists(gz)) return gz;
    throw std::runtime_error("dataset file not found: " + plain + " (also tried .gz)");
}

void truncate_dataset(LabeledDataset& ds, std::size_t n) {
    if (n == 0 || n >= ds.size()) return;
    ds.images.resize(n);
    ds.labels.resize(n);
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ExperimentConfig::ExperimentConfig() : hidden{529, 529}, data_dir(default_data_dir()) {}

void ExperimentConfig::validate() const {
    if (hidden.empty()) throw std::invalid_argument("config: at least one hidden layer required");
    if (data != "mnist" && data != "blobs") {
        throw std::invalid_argument("config: data must be 'mnist' or 'blobs'");
    }
    if (epochs == 0) throw std::invalid_argument("config: epochs must be positive");
    if (!(max_norm >= 0.0)) throw std::invalid_argument("config: max_norm must be >= 0");
    regularizer().validate();
    OptimizerConfig opt{alpha, gamma, eta, epochs, seed};
    opt.validate();
}

RegularizerConfig ExperimentConfig::regularizer() const {
    return RegularizerConfig{reg_mode_from_string(mode), beta, tau, epsilon};
}

std::string ExperimentConfig::serialize() const {
    std::ostringstream out;
    out << "arch = " << join_sizes(hidden) << '\n';
    out << "mode = " << mode << '\n';
    out << "beta = " << format_double(beta) << '\n';
    out << "tau = " << format_double(tau) << '\n';
    out << "epsilon = " << format_double(epsilon) << '\n';
    out << "alpha = " << format_double(alpha) << '\n';
    out << "gamma = " << format_double(gamma) << '\n';
    out << "eta = " << format_double(eta) << '\n';
    out << "epochs = " << epochs << '\n';
    out << "seed = " << seed << '\n';
    out << "data = " << data << '\n';
    out << "data_dir = " << data_dir << '\n';
    out << "subset = " << subset << '\n';
    out << "max_norm = " << format_double(max_norm) << '\n';
    out << "blob_classes = " << blob_classes << '\n';
    out << "blob_per_class = " << blob_per_class << '\n';
    out << "blob_test_per_class = " << blob_test_per_class << '\n';
    out << "blob_dim = " << blob_dim << '\n';
    out << "blob_separation = " << format_double(blob_separation) << '\n';
    out << "blob_seed = " << blob_seed << '\n';
    out << "csv = " << csv << '\n';
    out << "checkpoint = " << checkpoint << '\n';
    return out.str();
}

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config: expected 'key = value', got: " + t);
        }
        const std::string key = trim(t.substr(0, eq));
        const std::string val = trim(t.substr(eq + 1));
        if (key == "arch") cfg.hidden = parse_sizes(val);
        else if (key == "mode") cfg.mode = val;
        else if (key == "beta") cfg.beta = parse_f64(key, val);
        else if (key == "tau") cfg.tau = parse_f64(key, val);
        else if (key == "epsilon") cfg.epsilon = parse_f64(key, val);
        else if (key == "alpha") cfg.alpha = parse_f64(key, val);
        else if (key == "gamma") cfg.gamma = parse_f64(key, val);
        else if (key == "eta") cfg.eta = parse_f64(key, val);
        else if (key == "epochs") cfg.epochs = parse_u64(key, val);
        else if (key == "seed") cfg.seed = parse_u64(key, val);
        else if (key == "data") cfg.data = val;
        else if (key == "data_dir") cfg.data_dir = val;
        else if (key == "subset") cfg.subset = parse_u64(key, val);
        else if (key == "max_norm") cfg.max_norm = parse_f64(key, val);
        else if (key == "blob_classes") cfg.blob_classes = parse_u64(key, val);
        else if (key == "blob_per_class") cfg.blob_per_class = parse_u64(key, val);
        else if (key == "blob_test_per_class") cfg.blob_test_per_class = parse_u64(key, val);
        else if (key == "blob_dim") cfg.blob_dim = parse_u64(key, val);
        else if (key == "blob_separation") cfg.blob_separation = parse_f64(key, val);
        else if (key == "blob_seed") cfg.blob_seed = parse_u64(key, val);
        else if (key == "csv") cfg.csv = val;
        else if (key == "checkpoint") cfg.checkpoint = val;
        else throw std::invalid_argument("config: unknown key " + key);
    }
    return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

ExperimentConfig ExperimentConfig::preset(const std::string& name) {
    ExperimentConfig cfg;
    if (name == "smoke") {
        cfg.hidden = {16, 16};
        cfg.data = "blobs";
        cfg.epochs = 5;
        cfg.alpha = 0.05;
        cfg.csv = "smoke.csv";
        cfg.checkpoint = "smoke.ckpt.json";
    } else if (name == "pilot") {
        cfg.hidden = {529, 529};
        cfg.data = "mnist";
        cfg.epochs = 50;
        cfg.csv = "pilot.csv";
        cfg.checkpoint = "pilot.ckpt.json";
    } else if (name == "full") {
        cfg.hidden = {529, 529};
        cfg.data = "mnist";
        cfg.epochs = 70;
        cfg.csv = "full.csv";
        cfg.checkpoint = "full.ckpt.json";
    } else {
        throw std::invalid_argument("unknown preset: " + name + " (smoke|pilot|full)");
    }
    return cfg;
}

DataSplit load_split(const ExperimentConfig& cfg) {
    DataSplit split;
    if (cfg.data == "mnist") {
        split.train = load_mnist_split(resolve_idx(cfg.data_dir, "train-images-idx3-ubyte"),
                                       resolve_idx(cfg.data_dir, "train-labels-idx1-ubyte"),
                                       "mnist-train");
        split.test = load_mnist_split(resolve_idx(cfg.data_dir, "t10k-images-idx3-ubyte"),
                                      resolve_idx(cfg.data_dir, "t10k-labels-idx1-ubyte"),
                                      "mnist-test");
    } else {
        const std::size_t per = cfg.blob_per_class + cfg.blob_test_per_class;
        LabeledDataset all = synth_blobs(cfg.blob_classes, per, cfg.blob_dim,
                                         cfg.blob_separation, cfg.blob_seed);
        split.train.class_count = split.test.class_count = cfg.blob_classes;
        split.train.name = "blobs-train";
        split.test.name = "blobs-test";
        for (std::size_t c = 0; c < cfg.blob_classes; ++c) {
            for (std::size_t k = 0; k < per; ++k) {
                const std::size_t i = c * per + k;
                LabeledDataset& dst = (k < cfg.blob_per_class) ? split.train : split.test;
                dst.images.push_back(all.images[i]);
                dst.labels.push_back(all.labels[i]);
            }
        }
    }
    truncate_dataset(split.train, cfg.subset);
    split.train.validate();
    split.test.validate();
    return split;
}

TrainOutcome run_train(const ExperimentConfig& cfg) {
    cfg.validate();
    DataSplit split = load_split(cfg);
    const std::size_t classes = split.train.class_count;

    std::vector<std::size_t> arch;
    arch.push_back(split.train.images.front().size());
    arch.insert(arch.end(), cfg.hidden.begin(), cfg.hidden.end());
    arch.push_back(classes);

    NetworkParams params = init_weights(arch, cfg.seed);
    Velocity velocity = NetworkParams::zeros(arch);
    MeanBank means(arch, cfg.tau);
    RegularizerConfig reg = cfg.regularizer();
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);

    std::ofstream csv(cfg.csv);
    if (!csv) throw std::runtime_error("cannot write csv " + cfg.csv);
    csv << "epoch,mode,beta,train_utility,test_utility,train_error,test_error,"
           "global_mi,mean_output_entropy,alpha\n";
    csv.flush();

    TrainOutcome outcome;
    const std::optional<double> cap =
        cfg.max_norm > 0.0 ? std::optional<double>(cfg.max_norm) : std::nullopt;
    double alpha = cfg.alpha;
    for (std::size_t epoch = 1; epoch <= cfg.epochs; ++epoch) {
        try {
            train_epoch(params, velocity, means, split.train, reg, alpha, cfg.gamma, rng, cap);
        } catch (const TrainingDivergence& e) {
            outcome.status = RunStatus::Diverged;
            outcome.message = e.what();
            return outcome;
        }
        const EvalMetrics train_m = evaluate(params, split.train, cfg.epsilon);
        const EvalMetrics test_m = evaluate(params, split.test, cfg.epsilon);
        csv << epoch << ',' << cfg.mode << ',' << format_double(reg.effective_beta()) << ','
            << format_double(train_m.utility) << ',' << format_double(test_m.utility) << ','
            << format_double(train_m.error) << ',' << format_double(test_m.error) << ','
            << format_double(test_m.global_mi) << ',' << format_double(test_m.mean_entropy)
            << ',' << format_double(alpha) << '\n';
        csv.flush();
        outcome.final_train = train_m;
        outcome.final_test = test_m;
        outcome.epochs_completed = epoch;
        alpha = lr_decay(alpha, epoch, cfg.eta);
    }

    Checkpoint ckpt;
    ckpt.params = std::move(params);
    ckpt.velocity = std::move(velocity);
    ckpt.mean_hidden = means.hidden();
    ckpt.mean_output = means.output();
    ckpt.means_warmed = means.warmed();
    ckpt.tau = cfg.tau;
    ckpt.epoch = cfg.epochs;
    std::ostringstream rng_state;
    rng_state << rng;
    ckpt.rng_state = rng_state.str();
    ckpt.mode = cfg.mode;
    ckpt.beta = reg.effective_beta();
    ckpt.alpha_current = alpha;
    save_checkpoint(cfg.checkpoint, ckpt);
    return outcome;
}

EvalMetrics run_eval(const std::string& checkpoint_path, const LabeledDataset& data, double eps) {
    const Checkpoint ckpt = load_checkpoint(checkpoint_path);
    return evaluate(ckpt.params, data, eps);
}

std::string with_beta_suffix(const std::string& base_path, double beta) {
    const auto dot = base_path.rfind('.');
    std::ostringstream tag;
    tag << "_beta" << beta;
    if (dot == std::string::npos) return base_path + tag.str();
    return base_path.substr(0, dot) + tag.str() + base_path.substr(dot);
}

std::vector<SweepRow> run_sweep_beta(const ExperimentConfig& cfg, const std::vector<double>& grid,
                                     const std::string& summary_csv) {
    if (grid.empty()) throw std::invalid_argument("sweep: empty beta grid");
    std::ofstream out(summary_csv);
    if (!out) throw std::runtime_error("cannot write csv " + summary_csv);
    out << "beta,split,utility,error\n";
    out.flush();

    std::vector<SweepRow> rows;
    for (double beta : grid) {
        if (!(beta >= 0.0) || beta >= 1.0) {
            throw std::invalid_argument("sweep: beta grid entries must lie in [0, 1)");
        }
        ExperimentConfig run_cfg = cfg;
        if (beta == 0.0) {
            run_cfg.mode = "umax";
            run_cfg.beta = 0.0;
        } else {
            if (cfg.mode == "umax") {
                throw std::invalid_argument(
                    "sweep: nonzero beta requires lrdi or grdi mode in the base config");
            }
            run_cfg.beta = beta;
        }
        run_cfg.csv = with_beta_suffix(cfg.csv, beta);
        run_cfg.checkpoint = with_beta_suffix(cfg.checkpoint, beta);

        double train_u = std::nan(""), train_e = std::nan("");
        double test_u = std::nan(""), test_e = std::nan("");
        try {
            const TrainOutcome res = run_train(run_cfg);
            if (res.status == RunStatus::Ok) {
                train_u = res.final_train.utility;
                train_e = res.final_train.error;
                test_u = res.final_test.utility;
                test_e = res.final_test.error;
            } else {
                std::fprintf(stderr, "sweep: run at beta=%g diverged: %s\n", beta,
                             res.message.c_str());
            }
        } catch (const std::exception& e) {
            std::fprintf(stderr, "sweep: run at beta=%g failed: %s\n", beta, e.what());
        }
        for (const auto& [split, u, err] :
             {std::tuple{"train", train_u, train_e}, std::tuple{"test", test_u, test_e}}) {
            out << format_double(beta) << ',' << split << ',' << format_double(u) << ','
                << format_double(err) << '\n';
            rows.push_back(SweepRow{beta, split, u, err});
        }
        out.flush();
    }
    return rows;
}

SolverReport run_ba_solve(const std::string& utility_path, const std::vector<double>& px_or_empty,
                          double beta, double tol, std::size_t max_iter,
                          const std::string& json_out) {
    std::ifstream in(utility_path);
    if (!in) throw std::runtime_error("cannot open utility file " + utility_path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream ls(t);
        std::vector<double> row;
        double v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof()) throw std::runtime_error("utility file has a non-numeric token: " + t);
        rows.push_back(std::move(row));
    }
    const UtilityTable utility = UtilityTable::from_rows(rows);
    const Distribution px = px_or_empty.empty() ? Distribution::uniform(utility.contexts())
                                                : Distribution(px_or_empty);
    const SolverReport report =
        blahut_arimoto(px, utility, TradeoffBeta(beta), Distribution::uniform(utility.actions()),
                       tol, max_iter);

    nlohmann::json j;
    j["beta"] = beta;
    j["converged"] = report.converged;
    j["iterations"] = report.iterations;
    j["objective_trace"] = report.objective_trace;
    j["marginal"] = report.marginal.probs();
    nlohmann::json policy = nlohmann::json::array();
    for (std::size_t x = 0; x < report.policy.contexts(); ++x) {
        policy.push_back(report.policy.row(x).probs());
    }
    j["policy"] = policy;
    std::ofstream out(json_out);
    if (!out) throw std::runtime_error("cannot write report " + json_out);
    out << j.dump(2) << '\n';
    return report;
}

}  // namespace brnet
