#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "brnet/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct ConfigFlags {
    std::string config_path;
    std::string preset;
    std::vector<std::size_t> hidden;
    std::string mode;
    double beta = -1.0;
    double tau = -1.0;
    double alpha = -1.0;
    double gamma = -1.0;
    double eta = -1.0;
    long long epochs = -1;
    long long seed = -1;
    std::string data;
    std::string data_dir;
    long long subset = -1;
    double max_norm = -1.0;
    std::string csv;
    std::string checkpoint;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& f) {
    cmd->add_option("--config", f.config_path, "flat key=value config file");
    cmd->add_option("--preset", f.preset, "named preset: smoke, pilot or full");
    cmd->add_option("--arch", f.hidden, "hidden layer widths")->delimiter(',');
    cmd->add_option("--mode", f.mode, "umax, lrdi or grdi");
    cmd->add_option("--beta", f.beta, "trade-off beta in [0,1)")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--tau", f.tau, "running-mean time constant")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--alpha", f.alpha, "learning rate")->check(CLI::NonNegativeNumber);
    cmd->add_option("--gamma", f.gamma, "momentum")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--eta", f.eta, "learning rate decay")->check(CLI::NonNegativeNumber);
    cmd->add_option("--epochs", f.epochs, "training epochs")->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", f.seed, "RNG seed")->check(CLI::NonNegativeNumber);
    cmd->add_option("--data", f.data, "dataset kind: mnist or blobs");
    cmd->add_option("--data-dir", f.data_dir, "dataset root (default $BRNET_DATA_DIR or ./data)");
    cmd->add_option("--subset", f.subset, "truncate the training set (0 = full)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--max-norm", f.max_norm, "per-neuron weight norm cap (0 = off)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--csv", f.csv, "metrics CSV output path");
    cmd->add_option("--checkpoint", f.checkpoint, "checkpoint output path");
}

brnet::ExperimentConfig build_config(const ConfigFlags& f) {
    brnet::ExperimentConfig cfg;
    if (!f.preset.empty()) cfg = brnet::ExperimentConfig::preset(f.preset);
    if (!f.config_path.empty()) cfg = brnet::ExperimentConfig::load(f.config_path);
    if (!f.hidden.empty()) cfg.hidden = f.hidden;
    if (!f.mode.empty()) cfg.mode = f.mode;
    if (f.beta >= 0.0) cfg.beta = f.beta;
    if (f.tau >= 0.0) cfg.tau = f.tau;
    if (f.alpha >= 0.0) cfg.alpha = f.alpha;
    if (f.gamma >= 0.0) cfg.gamma = f.gamma;
    if (f.eta >= 0.0) cfg.eta = f.eta;
    if (f.epochs >= 0) cfg.epochs = static_cast<std::size_t>(f.epochs);
    if (f.seed >= 0) cfg.seed = static_cast<std::uint64_t>(f.seed);
    if (!f.data.empty()) cfg.data = f.data;
    if (!f.data_dir.empty()) cfg.data_dir = f.data_dir;
    if (f.subset >= 0) cfg.subset = static_cast<std::size_t>(f.subset);
    if (f.max_norm >= 0.0) cfg.max_norm = f.max_norm;
    if (!f.csv.empty()) cfg.csv = f.csv;
    if (!f.checkpoint.empty()) cfg.checkpoint = f.checkpoint;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounded-rational decision-making and rate distortion regularized networks"};
    app.require_subcommand(1);

    ConfigFlags train_flags;
    CLI::App* train = app.add_subcommand("train", "train a network and emit CSV + checkpoint");
    add_config_flags(train, train_flags);

    std::string eval_ckpt;
    ConfigFlags eval_flags;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a checkpoint on a dataset split");
    eval->add_option("--from", eval_ckpt, "checkpoint path")->required();
    std::string eval_split = "test";
    eval->add_option("--split", eval_split, "train or test")
        ->check(CLI::IsMember({"train", "test"}));
    add_config_flags(eval, eval_flags);

    std::string ba_utility;
    std::vector<double> ba_px;
    double ba_beta = 0.5;
    double ba_tol = 1e-10;
    std::size_t ba_max_iter = 10000;
    std::string ba_out = "ba_report.json";
    CLI::App* ba = app.add_subcommand("ba-solve", "solve a discrete rate distortion problem");
    ba->add_option("--utility", ba_utility, "dense utility matrix file")->required();
    ba->add_option("--px", ba_px, "context distribution (default uniform)")->delimiter(',');
    ba->add_option("--beta", ba_beta, "trade-off beta in (0,1)");
    ba->add_option("--tol", ba_tol, "objective-change stopping tolerance");
    ba->add_option("--max-iter", ba_max_iter, "iteration cap");
    ba->add_option("--out", ba_out, "JSON report path");

    ConfigFlags sweep_flags;
    std::vector<double> sweep_grid;
    std::string sweep_out = "sweep.csv";
    CLI::App* sweep = app.add_subcommand("sweep-beta", "train once per beta on a fixed seed");
    sweep->add_option("--grid", sweep_grid, "beta grid; 0 means umax")
        ->delimiter(',')
        ->required();
    sweep->add_option("--out", sweep_out, "long-form summary CSV path");
    add_config_flags(sweep, sweep_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (train->parsed()) {
            const brnet::ExperimentConfig cfg = build_config(train_flags);
            const brnet::TrainOutcome res = brnet::run_train(cfg);
            if (res.status == brnet::RunStatus::Diverged) {
                std::fprintf(stderr, "%s\n", res.message.c_str());
                return kExitNumerical;
            }
            std::printf("trained %zu epochs; test_error=%s test_utility=%s\n",
                        res.epochs_completed, brnet::format_double(res.final_test.error).c_str(),
                        brnet::format_double(res.final_test.utility).c_str());
        } else if (eval->parsed()) {
            const brnet::ExperimentConfig cfg = build_config(eval_flags);
            const brnet::DataSplit split = brnet::load_split(cfg);
            const brnet::LabeledDataset& ds = eval_split == "train" ? split.train : split.test;
            const brnet::EvalMetrics m = brnet::run_eval(eval_ckpt, ds, cfg.epsilon);
            std::printf("utility=%s error=%s global_mi=%s mean_output_entropy=%s\n",
                        brnet::format_double(m.utility).c_str(),
                        brnet::format_double(m.error).c_str(),
                        brnet::format_double(m.global_mi).c_str(),
                        brnet::format_double(m.mean_entropy).c_str());
        } else if (ba->parsed()) {
            const brnet::SolverReport report =
                brnet::run_ba_solve(ba_utility, ba_px, ba_beta, ba_tol, ba_max_iter, ba_out);
            std::printf("%s after %zu iterations; objective=%s; report written to %s\n",
                        report.converged ? "converged" : "stopped", report.iterations,
                        brnet::format_double(report.objective_trace.back()).c_str(),
                        ba_out.c_str());
        } else if (sweep->parsed()) {
            const brnet::ExperimentConfig cfg = build_config(sweep_flags);
            brnet::run_sweep_beta(cfg, sweep_grid, sweep_out);
            std::printf("sweep summary written to %s\n", sweep_out.c_str());
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumerical;
    }
    return kExitOk;
}
