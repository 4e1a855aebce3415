#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brnet/bounded_rational.hpp"
#include "brnet/dataset.hpp"
#include "brnet/trainer.hpp"

namespace brnet {

/// Flat experiment description. Serializes to and from one-key-per-line text
/// (`key = value`) with exact round-trip; doubles are printed with 17
/// significant digits.
struct ExperimentConfig {
    std::vector<std::size_t> hidden;  // hidden layer widths
    std::string mode = "umax";
    double beta = 0.0;
    double tau = 1000.0;
    double epsilon = kRateEpsilon;
    double alpha = 0.01;
    double gamma = 0.9;
    double eta = 0.002;
    std::size_t epochs = 70;
    std::uint64_t seed = 1;
    std::string data = "mnist";  // "mnist" or "blobs"
    std::string data_dir;        // defaults to $BRNET_DATA_DIR or "data"
    std::size_t subset = 0;      // 0 = full training set
    double max_norm = 0.0;       // 0 = projection off
    std::size_t blob_classes = 3;
    std::size_t blob_per_class = 200;
    std::size_t blob_test_per_class = 100;
    std::size_t blob_dim = 2;
    double blob_separation = 0.5;
    std::uint64_t blob_seed = 11;
    std::string csv = "run.csv";
    std::string checkpoint = "run.ckpt.json";

    ExperimentConfig();

    void validate() const;
    RegularizerConfig regularizer() const;
    std::string serialize() const;
    static ExperimentConfig parse(const std::string& text);
    static ExperimentConfig load(const std::string& path);
    static ExperimentConfig preset(const std::string& name);  // smoke | pilot | full
    bool operator==(const ExperimentConfig&) const = default;
};

/// Train/test pair resolved from the config (MNIST files or a blob split
/// carved from one generated set so both halves share centers).
struct DataSplit {
    LabeledDataset train;
    LabeledDataset test;
};

DataSplit load_split(const ExperimentConfig& cfg);

enum class RunStatus { Ok, Diverged };

struct TrainOutcome {
    RunStatus status = RunStatus::Ok;
    EvalMetrics final_train;
    EvalMetrics final_test;
    std::size_t epochs_completed = 0;
    std::string message;
};

/// Full training run: per-epoch CSV rows (flushed as they are written, so a
/// diverged run retains its partial CSV) and a final checkpoint on success.
TrainOutcome run_train(const ExperimentConfig& cfg);

/// Evaluate a checkpoint on a dataset; metrics match the CSV columns of the
/// epoch that produced the checkpoint.
EvalMetrics run_eval(const std::string& checkpoint_path, const LabeledDataset& data, double eps);

struct SweepRow {
    double beta;
    std::string split;
    double utility;
    double error;
};

/// One training run per grid entry with a shared seed; beta == 0 runs in
/// umax mode. Emits a long-form summary CSV (beta, split, utility, error);
/// per-run CSVs and checkpoints get a `_beta<value>` suffix. Failed runs are
/// recorded as NaN rows and the sweep continues.
std::vector<SweepRow> run_sweep_beta(const ExperimentConfig& cfg,
                                     const std::vector<double>& grid,
                                     const std::string& summary_csv);

/// Parse a whitespace-separated dense utility matrix, solve, and write the
/// report as JSON (policy row-major, marginal, objective trace).
SolverReport run_ba_solve(const std::string& utility_path, const std::vector<double>& px_or_empty,
                          double beta, double tol, std::size_t max_iter,
                          const std::string& json_out);

/// 17-significant-digit formatting shared by the CSV writer and `eval`
/// output, so their numbers compare exactly.
std::string format_double(double v);

/// "runs/out.csv" + beta 0.2 -> "runs/out_beta0.2.csv".
std::string with_beta_suffix(const std::string& base_path, double beta);

}  // namespace brnet
