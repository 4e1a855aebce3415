// Acceptance suite: each criterion prints one [PASS]/[FAIL] line; the
// process exits nonzero if any executed criterion fails.
//
// The MNIST-backed criteria (5 and parts of 7) look for the official IDX
// files under --data-dir / $BRNET_DATA_DIR / ./data; scripts/fetch_mnist.sh
// downloads them.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brnet/bounded_rational.hpp"
#include "brnet/checkpoint.hpp"
#include "brnet/experiment.hpp"

using namespace brnet;
namespace fs = std::filesystem;

namespace {

constexpr double kEps = kRateEpsilon;

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::vector<double> flatten(const NetworkParams& p) {
    std::vector<double> out;
    for (const Layer& l : p.layers) {
        out.insert(out.end(), l.weights.begin(), l.weights.end());
        out.insert(out.end(), l.bias.begin(), l.bias.end());
    }
    return out;
}

std::vector<double*> parameter_pointers(NetworkParams& p) {
    std::vector<double*> ptrs;
    for (Layer& l : p.layers) {
        for (double& w : l.weights) ptrs.push_back(&w);
        for (double& b : l.bias) ptrs.push_back(&b);
    }
    return ptrs;
}

double rel_error(double a, double b, double floor = 1e-6) {
    const double scale = std::max({std::abs(a), std::abs(b), floor});
    return std::abs(a - b) / scale;
}

// ---------------------------------------------------------------- criterion 1

struct RdInstance {
    Distribution px;
    UtilityTable utility;
};

/// Random 4x4 instances with unique, well-separated maximizers; near-ties
/// make the limit statements meaningless, so the fixture rejects them.
RdInstance draw_instance(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uu(0.0, 1.0);
    std::uniform_real_distribution<double> pu(0.1, 1.0);
    while (true) {
        std::vector<double> values(16);
        for (double& v : values) v = uu(rng);
        std::vector<double> px(4);
        double sum = 0.0;
        for (double& v : px) {
            v = pu(rng);
            sum += v;
        }
        for (double& v : px) v /= sum;

        bool rows_ok = true;
        for (int x = 0; x < 4 && rows_ok; ++x) {
            std::vector<double> row(values.begin() + 4 * x, values.begin() + 4 * x + 4);
            std::sort(row.begin(), row.end());
            rows_ok = row[3] - row[2] >= 0.05;
        }
        if (!rows_ok) continue;
        std::vector<double> avg(4, 0.0);
        for (int x = 0; x < 4; ++x) {
            for (int y = 0; y < 4; ++y) avg[y] += px[x] * values[4 * x + y];
        }
        std::vector<double> sorted_avg = avg;
        std::sort(sorted_avg.begin(), sorted_avg.end());
        if (sorted_avg[3] - sorted_avg[2] < 0.15) continue;
        return RdInstance{Distribution(px), UtilityTable(4, 4, values)};
    }
}

void criterion_1() {
    const double start = now_seconds();
    std::mt19937_64 rng(20240817);
    bool monotone = true;
    double worst_mass = 1.0;
    double worst_info = 0.0;
    double worst_row = 1.0;
    for (int k = 0; k < 20; ++k) {
        const RdInstance inst = draw_instance(rng);

        const SolverReport hi = blahut_arimoto(inst.px, inst.utility, TradeoffBeta(0.999),
                                               Distribution::uniform(4), 1e-12, 200000);
        for (std::size_t i = 1; i < hi.objective_trace.size(); ++i) {
            monotone = monotone && hi.objective_trace[i] >= hi.objective_trace[i - 1] - 1e-10;
        }
        std::size_t ystar = 0;
        double best = -1.0;
        for (std::size_t y = 0; y < 4; ++y) {
            double avg = 0.0;
            for (std::size_t x = 0; x < 4; ++x) avg += inst.px[x] * inst.utility.at(x, y);
            if (avg > best) {
                best = avg;
                ystar = y;
            }
        }
        worst_mass = std::min(worst_mass, hi.marginal[ystar]);
        worst_info = std::max(worst_info, mutual_information(inst.px, hi.policy));

        const SolverReport lo = blahut_arimoto(inst.px, inst.utility, TradeoffBeta(0.001),
                                               Distribution::uniform(4), 1e-12, 10000);
        for (std::size_t i = 1; i < lo.objective_trace.size(); ++i) {
            monotone = monotone && lo.objective_trace[i] >= lo.objective_trace[i - 1] - 1e-10;
        }
        for (std::size_t x = 0; x < 4; ++x) {
            std::size_t yx = 0;
            for (std::size_t y = 1; y < 4; ++y) {
                if (inst.utility.at(x, y) > inst.utility.at(x, yx)) yx = y;
            }
            worst_row = std::min(worst_row, lo.policy.row(x)[yx]);
        }
    }
    const double elapsed = now_seconds() - start;
    const bool pass = monotone && worst_mass >= 0.99 && worst_info < 1e-3 &&
                      worst_row >= 1.0 - 1e-6 && elapsed < 1.0;
    char detail[256];
    std::snprintf(detail, sizeof(detail),
                  "monotone=%d marginal_mass>=%.4f I<=%.2e row_mass>=%.9f time=%.2fs", monotone,
                  worst_mass, worst_info, worst_row, elapsed);
    report(1, pass, "Blahut-Arimoto trace monotone and limit behavior on 20 instances", detail);
}

// ---------------------------------------------------------------- criterion 2

struct SmallProblem {
    NetworkParams params;
    std::vector<std::vector<double>> inputs;
    std::vector<std::size_t> labels;
};

SmallProblem make_small_problem() {
    SmallProblem prob;
    prob.params = init_weights({4, 5, 3}, 2024);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    std::uniform_int_distribution<int> lab(0, 2);
    for (int k = 0; k < 6; ++k) {
        std::vector<double> x(4);
        for (double& v : x) v = u(rng);
        prob.inputs.push_back(x);
        prob.labels.push_back(static_cast<std::size_t>(lab(rng)));
    }
    return prob;
}

MeanBank empirical_means(const NetworkParams& params,
                         const std::vector<std::vector<double>>& inputs) {
    MeanBank bank(params.architecture(), 1000.0);
    std::vector<std::vector<double>> hidden;
    for (std::size_t l = 0; l + 1 < params.layers.size(); ++l) {
        hidden.emplace_back(params.layers[l].out, 0.0);
    }
    std::vector<double> output(params.output_dim(), 0.0);
    for (const auto& x : inputs) {
        const ForwardTrace t = forward(params, x);
        for (std::size_t l = 0; l < hidden.size(); ++l) {
            for (std::size_t i = 0; i < hidden[l].size(); ++i) hidden[l][i] += t.rates[l + 1][i];
        }
        for (std::size_t j = 0; j < output.size(); ++j) output[j] += t.output()[j];
    }
    const double n = static_cast<double>(inputs.size());
    for (auto& layer : hidden) {
        for (double& v : layer) v /= n;
    }
    for (double& v : output) v /= n;
    bank.set_state(std::move(hidden), std::move(output), true);
    return bank;
}

std::vector<double> fd_over_params(NetworkParams& params, const std::function<double()>& objective,
                                   double h) {
    std::vector<double*> ptrs = parameter_pointers(params);
    std::vector<double> grad(ptrs.size());
    for (std::size_t i = 0; i < ptrs.size(); ++i) {
        const double keep = *ptrs[i];
        *ptrs[i] = keep + h;
        const double hi = objective();
        *ptrs[i] = keep - h;
        const double lo = objective();
        *ptrs[i] = keep;
        grad[i] = (hi - lo) / (2.0 * h);
    }
    return grad;
}

void criterion_2() {
    const double start = now_seconds();
    SmallProblem prob = make_small_problem();
    const double beta = 0.3;
    const MeanBank bank = empirical_means(prob.params, prob.inputs);
    const double n = static_cast<double>(prob.inputs.size());

    // Grdi: analytic batch gradient against the full global objective.
    std::vector<double> grdi_analytic(flatten(prob.params).size(), 0.0);
    for (std::size_t k = 0; k < prob.inputs.size(); ++k) {
        const ForwardTrace t = forward(prob.params, prob.inputs[k]);
        const Gradients g =
            backprop(prob.params, t, grdi_output_delta(t, prob.labels[k], beta, bank, kEps));
        const std::vector<double> flat = flatten(g);
        for (std::size_t i = 0; i < flat.size(); ++i) grdi_analytic[i] += flat[i] / n;
    }
    auto grdi_objective = [&]() {
        std::vector<double> mean_f(3, 0.0);
        double util = 0.0;
        double f_log_f = 0.0;
        for (std::size_t k = 0; k < prob.inputs.size(); ++k) {
            const ForwardTrace t = forward(prob.params, prob.inputs[k]);
            util += utility_cross_entropy(t, prob.labels[k], kEps);
            for (std::size_t j = 0; j < 3; ++j) {
                mean_f[j] += t.output()[j];
                f_log_f += t.output()[j] * std::log(t.output()[j]);
            }
        }
        double info = f_log_f / n;
        for (std::size_t j = 0; j < 3; ++j) {
            mean_f[j] /= n;
            info -= mean_f[j] * std::log(mean_f[j]);
        }
        return (1.0 - beta) * util / n - beta * info;
    };
    const std::vector<double> grdi_fd = fd_over_params(prob.params, grdi_objective, 1e-5);
    double grdi_err = 0.0;
    for (std::size_t i = 0; i < grdi_fd.size(); ++i) {
        grdi_err = std::max(grdi_err, rel_error(grdi_analytic[i], grdi_fd[i]));
    }

    // Lrdi: the local information terms against the summed per-neuron rates
    // with every mean recomputed per perturbation.
    std::vector<double> lrdi_info(flatten(prob.params).size(), 0.0);
    for (std::size_t k = 0; k < prob.inputs.size(); ++k) {
        const ForwardTrace t = forward(prob.params, prob.inputs[k]);
        const Gradients full = lrdi_gradient(prob.params, t, prob.labels[k], beta, bank, kEps);
        const Gradients util =
            backprop(prob.params, t, utility_output_delta(t, prob.labels[k], kEps));
        const std::vector<double> fu = flatten(full);
        const std::vector<double> uu = flatten(util);
        for (std::size_t i = 0; i < fu.size(); ++i) {
            lrdi_info[i] += (fu[i] - (1.0 - beta) * uu[i]) / n;
        }
    }
    auto lrdi_objective = [&]() {
        const std::size_t nh = prob.params.layers[0].out;
        std::vector<std::vector<double>> phis(prob.inputs.size(), std::vector<double>(nh));
        for (std::size_t k = 0; k < prob.inputs.size(); ++k) {
            phis[k] = forward(prob.params, prob.inputs[k]).rates[1];
        }
        double total = 0.0;
        for (std::size_t i = 0; i < nh; ++i) {
            double mean = 0.0;
            for (std::size_t k = 0; k < phis.size(); ++k) mean += phis[k][i];
            mean /= n;
            const double log_mean = std::log(mean > kEps ? mean : kEps);
            for (std::size_t k = 0; k < phis.size(); ++k) {
                total += phis[k][i] * (std::log(phis[k][i] > kEps ? phis[k][i] : kEps) - log_mean) / n;
            }
        }
        return -beta * total;
    };
    const std::vector<double> lrdi_fd = fd_over_params(prob.params, lrdi_objective, 1e-5);
    double lrdi_err = 0.0;
    for (std::size_t i = 0; i < lrdi_fd.size(); ++i) {
        lrdi_err = std::max(lrdi_err, rel_error(lrdi_info[i], lrdi_fd[i]));
    }

    const double elapsed = now_seconds() - start;
    const bool pass = grdi_err < 1e-4 && lrdi_err < 1e-4 && elapsed < 10.0;
    char detail[160];
    std::snprintf(detail, sizeof(detail), "grdi_rel_err=%.3e lrdi_rel_err=%.3e time=%.2fs",
                  grdi_err, lrdi_err, elapsed);
    report(2, pass, "analytic gradients match finite differences on a 4-5-3 network", detail);
}

// ---------------------------------------------------------------- criterion 3

void criterion_3() {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    std::vector<std::vector<double>> raw(5, std::vector<double>(3));
    for (auto& v : raw) {
        for (double& x : v) x = u(rng);
    }
    const EnvironmentBatch batch(raw);
    const std::vector<double> w = {0.8, -0.5, 1.1};
    const Activation sig = Activation::sigmoid();

    std::vector<double> phis;
    double max_phi = 0.0;
    for (std::size_t i = 0; i < batch.size(); ++i) {
        double a = 0.0;
        for (std::size_t j = 0; j < w.size(); ++j) a += w[j] * batch.input(i)[j];
        phis.push_back(sig.eval(a));
        max_phi = std::max(max_phi, phis.back());
    }
    double phi_bar = 0.0;
    for (double p : phis) phi_bar += p;
    phi_bar /= static_cast<double>(phis.size());
    const double rate = deterministic_mi_rate(w, batch, phi_bar, sig);

    std::vector<double> errors;
    for (double scale : {1e-2, 1e-3, 1e-4}) {
        const double dt = scale / max_phi;
        double info = 0.0;
        for (double phi : phis) {
            const double p1 = phi * dt;
            const double q1 = phi_bar * dt;
            info += p1 * std::log(p1 / q1) + (1.0 - p1) * std::log((1.0 - p1) / (1.0 - q1));
        }
        info /= static_cast<double>(phis.size());
        errors.push_back(std::abs(info / dt - rate) / std::abs(rate));
    }
    const double r01 = errors[0] / errors[1];
    const double r12 = errors[1] / errors[2];
    const bool pass =
        errors[2] < 1e-3 && r01 > 5.0 && r01 < 20.0 && r12 > 5.0 && r12 < 20.0;
    char detail[160];
    std::snprintf(detail, sizeof(detail), "errors=%.3e/%.3e/%.3e ratios=%.1f/%.1f", errors[0],
                  errors[1], errors[2], r01, r12);
    report(3, pass, "windowed information converges linearly onto the rate", detail);
}

// ---------------------------------------------------------------- criterion 4

void criterion_4() {
    LabeledDataset data = synth_blobs(3, 200, 2, 0.5, 11);
    data.images.resize(100);
    data.labels.resize(100);
    const std::vector<std::size_t> arch = {2, 16, 16, 3};

    auto run = [&](RegMode mode) {
        NetworkParams params = init_weights(arch, 4);
        Velocity vel = NetworkParams::zeros(arch);
        MeanBank means(arch, 1000.0);
        RegularizerConfig reg{mode, 0.0, 1000.0, kEps};
        std::mt19937_64 rng(21);
        std::vector<std::vector<double>> traj;
        for (int e = 0; e < 3; ++e) {
            train_epoch(params, vel, means, data, reg, 0.05, 0.9, rng);
            traj.push_back(flatten(params));
        }
        return traj;
    };
    const auto umax = run(RegMode::Umax);
    const auto lrdi = run(RegMode::Lrdi);
    const auto grdi = run(RegMode::Grdi);
    bool pass = true;
    for (std::size_t e = 0; e < umax.size(); ++e) {
        pass = pass && umax[e] == lrdi[e] && umax[e] == grdi[e];
    }
    report(4, pass,
           "umax, lrdi(beta=0) and grdi(beta=0) parameter trajectories are bit-identical "
           "(100 online steps per epoch, 3 epochs)");
}

// ---------------------------------------------------------------- criterion 5

std::string g_data_dir;
bool g_full = false;

bool mnist_present() {
    for (const char* name : {"train-images-idx3-ubyte", "train-labels-idx1-ubyte",
                             "t10k-images-idx3-ubyte", "t10k-labels-idx1-ubyte"}) {
        const fs::path plain = fs::path(g_data_dir) / name;
        const fs::path gz = fs::path(g_data_dir) / (std::string(name) + ".gz");
        if (!fs::exists(plain) && !fs::exists(gz)) return false;
    }
    return true;
}

ExperimentConfig mnist_config(const std::string& mode, double beta, std::uint64_t seed,
                              std::size_t epochs, const std::string& tag) {
    ExperimentConfig cfg;
    cfg.hidden = {529, 529};
    cfg.mode = mode;
    cfg.beta = beta;
    cfg.epochs = epochs;
    cfg.seed = seed;
    cfg.data = "mnist";
    cfg.data_dir = g_data_dir;
    const fs::path base = fs::temp_directory_path() / ("brnet_acc5_" + tag);
    cfg.csv = base.string() + ".csv";
    cfg.checkpoint = base.string() + ".ckpt.json";
    return cfg;
}

void criterion_5() {
    const char* what = "desk-scale MNIST: umax < 3.5%, grdi(0.2) mean <= umax mean, "
                       "smaller overfitting gap per seed";
    if (!mnist_present()) {
        report(5, false, what,
               "MNIST IDX files not found under '" + g_data_dir +
                   "' (set --data-dir or $BRNET_DATA_DIR; scripts/fetch_mnist.sh downloads them)");
        return;
    }
    bool umax_ok = true;
    bool gap_ok = true;
    double umax_mean = 0.0;
    double grdi_mean = 0.0;
    std::string detail;
    for (std::uint64_t seed : {1, 2, 3}) {
        const TrainOutcome u = run_train(
            mnist_config("umax", 0.0, seed, 10, "umax_s" + std::to_string(seed)));
        const TrainOutcome g = run_train(
            mnist_config("grdi", 0.2, seed, 10, "grdi_s" + std::to_string(seed)));
        if (u.status != RunStatus::Ok || g.status != RunStatus::Ok) {
            report(5, false, what, "a training run diverged");
            return;
        }
        umax_ok = umax_ok && u.final_test.error < 0.035;
        const double u_gap = u.final_test.error - u.final_train.error;
        const double g_gap = g.final_test.error - g.final_train.error;
        gap_ok = gap_ok && g_gap < u_gap;
        umax_mean += u.final_test.error / 3.0;
        grdi_mean += g.final_test.error / 3.0;
        detail += "seed" + std::to_string(seed) + ": umax " +
                  std::to_string(u.final_test.error) + " (gap " + std::to_string(u_gap) +
                  "), grdi " + std::to_string(g.final_test.error) + " (gap " +
                  std::to_string(g_gap) + "); ";
    }
    const bool pass = umax_ok && grdi_mean <= umax_mean && gap_ok;
    report(5, pass, what, detail);

    if (g_full) {
        // Non-gating reference bands for the long 70-epoch runs.
        const TrainOutcome up = run_train(mnist_config("umax", 0.0, 1, 70, "full_umax"));
        const double uerr = up.final_test.error * 100.0;
        std::printf("[INFO] optional 70-epoch umax 529x2 (non-gating): test error %.2f%%, "
                    "band [1.2, 1.8] -> %s\n",
                    uerr, uerr >= 1.2 && uerr <= 1.8 ? "inside" : "OUTSIDE");
        const TrainOutcome gp = run_train(mnist_config("grdi", 0.2, 1, 70, "full_grdi"));
        const double gerr = gp.final_test.error * 100.0;
        std::printf("[INFO] optional 70-epoch grdi(0.2) 529x2 (non-gating): test error %.2f%%, "
                    "band 1.23 +- 0.15 -> %s\n",
                    gerr, gerr >= 1.08 && gerr <= 1.38 ? "inside" : "OUTSIDE");
    }
}

// ---------------------------------------------------------------- criterion 6

void criterion_6() {
    ExperimentConfig base = ExperimentConfig::preset("smoke");
    base.mode = "grdi";
    double prev = -1.0;
    bool increasing = true;
    std::string detail;
    for (double beta : {0.2, 0.5, 0.8}) {
        ExperimentConfig cfg = base;
        cfg.beta = beta;
        const fs::path out = fs::temp_directory_path() / ("brnet_acc6_" + std::to_string(beta));
        cfg.csv = out.string() + ".csv";
        cfg.checkpoint = out.string() + ".ckpt.json";
        const TrainOutcome res = run_train(cfg);
        increasing = increasing && res.status == RunStatus::Ok &&
                     res.final_test.mean_entropy > prev;
        detail += "beta " + std::to_string(beta) + ": H=" +
                  std::to_string(res.final_test.mean_entropy) + "; ";
        prev = res.final_test.mean_entropy;
        fs::remove(cfg.csv);
        fs::remove(cfg.checkpoint);
    }
    report(6, increasing, "stronger grdi regularization flattens the output distribution",
           detail);
}

// ---------------------------------------------------------------- criterion 7

void criterion_7() {
    const char* what = "MNIST files parse with valid ranges; fixture round-trips byte-exact";

    // Fixture round-trip (always runnable).
    RawImages fixture;
    fixture.count = 2;
    fixture.rows = 2;
    fixture.cols = 3;
    fixture.pixels = {0, 51, 102, 153, 204, 255, 9, 8, 7, 6, 5, 4};
    const fs::path fx = fs::temp_directory_path() / "brnet_acc7_fixture.idx";
    save_idx_images(fx.string(), fixture);
    std::ifstream in(fx, std::ios::binary);
    std::vector<std::uint8_t> file_bytes((std::istreambuf_iterator<char>(in)),
                                         std::istreambuf_iterator<char>());
    in.close();
    const RawImages loaded = load_idx_images(fx.string());
    const fs::path fx2 = fs::temp_directory_path() / "brnet_acc7_fixture2.idx";
    save_idx_images(fx2.string(), loaded);
    std::ifstream in2(fx2, std::ios::binary);
    std::vector<std::uint8_t> file_bytes2((std::istreambuf_iterator<char>(in2)),
                                          std::istreambuf_iterator<char>());
    in2.close();
    const bool fixture_ok = loaded.pixels == fixture.pixels && file_bytes == file_bytes2;
    fs::remove(fx);
    fs::remove(fx2);

    if (!mnist_present()) {
        report(7, false, what,
               std::string(fixture_ok ? "fixture round-trip ok, but " : "fixture FAILED and ") +
                   "MNIST IDX files not found under '" + g_data_dir +
                   "' (scripts/fetch_mnist.sh downloads them)");
        return;
    }

    ExperimentConfig cfg;
    cfg.data = "mnist";
    cfg.data_dir = g_data_dir;
    bool counts_ok = false;
    bool ranges_ok = true;
    try {
        const DataSplit split = load_split(cfg);
        counts_ok = split.train.size() == 60000 && split.test.size() == 10000 &&
                    split.train.images[0].size() == 784;
        for (const LabeledDataset* ds : {&split.train, &split.test}) {
            for (const auto& img : ds->images) {
                for (double p : img) ranges_ok = ranges_ok && p >= 0.0 && p <= 1.0;
            }
            for (std::size_t l : ds->labels) ranges_ok = ranges_ok && l <= 9;
        }
    } catch (const std::exception& e) {
        report(7, false, what, std::string("load failed: ") + e.what());
        return;
    }
    report(7, fixture_ok && counts_ok && ranges_ok, what,
           counts_ok ? "60000/10000 items, ranges valid" : "unexpected item counts");
}

// ---------------------------------------------------------------- criterion 8

void criterion_8() {
    ExperimentConfig cfg = ExperimentConfig::preset("smoke");
    cfg.mode = "grdi";
    cfg.beta = 0.2;
    cfg.epochs = 3;
    const fs::path a = fs::temp_directory_path() / "brnet_acc8_a.csv";
    const fs::path b = fs::temp_directory_path() / "brnet_acc8_b.csv";
    cfg.csv = a.string();
    cfg.checkpoint = (fs::temp_directory_path() / "brnet_acc8_a.ckpt.json").string();
    run_train(cfg);
    cfg.csv = b.string();
    cfg.checkpoint = (fs::temp_directory_path() / "brnet_acc8_b.ckpt.json").string();
    run_train(cfg);
    std::ifstream ia(a, std::ios::binary), ib(b, std::ios::binary);
    std::stringstream sa, sb;
    sa << ia.rdbuf();
    sb << ib.rdbuf();
    const bool pass = sa.str() == sb.str() && !sa.str().empty();
    report(8, pass, "repeated runs with one config+seed emit byte-identical CSV metrics");
    for (const char* stem : {"brnet_acc8_a.csv", "brnet_acc8_b.csv", "brnet_acc8_a.ckpt.json",
                             "brnet_acc8_b.ckpt.json"}) {
        fs::remove(fs::temp_directory_path() / stem);
    }
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    const char* env = std::getenv("BRNET_DATA_DIR");
    g_data_dir = env != nullptr ? env : "data";
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (std::strcmp(argv[i], "--data-dir") == 0 && i + 1 < argc) {
            g_data_dir = argv[++i];
        } else if (std::strcmp(argv[i], "--full") == 0) {
            g_full = true;
        } else {
            std::fprintf(stderr, "usage: acceptance [--only N] [--data-dir DIR] [--full]\n");
            return 1;
        }
    }
    const std::vector<std::function<void()>> criteria = {
        criterion_1, criterion_2, criterion_3, criterion_4,
        criterion_5, criterion_6, criterion_7, criterion_8};
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<int>(i + 1) != only) continue;
        criteria[i]();
    }
    return g_failures == 0 ? 0 : 1;
}
