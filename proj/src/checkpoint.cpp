#include "brnet/checkpoint.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace brnet {

namespace {

using nlohmann::json;

json layers_to_json(const NetworkParams& p) {
    json arr = json::array();
    for (const Layer& l : p.layers) {
        arr.push_back({{"in", l.in}, {"out", l.out}, {"weights", l.weights}, {"bias", l.bias}});
    }
    return arr;
}

NetworkParams layers_from_json(const json& arr) {
    NetworkParams p;
    for (const json& jl : arr) {
        Layer l;
        l.in = jl.at("in").get<std::size_t>();
        l.out = jl.at("out").get<std::size_t>();
        l.weights = jl.at("weights").get<std::vector<double>>();
        l.bias = jl.at("bias").get<std::vector<double>>();
        p.layers.push_back(std::move(l));
    }
    p.validate();
    return p;
}

}  // namespace

void save_checkpoint(const std::string& path, const Checkpoint& ckpt) {
    json j;
    j["version"] = Checkpoint::kVersion;
    j["architecture"] = ckpt.params.architecture();
    j["layers"] = layers_to_json(ckpt.params);
    j["velocity"] = layers_to_json(ckpt.velocity);
    j["means"] = {{"hidden", ckpt.mean_hidden},
                  {"output", ckpt.mean_output},
                  {"warmed", ckpt.means_warmed},
                  {"tau", ckpt.tau}};
    j["epoch"] = ckpt.epoch;
    j["rng_state"] = ckpt.rng_state;
    j["mode"] = ckpt.mode;
    j["beta"] = ckpt.beta;
    j["alpha_current"] = ckpt.alpha_current;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write checkpoint " + path);
    out << j.dump();
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open checkpoint " + path);
    json j;
    in >> j;
    if (j.at("version").get<int>() != Checkpoint::kVersion) {
        throw std::runtime_error("unsupported checkpoint version in " + path);
    }
    Checkpoint ckpt;
    ckpt.params = layers_from_json(j.at("layers"));
    ckpt.velocity = layers_from_json(j.at("velocity"));
    const json& means = j.at("means");
    ckpt.mean_hidden = means.at("hidden").get<std::vector<std::vector<double>>>();
    ckpt.mean_output = means.at("output").get<std::vector<double>>();
    ckpt.means_warmed = means.at("warmed").get<bool>();
    ckpt.tau = means.at("tau").get<double>();
    ckpt.epoch = j.at("epoch").get<std::size_t>();
    ckpt.rng_state = j.at("rng_state").get<std::string>();
    ckpt.mode = j.at("mode").get<std::string>();
    ckpt.beta = j.at("beta").get<double>();
    ckpt.alpha_current = j.at("alpha_current").get<double>();
    return ckpt;
}

}  // namespace brnet
