#include "brnet/dataset.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <random>
#include <stdexcept>

namespace brnet {

namespace {

constexpr std::uint32_t kImageMagic = 0x00000803;
constexpr std::uint32_t kLabelMagic = 0x00000801;

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

std::vector<std::uint8_t> gunzip(const std::vector<std::uint8_t>& bytes,
                                 const std::string& path) {
    z_stream zs{};
    if (inflateInit2(&zs, 16 + MAX_WBITS) != Z_OK) {
        throw std::runtime_error("zlib init failed for " + path);
    }
    std::vector<std::uint8_t> out;
    out.reserve(bytes.size() * 4);
    std::uint8_t buf[1 << 16];
    zs.next_in = const_cast<Bytef*>(bytes.data());
    zs.avail_in = static_cast<uInt>(bytes.size());
    int ret = Z_OK;
    do {
        zs.next_out = buf;
        zs.avail_out = sizeof(buf);
        ret = inflate(&zs, Z_NO_FLUSH);
        if (ret != Z_OK && ret != Z_STREAM_END) {
            inflateEnd(&zs);
            throw std::runtime_error("gzip stream corrupt in " + path);
        }
        out.insert(out.end(), buf, buf + (sizeof(buf) - zs.avail_out));
    } while (ret != Z_STREAM_END);
    inflateEnd(&zs);
    return out;
}

std::vector<std::uint8_t> read_maybe_gzipped(const std::string& path) {
    std::vector<std::uint8_t> bytes = read_file_bytes(path);
    if (bytes.size() >= 2 && bytes[0] == 0x1f && bytes[1] == 0x8b) {
        return gunzip(bytes, path);
    }
    return bytes;
}

std::uint32_t read_be32(const std::vector<std::uint8_t>& b, std::size_t off) {
    return (static_cast<std::uint32_t>(b[off]) << 24) |
           (static_cast<std::uint32_t>(b[off + 1]) << 16) |
           (static_cast<std::uint32_t>(b[off + 2]) << 8) | static_cast<std::uint32_t>(b[off + 3]);
}

void write_be32(std::vector<std::uint8_t>& b, std::uint32_t v) {
    b.push_back(static_cast<std::uint8_t>(v >> 24));
    b.push_back(static_cast<std::uint8_t>(v >> 16));
    b.push_back(static_cast<std::uint8_t>(v >> 8));
    b.push_back(static_cast<std::uint8_t>(v));
}

}  // namespace

void LabeledDataset::validate() const {
    if (images.size() != labels.size()) {
        throw std::invalid_argument("LabeledDataset: image/label count mismatch");
    }
    if (images.empty()) throw std::invalid_argument("LabeledDataset: empty dataset");
    for (const auto& img : images) {
        for (double p : img) {
            if (!(p >= 0.0 && p <= 1.0)) {
                throw std::invalid_argument("LabeledDataset: pixel outside [0, 1]");
            }
        }
    }
    for (std::size_t l : labels) {
        if (l >= class_count) throw std::invalid_argument("LabeledDataset: label out of range");
    }
}

RawImages load_idx_images(const std::string& path) {
    const std::vector<std::uint8_t> bytes = read_maybe_gzipped(path);
    if (bytes.size() < 16) throw std::runtime_error("truncated IDX header in " + path);
    const std::uint32_t magic = read_be32(bytes, 0);
    if (magic != kImageMagic) {
        char msg[96];
        std::snprintf(msg, sizeof(msg), "bad IDX image magic 0x%08x", magic);
        throw std::runtime_error(std::string(msg) + " in " + path);
    }
    RawImages out;
    out.count = read_be32(bytes, 4);
    out.rows = read_be32(bytes, 8);
    out.cols = read_be32(bytes, 12);
    if (out.rows == 0 || out.cols == 0 ||
        out.count > (SIZE_MAX - 16) / (out.rows * out.cols)) {
        throw std::runtime_error("IDX dimensions overflow in " + path);
    }
    const std::size_t expect = out.count * out.rows * out.cols;
    if (bytes.size() != 16 + expect) {
        throw std::runtime_error("IDX payload size mismatch in " + path);
    }
    out.pixels.assign(bytes.begin() + 16, bytes.end());
    return out;
}

std::vector<std::uint8_t> load_idx_labels(const std::string& path) {
    const std::vector<std::uint8_t> bytes = read_maybe_gzipped(path);
    if (bytes.size() < 8) throw std::runtime_error("truncated IDX header in " + path);
    const std::uint32_t magic = read_be32(bytes, 0);
    if (magic != kLabelMagic) {
        char msg[96];
        std::snprintf(msg, sizeof(msg), "bad IDX label magic 0x%08x", magic);
        throw std::runtime_error(std::string(msg) + " in " + path);
    }
    const std::size_t count = read_be32(bytes, 4);
    if (bytes.size() != 8 + count) {
        throw std::runtime_error("IDX payload size mismatch in " + path);
    }
    std::vector<std::uint8_t> labels(bytes.begin() + 8, bytes.end());
    for (std::uint8_t l : labels) {
        if (l > 9) throw std::runtime_error("label byte out of range 0..9 in " + path);
    }
    return labels;
}

void save_idx_images(const std::string& path, const RawImages& images) {
    std::vector<std::uint8_t> bytes;
    bytes.reserve(16 + images.pixels.size());
    write_be32(bytes, kImageMagic);
    write_be32(bytes, static_cast<std::uint32_t>(images.count));
    write_be32(bytes, static_cast<std::uint32_t>(images.rows));
    write_be32(bytes, static_cast<std::uint32_t>(images.cols));
    bytes.insert(bytes.end(), images.pixels.begin(), images.pixels.end());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

void save_idx_labels(const std::string& path, const std::vector<std::uint8_t>& labels) {
    std::vector<std::uint8_t> bytes;
    bytes.reserve(8 + labels.size());
    write_be32(bytes, kLabelMagic);
    write_be32(bytes, static_cast<std::uint32_t>(labels.size()));
    bytes.insert(bytes.end(), labels.begin(), labels.end());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

std::vector<std::vector<double>> normalize(const RawImages& raw) {
    const std::size_t dim = raw.rows * raw.cols;
    std::vector<std::vector<double>> images(raw.count);
    for (std::size_t i = 0; i < raw.count; ++i) {
        images[i].resize(dim);
        const std::uint8_t* src = raw.pixels.data() + i * dim;
        for (std::size_t k = 0; k < dim; ++k) {
            images[i][k] = static_cast<double>(src[k]) / 255.0;
        }
    }
    return images;
}

LabeledDataset load_mnist_split(const std::string& images_path, const std::string& labels_path,
                                const std::string& name) {
    RawImages raw = load_idx_images(images_path);
    std::vector<std::uint8_t> labels = load_idx_labels(labels_path);
    if (labels.size() != raw.count) {
        throw std::runtime_error("image/label count mismatch between " + images_path + " and " +
                                 labels_path);
    }
    LabeledDataset ds;
    ds.images = normalize(raw);
    ds.labels.assign(labels.begin(), labels.end());
    ds.class_count = 10;
    ds.name = name;
    ds.validate();
    return ds;
}

void save_dataset_as_idx(const LabeledDataset& ds, const std::string& images_path,
                         const std::string& labels_path) {
    ds.validate();
    if (ds.class_count > 10) {
        throw std::invalid_argument("save_dataset_as_idx: IDX labels carry one byte in 0..9");
    }
    RawImages raw;
    raw.count = ds.size();
    raw.rows = 1;
    raw.cols = ds.images.front().size();
    raw.pixels.reserve(raw.count * raw.cols);
    for (const auto& img : ds.images) {
        if (img.size() != raw.cols) {
            throw std::invalid_argument("save_dataset_as_idx: ragged image dimensions");
        }
        for (double p : img) {
            raw.pixels.push_back(static_cast<std::uint8_t>(std::lround(p * 255.0)));
        }
    }
    save_idx_images(images_path, raw);
    std::vector<std::uint8_t> labels(ds.labels.begin(), ds.labels.end());
    save_idx_labels(labels_path, labels);
}

LabeledDataset synth_blobs(std::size_t classes, std::size_t per_class, std::size_t dim,
                           double separation, std::uint64_t seed) {
    if (classes == 0 || per_class == 0 || dim == 0) {
        throw std::invalid_argument("synth_blobs: classes, per_class and dim must be positive");
    }
    if (!(separation > 0.0)) throw std::invalid_argument("synth_blobs: separation must be > 0");
    constexpr double kStd = 0.05;
    constexpr int kMaxAttempts = 10000;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> noise(0.0, kStd);

    std::vector<std::vector<double>> centers;
    for (std::size_t c = 0; c < classes; ++c) {
        bool placed = false;
        for (int attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
            std::vector<double> cand(dim);
            for (double& v : cand) v = unit(rng);
            placed = true;
            for (const auto& other : centers) {
                double sq = 0.0;
                for (std::size_t k = 0; k < dim; ++k) {
                    sq += (cand[k] - other[k]) * (cand[k] - other[k]);
                }
                if (std::sqrt(sq) < separation) {
                    placed = false;
                    break;
                }
            }
            if (placed) centers.push_back(std::move(cand));
        }
        if (!placed) {
            throw std::runtime_error("synth_blobs: cannot place centers at this separation");
        }
    }

    LabeledDataset ds;
    ds.class_count = classes;
    ds.name = "blobs";
    ds.images.reserve(classes * per_class);
    ds.labels.reserve(classes * per_class);
    for (std::size_t c = 0; c < classes; ++c) {
        for (std::size_t k = 0; k < per_class; ++k) {
            std::vector<double> pt(dim);
            for (std::size_t d = 0; d < dim; ++d) {
                pt[d] = std::clamp(centers[c][d] + noise(rng), 0.0, 1.0);
            }
            ds.images.push_back(std::move(pt));
            ds.labels.push_back(c);
        }
    }
    ds.validate();
    return ds;
}

}  // namespace brnet
