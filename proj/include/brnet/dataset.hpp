#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace brnet {

/// Raw IDX image tensor: count x rows x cols of unsigned bytes.
struct RawImages {
    std::size_t count = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> pixels;  // row-major per image, images concatenated
};

/// Classification dataset with rate-valued inputs in [0, 1].
struct LabeledDataset {
    std::vector<std::vector<double>> images;
    std::vector<std::size_t> labels;
    std::size_t class_count = 0;
    std::string name;

    std::size_t size() const { return images.size(); }
    void validate() const;
};

/// Parse a big-endian IDX image file (magic 0x00000803). Gzipped files are
/// detected by their two-byte header and inflated transparently.
RawImages load_idx_images(const std::string& path);

/// Parse a big-endian IDX label file (magic 0x00000801); labels must lie in
/// 0..9.
std::vector<std::uint8_t> load_idx_labels(const std::string& path);

/// Write tensors back out in the same IDX layout (uncompressed).
void save_idx_images(const std::string& path, const RawImages& images);
void save_idx_labels(const std::string& path, const std::vector<std::uint8_t>& labels);

/// Bytes to rates: pixel / 255, flattened row-major.
std::vector<std::vector<double>> normalize(const RawImages& raw);

/// Combine IDX image and label files into a dataset with 10 classes.
LabeledDataset load_mnist_split(const std::string& images_path, const std::string& labels_path,
                                const std::string& name);

/// Isotropic Gaussian clusters (std 0.05) around seeded random centers with
/// pairwise distance >= separation, clipped to the unit box. Deterministic
/// per seed. Rejects infeasible center placements.
LabeledDataset synth_blobs(std::size_t classes, std::size_t per_class, std::size_t dim,
                           double separation, std::uint64_t seed);

/// Quantize a dataset (rates in [0, 1]) back into the IDX byte layout, so
/// synthetic sets flow through the same tooling as MNIST. Vectors are stored
/// as 1 x dim images.
void save_dataset_as_idx(const LabeledDataset& ds, const std::string& images_path,
                         const std::string& labels_path);

}  // namespace brnet
