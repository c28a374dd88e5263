#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <vector>

namespace fafs {

/// Binary feature mask; one byte per feature, 0 or 1.
using Mask = std::vector<std::uint8_t>;

std::size_t count_selected(const Mask& mask) noexcept;

/// "0110..." rendering used in output files.
std::string mask_to_string(const Mask& mask);

/// Tabular regression data: row-major features plus one target column.
class Dataset {
public:
    Dataset() = default;
    Dataset(std::string name, std::vector<std::string> feature_names, std::vector<double> features,
            std::vector<double> target);

    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& feature_names() const noexcept { return feature_names_; }
    std::size_t rows() const noexcept { return target_.size(); }
    std::size_t cols() const noexcept { return feature_names_.size(); }

    double at(std::size_t row, std::size_t col) const { return features_[row * cols() + col]; }
    std::span<const double> row(std::size_t r) const {
        return {features_.data() + r * cols(), cols()};
    }
    std::span<const double> features() const noexcept { return features_; }
    std::span<const double> target() const noexcept { return target_; }

    /// Subset of rows, in the given order.
    Dataset take_rows(std::span<const std::size_t> indices) const;

private:
    std::string name_;
    std::vector<std::string> feature_names_;
    std::vector<double> features_;
    std::vector<double> target_;
};

struct SplitDataset {
    Dataset train;
    Dataset test;
    double ratio = 0.7;
    std::uint64_t seed = 0;
    std::vector<std::size_t> train_indices;
    std::vector<std::size_t> test_indices;
};

/// Reads a comma-delimited file with a header row. Every column except
/// `target_column` becomes a feature, in header order. Any missing or
/// unparseable cell raises DataError naming the line and column.
Dataset load_csv(const std::filesystem::path& path, const std::string& target_column);
Dataset parse_csv(std::istream& in, const std::string& target_column, std::string name = "data");

/// Writes features then the target column with round-trip precision.
void save_csv(const Dataset& data, const std::filesystem::path& path,
              const std::string& target_column = "pbf");

/// Seeded shuffle split; train receives round(ratio * rows) rows, kept
/// within [1, rows - 1].
SplitDataset split(const Dataset& data, double ratio, std::uint64_t seed);

/// Z-scores each feature with train-split mean and population SD and applies
/// the same map to test. Zero-variance columns become zeros. The target is
/// untouched.
SplitDataset normalize(const SplitDataset& split);

/// Keeps the columns whose mask bit is set.
Dataset project(const Dataset& data, const Mask& mask);

/// Expected column layout for a known dataset.
struct Schema {
    std::string name;
    std::string target;
    std::vector<std::string> features;
};

Schema load_schema(const std::filesystem::path& path);

/// Throws DataError when the dataset's columns differ from the schema.
void validate_schema(const Dataset& data, const Schema& schema);

} // namespace fafs
