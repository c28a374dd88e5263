#include "fafs/dataset.hpp"

#include "fafs/error.hpp"
#include "fafs/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace fafs {

std::size_t count_selected(const Mask& mask) noexcept {
    return static_cast<std::size_t>(std::count_if(mask.begin(), mask.end(), [](auto b) { return b != 0; }));
}

std::string mask_to_string(const Mask& mask) {
    std::string s(mask.size(), '0');
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) s[i] = '1';
    return s;
}

Dataset::Dataset(std::string name, std::vector<std::string> feature_names,
                 std::vector<double> features, std::vector<double> target)
    : name_(std::move(name)), feature_names_(std::move(feature_names)),
      features_(std::move(features)), target_(std::move(target)) {
    if (feature_names_.empty()) throw DataError("dataset '" + name_ + "' has no feature columns");
    if (features_.size() != target_.size() * feature_names_.size())
        throw DataError("dataset '" + name_ + "': feature matrix size does not match row count");
    for (double v : features_)
        if (!std::isfinite(v)) throw DataError("dataset '" + name_ + "' contains a non-finite feature");
    for (double v : target_)
        if (!std::isfinite(v)) throw DataError("dataset '" + name_ + "' contains a non-finite target");
}

Dataset Dataset::take_rows(std::span<const std::size_t> indices) const {
    std::vector<double> f;
    std::vector<double> t;
    f.reserve(indices.size() * cols());
    t.reserve(indices.size());
    for (auto r : indices) {
        auto src = row(r);
        f.insert(f.end(), src.begin(), src.end());
        t.push_back(target_[r]);
    }
    return Dataset(name_, feature_names_, std::move(f), std::move(t));
}

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    std::string out(s.substr(b, e - b + 1));
    if (out.size() >= 2 && out.front() == '"' && out.back() == '"') out = out.substr(1, out.size() - 2);
    return out;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        cells.push_back(trim(std::string_view(line).substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return cells;
}

bool parse_double(const std::string& cell, double& out) {
    if (cell.empty()) return false;
    const char* first = cell.data();
    const char* last = first + cell.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && std::isfinite(out);
}

} // namespace

Dataset parse_csv(std::istream& in, const std::string& target_column, std::string name) {
    std::string line;
    if (!std::getline(in, line)) throw DataError(name + ": empty file, expected a header row");
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    const auto header = split_line(line);
    auto target_it = std::find(header.begin(), header.end(), target_column);
    if (target_it == header.end())
        throw DataError(name + ": target column '" + target_column + "' not found in header");
    const auto target_pos = static_cast<std::size_t>(target_it - header.begin());

    std::vector<std::string> feature_names;
    for (std::size_t c = 0; c < header.size(); ++c)
        if (c != target_pos) feature_names.push_back(header[c]);

    std::vector<double> features;
    std::vector<double> target;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cells = split_line(line);
        if (cells.size() != header.size())
            throw DataError(name + ": line " + std::to_string(line_no) + " has " +
                            std::to_string(cells.size()) + " cells, expected " +
                            std::to_string(header.size()));
        for (std::size_t c = 0; c < cells.size(); ++c) {
            double v = 0.0;
            if (!parse_double(cells[c], v))
                throw DataError(name + ": line " + std::to_string(line_no) + ", column '" + header[c] +
                                "': cannot parse '" + cells[c] + "' as a finite number");
            (c == target_pos ? target : features).push_back(v);
        }
    }
    return Dataset(std::move(name), std::move(feature_names), std::move(features), std::move(target));
}

Dataset load_csv(const std::filesystem::path& path, const std::string& target_column) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open data file '" + path.string() + "'");
    return parse_csv(in, target_column, path.stem().string());
}

namespace {

void write_number(std::ostream& os, double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    os.write(buf, ptr - buf);
}

} // namespace

void save_csv(const Dataset& data, const std::filesystem::path& path, const std::string& target_column) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw DataError("cannot write '" + path.string() + "'");
    for (const auto& n : data.feature_names()) os << n << ',';
    os << target_column << '\n';
    for (std::size_t r = 0; r < data.rows(); ++r) {
        for (double v : data.row(r)) {
            write_number(os, v);
            os << ',';
        }
        write_number(os, data.target()[r]);
        os << '\n';
    }
}

SplitDataset split(const Dataset& data, double ratio, std::uint64_t seed) {
    if (!(ratio > 0.0 && ratio < 1.0))
        throw PreconditionError("split ratio must lie in (0, 1), got " + std::to_string(ratio));
    const std::size_t n = data.rows();
    if (n < 2) throw PreconditionError("split needs at least two rows");

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Rng rng(derive_seed({seed, 0x5b117}));
    for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.index(i + 1)]);

    auto n_train = static_cast<std::size_t>(std::llround(ratio * static_cast<double>(n)));
    n_train = std::clamp<std::size_t>(n_train, 1, n - 1);

    SplitDataset out;
    out.ratio = ratio;
    out.seed = seed;
    out.train_indices.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n_train));
    out.test_indices.assign(perm.begin() + static_cast<std::ptrdiff_t>(n_train), perm.end());
    out.train = data.take_rows(out.train_indices);
    out.test = data.take_rows(out.test_indices);
    return out;
}

namespace {

Dataset apply_affine(const Dataset& d, const std::vector<double>& mean, const std::vector<double>& sd) {
    std::vector<double> f(d.features().begin(), d.features().end());
    const std::size_t cols = d.cols();
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            double& v = f[r * cols + c];
            v = sd[c] > 0.0 ? (v - mean[c]) / sd[c] : 0.0;
        }
    return Dataset(d.name(), d.feature_names(), std::move(f),
                   std::vector<double>(d.target().begin(), d.target().end()));
}

} // namespace

SplitDataset normalize(const SplitDataset& s) {
    const Dataset& tr = s.train;
    if (tr.rows() < 2) throw PreconditionError("normalize needs at least two training rows");
    const std::size_t cols = tr.cols();
    std::vector<double> mean(cols, 0.0);
    std::vector<double> sd(cols, 0.0);
    for (std::size_t c = 0; c < cols; ++c) {
        double sum = 0.0;
        for (std::size_t r = 0; r < tr.rows(); ++r) sum += tr.at(r, c);
        mean[c] = sum / static_cast<double>(tr.rows());
        double ss = 0.0;
        for (std::size_t r = 0; r < tr.rows(); ++r) {
            const double d = tr.at(r, c) - mean[c];
            ss += d * d;
        }
        sd[c] = std::sqrt(ss / static_cast<double>(tr.rows()));
    }
    SplitDataset out = s;
    out.train = apply_affine(s.train, mean, sd);
    out.test = apply_affine(s.test, mean, sd);
    return out;
}

Dataset project(const Dataset& data, const Mask& mask) {
    if (mask.size() != data.cols())
        throw PreconditionError("mask length " + std::to_string(mask.size()) + " does not match " +
                                std::to_string(data.cols()) + " features");
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < mask.size(); ++c)
        if (mask[c]) keep.push_back(c);
    if (keep.empty()) throw PreconditionError("cannot project onto an empty feature mask");

    std::vector<std::string> names;
    for (auto c : keep) names.push_back(data.feature_names()[c]);
    std::vector<double> f;
    f.reserve(data.rows() * keep.size());
    for (std::size_t r = 0; r < data.rows(); ++r)
        for (auto c : keep) f.push_back(data.at(r, c));
    return Dataset(data.name(), std::move(names), std::move(f),
                   std::vector<double>(data.target().begin(), data.target().end()));
}

Schema load_schema(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open schema '" + path.string() + "'");
    nlohmann::json j;
    try {
        in >> j;
        Schema s;
        s.name = j.at("name").get<std::string>();
        s.target = j.at("target").get<std::string>();
        s.features = j.at("features").get<std::vector<std::string>>();
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("schema '" + path.string() + "': " + e.what());
    }
}

void validate_schema(const Dataset& data, const Schema& schema) {
    if (data.feature_names() != schema.features) {
        std::ostringstream os;
        os << "dataset '" << data.name() << "' does not match schema '" << schema.name << "': expected "
           << schema.features.size() << " features, got " << data.cols();
        for (std::size_t i = 0; i < std::min(data.cols(), schema.features.size()); ++i)
            if (data.feature_names()[i] != schema.features[i]) {
                os << "; first mismatch at column " << (i + 1) << " ('" << data.feature_names()[i]
                   << "' vs '" << schema.features[i] << "')";
                break;
            }
        throw DataError(os.str());
    }
}

} // namespace fafs
