#include "fafs/evaluator.hpp"

#include "fafs/error.hpp"
#include "fafs/rng.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace fafs {

CandidateEvaluator::CandidateEvaluator(std::size_t dimension, unsigned threads)
    : dimension_(dimension), threads_(std::max(1u, threads)) {
    if (dimension_ == 0) throw ConfigError("evaluator dimension must be >= 1");
}

CandidateEvaluator::Result CandidateEvaluator::evaluate(const Mask& mask) {
    return evaluate(std::vector<Mask>{mask}).front();
}

std::vector<CandidateEvaluator::Result> CandidateEvaluator::evaluate(const std::vector<Mask>& masks) {
    std::vector<Mask> missing;
    {
        std::lock_guard lock(mutex_);
        for (const auto& m : masks) {
            if (m.size() != dimension_) throw PreconditionError("mask length does not match evaluator dimension");
            if (count_selected(m) == 0) throw PreconditionError("cannot evaluate an empty feature mask");
            if (!cache_.count(m) && std::find(missing.begin(), missing.end(), m) == missing.end())
                missing.push_back(m);
        }
    }

    std::vector<Result> fresh(missing.size());
    std::vector<std::exception_ptr> errors(missing.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < missing.size(); i = next++) {
            try {
                fresh[i] = std::make_shared<const Evaluation>(compute(missing[i]));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n_workers = static_cast<unsigned>(std::min<std::size_t>(threads_, missing.size()));
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<Result> out;
    out.reserve(masks.size());
    std::lock_guard lock(mutex_);
    for (std::size_t i = 0; i < missing.size(); ++i) cache_.emplace(missing[i], fresh[i]);
    computed_ += missing.size();
    for (const auto& m : masks) out.push_back(cache_.at(m));
    return out;
}

std::size_t CandidateEvaluator::cache_size() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
}

std::uint64_t mask_hash(const Mask& mask) noexcept {
    std::uint64_t h = mix64(mask.size());
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i]) word |= std::uint64_t{1} << (i % 64);
        if (i % 64 == 63 || i + 1 == mask.size()) {
            h = mix64(h ^ word);
            word = 0;
        }
    }
    return h;
}

MlpEvaluator::MlpEvaluator(SplitDataset normalized, MlpSettings mlp, WeightedObjective weights,
                           std::uint64_t seed, unsigned threads)
    : CandidateEvaluator(normalized.train.cols(), threads), data_(std::move(normalized)),
      mlp_(std::move(mlp)), weights_(weights), seed_(seed) {
    mlp_.train.validate();
}

Evaluation MlpEvaluator::compute(const Mask& mask) const {
    MlpSettings settings = mlp_;
    settings.train.seed = derive_seed({seed_, 0x317, mask_hash(mask)});
    return evaluate_candidate(mask, data_, settings, weights_);
}

} // namespace fafs
