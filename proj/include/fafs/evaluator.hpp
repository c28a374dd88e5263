#pragma once

#include "fafs/dataset.hpp"
#include "fafs/objectives.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace fafs {

/// Memoizing mask -> Evaluation service. `compute` must be a pure function
/// of the mask, so cache hits and worker scheduling never change results.
class CandidateEvaluator {
public:
    using Result = std::shared_ptr<const Evaluation>;

    CandidateEvaluator(std::size_t dimension, unsigned threads);
    virtual ~CandidateEvaluator() = default;

    CandidateEvaluator(const CandidateEvaluator&) = delete;
    CandidateEvaluator& operator=(const CandidateEvaluator&) = delete;

    std::size_t dimension() const noexcept { return dimension_; }
    unsigned threads() const noexcept { return threads_; }

    Result evaluate(const Mask& mask);
    /// Misses are computed concurrently on up to threads() workers.
    std::vector<Result> evaluate(const std::vector<Mask>& masks);

    std::size_t cache_size() const;
    std::size_t compute_count() const noexcept { return computed_; }

protected:
    virtual Evaluation compute(const Mask& mask) const = 0;

private:
    std::size_t dimension_;
    unsigned threads_;
    mutable std::mutex mutex_;
    std::map<Mask, Result> cache_;
    std::size_t computed_ = 0;
};

/// Wrapper fitness: train the MLP on the selected columns, score on test.
/// The MLP initialization seed is derived from (seed, mask).
class MlpEvaluator final : public CandidateEvaluator {
public:
    MlpEvaluator(SplitDataset normalized, MlpSettings mlp, WeightedObjective weights, std::uint64_t seed,
                 unsigned threads = 1);

    const SplitDataset& data() const noexcept { return data_; }
    const MlpSettings& mlp() const noexcept { return mlp_; }

protected:
    Evaluation compute(const Mask& mask) const override;

private:
    SplitDataset data_;
    MlpSettings mlp_;
    WeightedObjective weights_;
    std::uint64_t seed_;
};

std::uint64_t mask_hash(const Mask& mask) noexcept;

} // namespace fafs
