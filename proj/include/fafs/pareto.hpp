#pragma once

#include "fafs/objectives.hpp"
#include "fafs/search.hpp"

#include <span>
#include <vector>

namespace fafs {

/// a is no worse in every objective and strictly better in one (minimization).
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) noexcept;

/// Pareto rank per point, 1 = non-dominated.
std::vector<std::size_t> nondominated_sort(std::span<const ObjectiveVector> points);

using Point = std::vector<double>;

/// Spread deviation of point i among `rank_points` (all one rank):
/// sqrt(mu_i + sum over the k nearest j of (D_max - D_min) / D_ij), where
/// mu_i = mean_j (D_ij - (D_max - D_min))^2. Uses k = min(k_max, n - 1);
/// a singleton rank scores 0.
double ssd(std::span<const Point> rank_points, std::size_t i, std::size_t k_max = 3);

/// SSD within each point's rank plus (rank - 1) * penalty_per_rank.
std::vector<double> ssdr(std::span<const Point> points, std::span<const std::size_t> ranks,
                         double penalty_per_rank, std::size_t k_max = 3);

/// 1 / (os + ds), guarded at 1 / kEpsilon.
double mo_power(double ssdr_os, double ssdr_ds) noexcept;

/// Objective vectors rescaled per objective to [0,1] over the given set.
std::vector<Point> normalized_objectives(std::span<const ObjectiveVector> objectives);

struct MoScores {
    std::vector<std::size_t> ranks;
    std::vector<double> ssdr_os;
    std::vector<double> ssdr_ds;
    std::vector<double> power;
};

/// Ranks, SSDR in objective space (M = 3 penalty) and decision space
/// (penalty = number of variables), and the resulting power.
MoScores score_population(std::span<const ObjectiveVector> objectives, std::span<const Point> positions,
                          std::size_t k_max = 3);

class SsdrPowerPolicy final : public PowerPolicy {
public:
    void refresh(std::vector<Candidate>& population) const override;
    std::pair<double, double> contest(const std::vector<Candidate>& population, std::size_t base,
                                      const Candidate& trial) const override;
};

struct ArchiveEntry {
    Mask mask;
    Point position;
    ObjectiveVector objectives;
    CandidateEvaluator::Result evaluation;
};

/// Bounded set of mutually non-dominated solutions with unique masks.
class ParetoArchive {
public:
    explicit ParetoArchive(std::size_t capacity);

    std::size_t capacity() const noexcept { return capacity_; }
    const std::vector<ArchiveEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    /// Merges candidates, drops dominated entries and duplicate masks, then
    /// evicts the entry with the largest SSDR_OS + SSDR_DS until at capacity.
    void update(const std::vector<ArchiveEntry>& candidates);

    /// SSDR_OS + SSDR_DS for each current entry.
    std::vector<double> crowding() const;

private:
    std::size_t capacity_;
    std::vector<ArchiveEntry> entries_;
};

struct MultiTraceEntry {
    int iter = 0;
    std::size_t archive_size = 0;
    double min_rmse = 0.0;
    std::size_t min_n_f = 0;
    std::array<double, 3> probabilities{};
};

struct MultiRunResult {
    ParetoArchive archive{1};
    std::vector<MultiTraceEntry> trace;
};

/// The single-objective loop driven by SSDR power, with a floor(N/2)
/// archive of the first front updated every iteration.
MultiRunResult run_multi(const SearchConfig& config, CandidateEvaluator& evaluator);

} // namespace fafs
