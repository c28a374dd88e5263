#include "fafs/pareto.hpp"

#include "fafs/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace fafs {

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) noexcept {
    const bool no_worse = a.n_f <= b.n_f && a.rmse <= b.rmse && a.std <= b.std;
    const bool better = a.n_f < b.n_f || a.rmse < b.rmse || a.std < b.std;
    return no_worse && better;
}

std::vector<std::size_t> nondominated_sort(std::span<const ObjectiveVector> points) {
    const std::size_t n = points.size();
    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<std::size_t> dom_count(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(points[i], points[j])) {
                dominated[i].push_back(j);
                ++dom_count[j];
            } else if (dominates(points[j], points[i])) {
                dominated[j].push_back(i);
                ++dom_count[i];
            }
        }
    std::vector<std::size_t> rank(n, 0);
    std::vector<std::size_t> front;
    for (std::size_t i = 0; i < n; ++i)
        if (dom_count[i] == 0) front.push_back(i);
    for (std::size_t r = 1; !front.empty(); ++r) {
        std::vector<std::size_t> next;
        for (auto i : front) {
            rank[i] = r;
            for (auto j : dominated[i])
                if (--dom_count[j] == 0) next.push_back(j);
        }
        front = std::move(next);
    }
    return rank;
}

namespace {

double distance(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) s += (a[d] - b[d]) * (a[d] - b[d]);
    return std::sqrt(s);
}

} // namespace

double ssd(std::span<const Point> pts, std::size_t i, std::size_t k_max) {
    const std::size_t n = pts.size();
    if (i >= n) throw PreconditionError("ssd index out of range");
    if (n == 1) return 0.0;

    double d_max = 0.0;
    double d_min = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const double d = distance(pts[a], pts[b]);
            d_max = std::max(d_max, d);
            d_min = std::min(d_min, d);
        }
    const double spread = d_max - d_min;

    std::vector<std::pair<double, std::size_t>> near;
    double mu = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double d = distance(pts[i], pts[j]);
        mu += (d - spread) * (d - spread);
        near.emplace_back(d, j);
    }
    mu /= static_cast<double>(n - 1);

    const std::size_t k = std::min(k_max, n - 1);
    std::partial_sort(near.begin(), near.begin() + static_cast<std::ptrdiff_t>(k), near.end());
    double crowd = 0.0;
    for (std::size_t m = 0; m < k; ++m) crowd += spread / std::max(near[m].first, kEpsilon);
    return std::sqrt(mu + crowd);
}

std::vector<double> ssdr(std::span<const Point> points, std::span<const std::size_t> ranks, double penalty_per_rank,
                         std::size_t k_max) {
    if (points.size() != ranks.size()) throw PreconditionError("ssdr: points and ranks differ in length");
    std::vector<double> out(points.size(), 0.0);
    const std::size_t max_rank = ranks.empty() ? 0 : *std::max_element(ranks.begin(), ranks.end());
    for (std::size_t r = 1; r <= max_rank; ++r) {
        std::vector<std::size_t> members;
        std::vector<Point> group;
        for (std::size_t i = 0; i < ranks.size(); ++i)
            if (ranks[i] == r) {
                members.push_back(i);
                group.push_back(points[i]);
            }
        for (std::size_t m = 0; m < members.size(); ++m)
            out[members[m]] = ssd(group, m, k_max) + static_cast<double>(r - 1) * penalty_per_rank;
    }
    return out;
}

double mo_power(double ssdr_os, double ssdr_ds) noexcept { return power_from_z(ssdr_os + ssdr_ds); }

std::vector<Point> normalized_objectives(std::span<const ObjectiveVector> objectives) {
    std::vector<Point> raw;
    for (const auto& o : objectives) raw.push_back({static_cast<double>(o.n_f), o.rmse, o.std});
    if (raw.empty()) return raw;
    for (std::size_t d = 0; d < 3; ++d) {
        double lo = raw[0][d], hi = raw[0][d];
        for (const auto& p : raw) {
            lo = std::min(lo, p[d]);
            hi = std::max(hi, p[d]);
        }
        for (auto& p : raw) p[d] = hi > lo ? (p[d] - lo) / (hi - lo) : 0.0;
    }
    return raw;
}

MoScores score_population(std::span<const ObjectiveVector> objectives, std::span<const Point> positions,
                          std::size_t k_max) {
    if (objectives.size() != positions.size()) throw PreconditionError("score_population: size mismatch");
    MoScores s;
    s.ranks = nondominated_sort(objectives);
    const auto os_points = normalized_objectives(objectives);
    const double n_var = positions.empty() ? 0.0 : static_cast<double>(positions[0].size());
    s.ssdr_os = ssdr(os_points, s.ranks, 3.0, k_max);
    s.ssdr_ds = ssdr(positions, s.ranks, n_var, k_max);
    s.power.resize(objectives.size());
    for (std::size_t i = 0; i < s.power.size(); ++i) s.power[i] = mo_power(s.ssdr_os[i], s.ssdr_ds[i]);
    return s;
}

void SsdrPowerPolicy::refresh(std::vector<Candidate>& population) const {
    std::vector<ObjectiveVector> obj;
    std::vector<Point> pos;
    for (const auto& c : population) {
        obj.push_back(c.evaluation->objectives);
        pos.push_back(c.position);
    }
    const auto scores = score_population(obj, pos);
    for (std::size_t i = 0; i < population.size(); ++i) population[i].power = scores.power[i];
}

std::pair<double, double> SsdrPowerPolicy::contest(const std::vector<Candidate>& population, std::size_t base,
                                                   const Candidate& trial) const {
    std::vector<ObjectiveVector> obj;
    std::vector<Point> pos;
    for (const auto& c : population) {
        obj.push_back(c.evaluation->objectives);
        pos.push_back(c.position);
    }
    obj.push_back(trial.evaluation->objectives);
    pos.push_back(trial.position);
    const auto scores = score_population(obj, pos);
    return {scores.power.back(), scores.power[base]};
}

ParetoArchive::ParetoArchive(std::size_t capacity) : capacity_(capacity) {
    if (capacity_ < 1) throw ConfigError("archive capacity must be >= 1");
}

std::vector<double> ParetoArchive::crowding() const {
    std::vector<ObjectiveVector> obj;
    std::vector<Point> pos;
    for (const auto& e : entries_) {
        obj.push_back(e.objectives);
        pos.push_back(e.position);
    }
    const std::vector<std::size_t> ranks(entries_.size(), 1);
    const auto os = ssdr(normalized_objectives(obj), ranks, 3.0);
    const auto ds = ssdr(pos, ranks, 0.0);
    std::vector<double> total(entries_.size());
    for (std::size_t i = 0; i < total.size(); ++i) total[i] = os[i] + ds[i];
    return total;
}

void ParetoArchive::update(const std::vector<ArchiveEntry>& candidates) {
    for (const auto& cand : candidates) {
        const bool duplicate = std::any_of(entries_.begin(), entries_.end(),
                                           [&](const ArchiveEntry& e) { return e.mask == cand.mask; });
        if (duplicate) continue;
        const bool beaten = std::any_of(entries_.begin(), entries_.end(), [&](const ArchiveEntry& e) {
            return dominates(e.objectives, cand.objectives);
        });
        if (beaten) continue;
        std::erase_if(entries_, [&](const ArchiveEntry& e) { return dominates(cand.objectives, e.objectives); });
        entries_.push_back(cand);
    }
    while (entries_.size() > capacity_) {
        const auto crowd = crowding();
        const auto worst = std::max_element(crowd.begin(), crowd.end()) - crowd.begin();
        entries_.erase(entries_.begin() + worst);
    }
}

MultiRunResult run_multi(const SearchConfig& config, CandidateEvaluator& evaluator) {
    const std::size_t n_pop = config.n_imp + config.n_col;
    MultiRunResult result{ParetoArchive(std::max<std::size_t>(1, n_pop / 2)), {}};
    FaglsudSearch search(config, evaluator, std::make_shared<SsdrPowerPolicy>());
    search.run([&](const FaglsudSearch& s) {
        const auto& pop = s.state().candidates;
        std::vector<ObjectiveVector> obj;
        for (const auto& c : pop) obj.push_back(c.evaluation->objectives);
        const auto ranks = nondominated_sort(obj);
        std::vector<ArchiveEntry> front;
        for (std::size_t i = 0; i < pop.size(); ++i)
            if (ranks[i] == 1) front.push_back({pop[i].mask, pop[i].position, obj[i], pop[i].evaluation});
        result.archive.update(front);

        MultiTraceEntry e;
        e.iter = s.state().t;
        e.archive_size = result.archive.size();
        e.min_rmse = std::numeric_limits<double>::infinity();
        e.min_n_f = evaluator.dimension();
        for (const auto& a : result.archive.entries()) {
            e.min_rmse = std::min(e.min_rmse, a.objectives.rmse);
            e.min_n_f = std::min(e.min_n_f, a.objectives.n_f);
        }
        e.probabilities = s.state().probabilities;
        result.trace.push_back(e);
    });
    return result;
}

} // namespace fafs
