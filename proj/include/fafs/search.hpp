#pragma once

#include "fafs/dataset.hpp"
#include "fafs/evaluator.hpp"
#include "fafs/fis_tables.hpp"
#include "fafs/fuzzy.hpp"
#include "fafs/rng.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string_view>
#include <vector>

namespace fafs {

/// V-shaped transfer: 2 * |sigmoid(8u) - 0.5|, the bit-flip probability for
/// a position change u.
double transfer(double u) noexcept;

struct PersonalBest {
    std::vector<double> position;
    Mask mask;
    double power = 0.0;
    CandidateEvaluator::Result evaluation;
};

struct Candidate {
    std::vector<double> position;
    std::vector<double> velocity;
    Mask mask;
    double power = 0.0;
    CandidateEvaluator::Result evaluation;
    PersonalBest best;
    /// Per-dimension velocity limit applied the last time this candidate moved.
    std::vector<double> velocity_bound;
};

struct Empire {
    std::size_t imperialist = 0;
    std::vector<std::size_t> colonies;
};

struct GlobalBest {
    std::size_t owner = 0; // candidate whose personal best this is
    std::vector<double> position;
    Mask mask;
    double power = 0.0;
    CandidateEvaluator::Result evaluation;
};

enum class SearchOperator : std::size_t { Glva = 0, Udvd = 1, Edels = 2 };

struct SearchConfig {
    std::size_t n_imp = 5;
    std::size_t n_col = 15;
    int max_iters = 100;
    std::size_t tw = 10;
    double alpha = 10.0;
    double var_min = 0.0;
    double var_max = 1.0;
    double velocity_limit = 12.0;
    double initial_probability = 0.5;
    std::uint64_t seed = 0;
    fuzzy::OutputRanges ranges;
    /// Debug switches; disabling an operator or the fuzzy controller is not
    /// part of the supported algorithm.
    std::array<bool, 3> operator_enabled{true, true, true};
    bool fuzzy_control = true;

    void validate() const;
};

struct SearchState {
    std::vector<Candidate> candidates;
    std::vector<Empire> empires;
    GlobalBest global_best;
    std::array<double, 3> probabilities{0.5, 0.5, 0.5}; // GLVA, UDVD, EDELs
    int t = 0;
    std::vector<double> window; // global-best power per iteration since the last FAOS update

    bool is_imperialist(std::size_t i) const;
    /// Empire index that owns candidate i.
    std::size_t empire_of(std::size_t i) const;
};

struct TraceEntry {
    int iter = 0;
    double best_power = 0.0;
    double z = 0.0;
    double rmse = 0.0;
    double std = 0.0;
    std::size_t n_f = 0;
    std::array<double, 3> probabilities{};
};

/// How candidate power is derived from evaluations. The single-objective
/// policy reads Evaluation::power; the multi-objective one ranks the
/// population.
class PowerPolicy {
public:
    virtual ~PowerPolicy() = default;
    /// Recomputes every candidate's power.
    virtual void refresh(std::vector<Candidate>& population) const = 0;
    /// Powers of (trial, population[base]) when the trial competes with the base.
    virtual std::pair<double, double> contest(const std::vector<Candidate>& population, std::size_t base,
                                              const Candidate& trial) const = 0;
};

class ScalarPowerPolicy final : public PowerPolicy {
public:
    void refresh(std::vector<Candidate>& population) const override;
    std::pair<double, double> contest(const std::vector<Candidate>& population, std::size_t base,
                                      const Candidate& trial) const override;
};

// ---- operator building blocks -------------------------------------------

/// AVLF: alpha * ((var_max - var_min) / var_max) * |global - position| / t,
/// capped at velocity_limit.
std::vector<double> avlf_bounds(std::span<const double> position, std::span<const double> global_best,
                                int t, double alpha, double var_min = 0.0, double var_max = 1.0,
                                double velocity_limit = 12.0);

/// |a - b| / global_best_power clamped to [0,1]; 0 when global_best_power <= 0.
double np_indicator(double a, double b, double global_best_power) noexcept;

double normalized_iteration(int t, int max_iters) noexcept;

/// 1 - (max - min) / max over the window; 1 when max <= 0.
double stagnation(std::span<const double> window);

/// Roulette weights 1 - (max - p_i) / sum_j(max - p_j); all ones when every
/// power is equal.
std::vector<double> roulette_weights(std::span<const double> powers);
std::size_t roulette_select(std::span<const double> weights, Rng& rng);

/// Top-n_imp by power lead; colonies join empires by roulette on imperialist
/// power, then empty empires take a colony from the largest one.
std::vector<Empire> form_empires(std::span<const double> powers, std::size_t n_imp, Rng& rng);

/// Clamps velocity into [-bound, bound], moves the position, and reflects at
/// the variable bounds (clamp position, negate that velocity component).
void move_with_bounds(std::vector<double>& position, std::vector<double>& velocity,
                      std::span<const double> bound, double var_min, double var_max);

/// Flips bit d with probability transfer(delta[d]); an emptied mask gets the
/// bit with the largest |delta| back.
Mask flip_mask(const Mask& mask, std::span<const double> delta, Rng& rng);

/// F_a (a - b) + F_b (leader - base) + F_c (base - worst).
std::vector<double> edels_mutant(std::array<double, 3> f, std::span<const double> a, std::span<const double> b,
                                 std::span<const double> leader, std::span<const double> base,
                                 std::span<const double> worst);

/// Binomial crossover: mutant where u <= rate or at one forced dimension,
/// else the base velocity.
std::vector<double> binomial_crossover(std::span<const double> mutant, std::span<const double> base_velocity,
                                       double rate, Rng& rng);

// ---- the search loop -----------------------------------------------------

class FaglsudSearch {
public:
    using Observer = std::function<void(const SearchState&, std::string_view phase)>;

    FaglsudSearch(SearchConfig config, CandidateEvaluator& evaluator,
                  std::shared_ptr<const PowerPolicy> policy = std::make_shared<ScalarPowerPolicy>());

    void set_observer(Observer obs) { observer_ = std::move(obs); }

    const SearchConfig& config() const noexcept { return config_; }
    const SearchState& state() const noexcept { return state_; }
    SearchState& mutable_state() noexcept { return state_; }
    const std::vector<TraceEntry>& trace() const noexcept { return trace_; }

    void initialize();
    void faglva_step();
    void faudvd_step();
    void faedels_step();
    /// Promotes any colony stronger than its imperialist.
    void swap_pass();
    /// FIS4 update of the three operator probabilities; clears the window.
    void faos_update();
    /// One full iteration (t is advanced first).
    void iterate();
    /// initialize() then max_iters iterations; `after_iteration` runs at the
    /// end of each one.
    void run(const std::function<void(const FaglsudSearch&)>& after_iteration = {});

    /// Re-evaluates powers, personal bests, and the global best.
    void refresh_bests();

private:
    struct Proposal {
        std::size_t index;
        std::vector<double> position;
        std::vector<double> velocity;
        std::vector<double> bound;
        Mask mask;
    };

    Rng stream(std::uint64_t op, std::uint64_t who) const;
    std::array<double, 4> glva_indicators(std::size_t i) const;
    std::vector<double> bound_for(std::size_t i) const;
    Proposal finish_move(std::size_t i, std::vector<double> velocity, Rng& rng) const;
    void commit(std::vector<Proposal>& proposals);
    void notify(std::string_view phase) const;
    TraceEntry trace_entry() const;

    SearchConfig config_;
    CandidateEvaluator& evaluator_;
    std::shared_ptr<const PowerPolicy> policy_;
    fuzzy::RuleBase fis1_;
    fuzzy::RuleBase fis2_;
    fuzzy::RuleBase fis3_;
    fuzzy::RuleBase fis4_;
    SearchState state_;
    std::vector<TraceEntry> trace_;
    Observer observer_;
};

struct SingleRunResult {
    GlobalBest best;
    std::vector<TraceEntry> trace;
};

SingleRunResult run_single(const SearchConfig& config, CandidateEvaluator& evaluator);

} // namespace fafs
