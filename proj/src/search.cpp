#include "fafs/search.hpp"

#include "fafs/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace fafs {

namespace {

// Stream identifiers for derive_seed.
enum : std::uint64_t {
    kStreamInit = 1,
    kStreamEmpires,
    kStreamGlva,
    kStreamUdvd,
    kStreamEdels,
};

std::vector<std::size_t> sample_distinct(const std::vector<std::size_t>& pool, std::size_t k, Rng& rng) {
    std::vector<std::size_t> v = pool;
    for (std::size_t i = 0; i < k; ++i) std::swap(v[i], v[i + rng.index(v.size() - i)]);
    v.resize(k);
    return v;
}

std::size_t argmin_power(const std::vector<Candidate>& pop, const std::vector<std::size_t>& ids) {
    std::size_t best = ids.front();
    for (auto i : ids)
        if (pop[i].power < pop[best].power) best = i;
    return best;
}

} // namespace

// evaluated at |u| so TF(u) == TF(-u) holds bit for bit
double transfer(double u) noexcept { return 2.0 * std::abs(1.0 / (1.0 + std::exp(-8.0 * std::abs(u))) - 0.5); }

void SearchConfig::validate() const {
    if (n_imp < 1) throw ConfigError("need at least one imperialist");
    if (n_col < n_imp) throw ConfigError("need at least as many colonies as imperialists");
    if (max_iters < 1) throw ConfigError("max iterations must be >= 1");
    if (tw < 1) throw ConfigError("time window must be >= 1");
    if (!(alpha > 0.0)) throw ConfigError("AVLF alpha must be > 0");
    if (!(var_max > var_min) || var_max == 0.0) throw ConfigError("invalid position bounds");
    if (!(velocity_limit > 0.0)) throw ConfigError("velocity limit must be > 0");
    if (!(initial_probability >= 0.0 && initial_probability <= 1.0))
        throw ConfigError("initial operator probability must lie in [0, 1]");
}

bool SearchState::is_imperialist(std::size_t i) const {
    return std::any_of(empires.begin(), empires.end(), [i](const Empire& e) { return e.imperialist == i; });
}

std::size_t SearchState::empire_of(std::size_t i) const {
    for (std::size_t e = 0; e < empires.size(); ++e) {
        if (empires[e].imperialist == i) return e;
        const auto& c = empires[e].colonies;
        if (std::find(c.begin(), c.end(), i) != c.end()) return e;
    }
    throw PreconditionError("candidate " + std::to_string(i) + " belongs to no empire");
}

void ScalarPowerPolicy::refresh(std::vector<Candidate>& population) const {
    for (auto& c : population) c.power = c.evaluation->power;
}

std::pair<double, double> ScalarPowerPolicy::contest(const std::vector<Candidate>& population, std::size_t base,
                                                     const Candidate& trial) const {
    return {trial.evaluation->power, population[base].power};
}

std::vector<double> avlf_bounds(std::span<const double> position, std::span<const double> global_best, int t,
                                double alpha, double var_min, double var_max, double velocity_limit) {
    if (t < 1) throw PreconditionError("AVLF needs t >= 1");
    if (position.size() != global_best.size()) throw PreconditionError("AVLF dimension mismatch");
    const double factor = alpha * ((var_max - var_min) / var_max);
    std::vector<double> bound(position.size());
    for (std::size_t d = 0; d < bound.size(); ++d)
        bound[d] = std::min(velocity_limit, factor * std::abs(global_best[d] - position[d]) / t);
    return bound;
}

double np_indicator(double a, double b, double global_best_power) noexcept {
    if (!(global_best_power > 0.0)) return 0.0;
    return std::clamp(std::abs(a - b) / global_best_power, 0.0, 1.0);
}

double normalized_iteration(int t, int max_iters) noexcept {
    if (max_iters <= 0) return 1.0;
    return std::clamp(static_cast<double>(t) / max_iters, 0.0, 1.0);
}

double stagnation(std::span<const double> window) {
    if (window.empty()) throw PreconditionError("stagnation needs a non-empty window");
    const auto [lo, hi] = std::minmax_element(window.begin(), window.end());
    if (!(*hi > 0.0)) return 1.0;
    return 1.0 - (*hi - *lo) / *hi;
}

std::vector<double> roulette_weights(std::span<const double> powers) {
    if (powers.empty()) return {};
    const double top = *std::max_element(powers.begin(), powers.end());
    double total = 0.0;
    for (double p : powers) total += top - p;
    std::vector<double> w(powers.size(), 1.0);
    if (total > 0.0)
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = 1.0 - (top - powers[i]) / total;
    return w;
}

std::size_t roulette_select(std::span<const double> weights, Rng& rng) {
    if (weights.empty()) throw PreconditionError("roulette over an empty set");
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(total > 0.0)) return rng.index(weights.size());
    const double u = rng.uniform() * total;
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) continue;
        acc += weights[i];
        last_positive = i;
        if (u < acc) return i;
    }
    return last_positive;
}

std::vector<Empire> form_empires(std::span<const double> powers, std::size_t n_imp, Rng& rng) {
    if (n_imp < 1 || powers.size() < 2 * n_imp)
        throw PreconditionError("form_empires needs n_imp >= 1 and at least n_imp colonies");
    std::vector<std::size_t> order(powers.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return powers[a] > powers[b]; });

    std::vector<Empire> empires(n_imp);
    std::vector<double> imp_power(n_imp);
    for (std::size_t e = 0; e < n_imp; ++e) {
        empires[e].imperialist = order[e];
        imp_power[e] = powers[order[e]];
    }
    const auto weights = roulette_weights(imp_power);
    for (std::size_t k = n_imp; k < order.size(); ++k)
        empires[roulette_select(weights, rng)].colonies.push_back(order[k]);

    for (auto& empty : empires) {
        if (!empty.colonies.empty()) continue;
        auto donor = std::max_element(empires.begin(), empires.end(), [](const Empire& a, const Empire& b) {
            return a.colonies.size() < b.colonies.size();
        });
        empty.colonies.push_back(donor->colonies.back());
        donor->colonies.pop_back();
    }
    return empires;
}

void move_with_bounds(std::vector<double>& position, std::vector<double>& velocity, std::span<const double> bound,
                      double var_min, double var_max) {
    for (std::size_t d = 0; d < position.size(); ++d) {
        double& v = velocity[d];
        v = std::clamp(v, -bound[d], bound[d]);
        double& p = position[d];
        p += v;
        if (p > var_max) {
            p = var_max;
            v = -v;
        } else if (p < var_min) {
            p = var_min;
            v = -v;
        }
    }
}

Mask flip_mask(const Mask& mask, std::span<const double> delta, Rng& rng) {
    Mask out = mask;
    for (std::size_t d = 0; d < out.size(); ++d)
        if (rng.uniform() < transfer(delta[d])) out[d] = out[d] ? 0 : 1;
    if (count_selected(out) == 0) {
        std::size_t pick = 0;
        for (std::size_t d = 1; d < delta.size(); ++d)
            if (std::abs(delta[d]) > std::abs(delta[pick])) pick = d;
        out[pick] = 1;
    }
    return out;
}

std::vector<double> edels_mutant(std::array<double, 3> f, std::span<const double> a, std::span<const double> b,
                                 std::span<const double> leader, std::span<const double> base,
                                 std::span<const double> worst) {
    std::vector<double> m(base.size());
    for (std::size_t d = 0; d < m.size(); ++d)
        m[d] = f[0] * (a[d] - b[d]) + f[1] * (leader[d] - base[d]) + f[2] * (base[d] - worst[d]);
    return m;
}

std::vector<double> binomial_crossover(std::span<const double> mutant, std::span<const double> base_velocity,
                                       double rate, Rng& rng) {
    const std::size_t forced = rng.index(mutant.size());
    std::vector<double> trial(mutant.size());
    for (std::size_t d = 0; d < trial.size(); ++d) {
        const double u = rng.uniform();
        trial[d] = (u <= rate || d == forced) ? mutant[d] : base_velocity[d];
    }
    return trial;
}

// ---- FaglsudSearch ---------------------------------------------------------

FaglsudSearch::FaglsudSearch(SearchConfig config, CandidateEvaluator& evaluator,
                             std::shared_ptr<const PowerPolicy> policy)
    : config_(std::move(config)), evaluator_(evaluator), policy_(std::move(policy)),
      fis1_(fuzzy::build_fis1(config_.ranges)), fis2_(fuzzy::build_fis2(config_.ranges)),
      fis3_(fuzzy::build_fis3(config_.ranges)), fis4_(fuzzy::build_fis4()) {
    config_.validate();
}

Rng FaglsudSearch::stream(std::uint64_t op, std::uint64_t who) const {
    return Rng(derive_seed({config_.seed, static_cast<std::uint64_t>(state_.t), op, who}));
}

void FaglsudSearch::notify(std::string_view phase) const {
    if (observer_) observer_(state_, phase);
}

void FaglsudSearch::initialize() {
    const std::size_t n = config_.n_imp + config_.n_col;
    const std::size_t dim = evaluator_.dimension();
    const double threshold = config_.var_min + 0.5 * (config_.var_max - config_.var_min);
    state_ = SearchState{};
    trace_.clear();
    state_.candidates.resize(n);
    std::vector<Mask> masks;
    for (std::size_t i = 0; i < n; ++i) {
        Rng rng = stream(kStreamInit, i);
        Candidate& c = state_.candidates[i];
        c.position.resize(dim);
        c.mask.assign(dim, 0);
        for (std::size_t d = 0; d < dim; ++d) {
            c.position[d] = rng.uniform(config_.var_min, config_.var_max);
            c.mask[d] = c.position[d] >= threshold ? 1 : 0;
        }
        if (count_selected(c.mask) == 0) c.mask[rng.index(dim)] = 1;
        c.velocity.assign(dim, 0.0);
        c.velocity_bound.assign(dim, 0.0);
        masks.push_back(c.mask);
    }
    const auto evals = evaluator_.evaluate(masks);
    for (std::size_t i = 0; i < n; ++i) state_.candidates[i].evaluation = evals[i];
    policy_->refresh(state_.candidates);
    for (auto& c : state_.candidates) c.best = {c.position, c.mask, c.power, c.evaluation};

    std::vector<double> powers;
    for (const auto& c : state_.candidates) powers.push_back(c.power);
    Rng rng = stream(kStreamEmpires, 0);
    state_.empires = form_empires(powers, config_.n_imp, rng);

    state_.global_best.power = -INFINITY;
    refresh_bests();
    state_.probabilities.fill(config_.initial_probability);
    notify("initialize");
}

void FaglsudSearch::refresh_bests() {
    policy_->refresh(state_.candidates);
    std::size_t owner = 0;
    for (std::size_t i = 0; i < state_.candidates.size(); ++i) {
        Candidate& c = state_.candidates[i];
        if (c.power > c.best.power) c.best = {c.position, c.mask, c.power, c.evaluation};
        if (c.best.power > state_.candidates[owner].best.power) owner = i;
    }
    const auto& pb = state_.candidates[owner].best;
    if (pb.power > state_.global_best.power || owner == state_.global_best.owner)
        state_.global_best = {owner, pb.position, pb.mask, pb.power, pb.evaluation};
}

std::array<double, 4> FaglsudSearch::glva_indicators(std::size_t i) const {
    const auto& pop = state_.candidates;
    const double pg = state_.global_best.power;
    const Empire& emp = state_.empires[state_.empire_of(i)];
    const Candidate& imp = pop[emp.imperialist];
    const double np3 = np_indicator(pg, imp.power, pg);
    const double np4 = np_indicator(imp.best.power, imp.power, pg);
    if (emp.imperialist != i) {
        const Candidate& col = pop[i];
        return {np_indicator(imp.power, col.power, pg), np_indicator(col.best.power, col.power, pg), np3, np4};
    }
    double np1 = 0.0, np2 = 0.0;
    for (auto c : emp.colonies) {
        np1 += np_indicator(imp.power, pop[c].power, pg);
        np2 += np_indicator(pop[c].best.power, pop[c].power, pg);
    }
    if (!emp.colonies.empty()) {
        np1 /= static_cast<double>(emp.colonies.size());
        np2 /= static_cast<double>(emp.colonies.size());
    }
    return {np1, np2, np3, np4};
}

std::vector<double> FaglsudSearch::bound_for(std::size_t i) const {
    return avlf_bounds(state_.candidates[i].position, state_.global_best.position, std::max(1, state_.t),
                       config_.alpha, config_.var_min, config_.var_max, config_.velocity_limit);
}

FaglsudSearch::Proposal FaglsudSearch::finish_move(std::size_t i, std::vector<double> velocity, Rng& rng) const {
    const Candidate& c = state_.candidates[i];
    Proposal p{i, c.position, std::move(velocity), bound_for(i), {}};
    move_with_bounds(p.position, p.velocity, p.bound, config_.var_min, config_.var_max);
    p.mask = flip_mask(c.mask, p.velocity, rng);
    return p;
}

void FaglsudSearch::commit(std::vector<Proposal>& proposals) {
    std::vector<Mask> masks;
    for (const auto& p : proposals) masks.push_back(p.mask);
    const auto evals = evaluator_.evaluate(masks);
    for (std::size_t k = 0; k < proposals.size(); ++k) {
        Candidate& c = state_.candidates[proposals[k].index];
        c.position = std::move(proposals[k].position);
        c.velocity = std::move(proposals[k].velocity);
        c.velocity_bound = std::move(proposals[k].bound);
        c.mask = std::move(proposals[k].mask);
        c.evaluation = evals[k];
    }
    refresh_bests();
}

namespace {

std::map<std::string, double> indicator_inputs(const std::array<double, 4>& np, double nit,
                                               std::array<const char*, 4> names) {
    return {{names[0], np[0]}, {names[1], np[1]}, {names[2], np[2]}, {names[3], np[3]}, {"NIT", nit}};
}

double fixed_or(const std::map<std::string, double>& out, const std::string& key, const fuzzy::RuleBase& fis,
                bool fuzzy_control) {
    if (fuzzy_control) return out.at(key);
    for (const auto& o : fis.outputs())
        if (o.variable.name == key) return o.midpoint();
    return 0.0;
}

} // namespace

void FaglsudSearch::faglva_step() {
    if (!config_.operator_enabled[0]) return;
    const double nit = normalized_iteration(state_.t, config_.max_iters);
    const auto& pop = state_.candidates;
    const std::size_t dim = evaluator_.dimension();
    std::vector<Proposal> proposals;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        Rng rng = stream(kStreamGlva, i);
        if (rng.uniform() > state_.probabilities[0]) continue;
        const bool colony = !state_.is_imperialist(i);
        std::map<std::string, double> out;
        if (config_.fuzzy_control)
            out = fis1_.infer(indicator_inputs(glva_indicators(i), nit, {"NP1", "NP2", "NP3", "NP4"}));
        const double social = fixed_or(out, colony ? "beta1" : "beta2", fis1_, config_.fuzzy_control);
        const double cognitive = fixed_or(out, colony ? "c1" : "c2", fis1_, config_.fuzzy_control);
        const auto& leader = colony ? pop[state_.empires[state_.empire_of(i)].imperialist].position
                                    : state_.global_best.position;
        const Candidate& c = pop[i];
        std::vector<double> v(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            const double r1 = rng.uniform();
            const double r2 = rng.uniform();
            v[d] = social * r1 * (leader[d] - c.position[d]) + cognitive * r2 * (c.best.position[d] - c.position[d]);
        }
        proposals.push_back(finish_move(i, std::move(v), rng));
    }
    commit(proposals);
    notify("faglva");
}

void FaglsudSearch::faudvd_step() {
    if (!config_.operator_enabled[1]) return;
    const double nit = normalized_iteration(state_.t, config_.max_iters);
    const auto& pop = state_.candidates;
    const std::size_t dim = evaluator_.dimension();
    std::vector<std::size_t> imperialists;
    for (const auto& e : state_.empires) imperialists.push_back(e.imperialist);

    std::vector<Proposal> proposals;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        Rng rng = stream(kStreamUdvd, i);
        if (rng.uniform() > state_.probabilities[1]) continue;

        std::string weight_name;
        std::vector<std::size_t> donors;
        if (i == state_.global_best.owner) {
            weight_name = "w3";
            for (auto k : imperialists)
                if (k != i) donors.push_back(k);
        } else if (state_.is_imperialist(i)) {
            weight_name = "w2";
            for (auto k : imperialists)
                if (k != i) donors.push_back(k);
        } else {
            weight_name = "w1";
            for (auto l : state_.empires[state_.empire_of(i)].colonies)
                if (l != i) donors.push_back(l);
        }
        if (donors.empty()) continue;

        std::vector<double> donor_power;
        for (auto k : donors) donor_power.push_back(pop[k].power);
        const std::size_t donor = donors[roulette_select(roulette_weights(donor_power), rng)];

        std::map<std::string, double> out;
        if (config_.fuzzy_control)
            out = fis2_.infer(indicator_inputs(glva_indicators(i), nit, {"NP1", "NP2", "NP3", "NP4"}));
        const double omega = fixed_or(out, weight_name, fis2_, config_.fuzzy_control);

        const Candidate& c = pop[i];
        const auto& target = pop[donor].best.position;
        std::vector<double> v(dim);
        for (std::size_t d = 0; d < dim; ++d)
            v[d] = omega * (c.velocity[d] + rng.uniform() * (target[d] - c.position[d]));
        proposals.push_back(finish_move(i, std::move(v), rng));
    }
    commit(proposals);
    notify("faudvd");
}

void FaglsudSearch::faedels_step() {
    if (!config_.operator_enabled[2]) return;
    const double nit = normalized_iteration(state_.t, config_.max_iters);
    const double pg = state_.global_best.power;
    const double rate = state_.probabilities[2];
    auto& pop = state_.candidates;

    std::vector<std::size_t> imperialists;
    for (const auto& e : state_.empires) imperialists.push_back(e.imperialist);
    const std::size_t worst_imp = argmin_power(pop, imperialists);
    std::vector<std::size_t> imp_pool;
    for (auto k : imperialists)
        if (k != worst_imp) imp_pool.push_back(k);

    struct Trial {
        std::size_t base;
        Proposal move;
    };
    std::vector<Trial> trials;

    for (std::size_t e = 0; e < state_.empires.size(); ++e) {
        Rng rng = stream(kStreamEdels, e);
        if (rng.uniform() > rate) continue;
        const Empire& emp = state_.empires[e];

        const std::size_t worst_col = argmin_power(pop, emp.colonies);
        std::vector<std::size_t> col_pool;
        for (auto c : emp.colonies)
            if (c != worst_col) col_pool.push_back(c);
        const bool colony_branch = col_pool.size() >= 3;
        const bool imperial_branch = imp_pool.size() >= 3;
        if (!colony_branch && !imperial_branch) continue;

        std::vector<std::size_t> cr, ir;
        if (colony_branch) cr = sample_distinct(col_pool, 3, rng);
        if (imperial_branch) ir = sample_distinct(imp_pool, 3, rng);

        std::array<double, 4> np{0.0, 0.0, 0.0, 0.0};
        if (colony_branch) {
            np[0] = np_indicator(pop[emp.imperialist].power, pop[cr[2]].power, pg);
            np[1] = np_indicator(pop[cr[2]].power, pop[worst_col].power, pg);
        }
        if (imperial_branch) {
            np[2] = np_indicator(pg, pop[ir[2]].power, pg);
            np[3] = np_indicator(pop[ir[2]].power, pop[worst_imp].power, pg);
        }
        std::map<std::string, double> out;
        if (config_.fuzzy_control) out = fis3_.infer(indicator_inputs(np, nit, {"NP5", "NP6", "NP7", "NP8"}));
        auto f = [&](const char* name) { return fixed_or(out, name, fis3_, config_.fuzzy_control); };

        auto make_trial = [&](std::size_t base, std::vector<double> mutant) {
            auto velocity = binomial_crossover(mutant, pop[base].velocity, rate, rng);
            Proposal p{base, pop[base].position, std::move(velocity), bound_for(base), {}};
            move_with_bounds(p.position, p.velocity, p.bound, config_.var_min, config_.var_max);
            std::vector<double> delta(p.position.size());
            for (std::size_t d = 0; d < delta.size(); ++d) delta[d] = p.position[d] - pop[base].position[d];
            p.mask = flip_mask(pop[base].mask, delta, rng);
            trials.push_back({base, std::move(p)});
        };

        if (colony_branch)
            make_trial(cr[2], edels_mutant({f("F1"), f("F2"), f("F3")}, pop[cr[0]].position, pop[cr[1]].position,
                                           pop[emp.imperialist].position, pop[cr[2]].position,
                                           pop[worst_col].position));
        if (imperial_branch)
            make_trial(ir[2], edels_mutant({f("F4"), f("F5"), f("F6")}, pop[ir[0]].position, pop[ir[1]].position,
                                           state_.global_best.position, pop[ir[2]].position,
                                           pop[worst_imp].position));
    }

    if (!trials.empty()) {
        std::vector<Mask> masks;
        for (const auto& t : trials) masks.push_back(t.move.mask);
        const auto evals = evaluator_.evaluate(masks);
        for (std::size_t k = 0; k < trials.size(); ++k) {
            Candidate trial;
            trial.position = trials[k].move.position;
            trial.velocity = trials[k].move.velocity;
            trial.velocity_bound = trials[k].move.bound;
            trial.mask = trials[k].move.mask;
            trial.evaluation = evals[k];
            const std::size_t base = trials[k].base;
            const auto [trial_power, base_power] = policy_->contest(pop, base, trial);
            if (trial_power > base_power) {
                Candidate& c = pop[base];
                c.position = std::move(trial.position);
                c.velocity = std::move(trial.velocity);
                c.velocity_bound = std::move(trial.velocity_bound);
                c.mask = std::move(trial.mask);
                c.evaluation = trial.evaluation;
                policy_->refresh(pop);
            }
        }
    }
    refresh_bests();
    notify("faedels");
}

void FaglsudSearch::swap_pass() {
    const auto& pop = state_.candidates;
    for (auto& emp : state_.empires) {
        if (emp.colonies.empty()) continue;
        auto best = std::max_element(emp.colonies.begin(), emp.colonies.end(),
                                     [&](auto a, auto b) { return pop[a].power < pop[b].power; });
        if (pop[*best].power > pop[emp.imperialist].power) std::swap(*best, emp.imperialist);
    }
    notify("swap");
}

void FaglsudSearch::faos_update() {
    if (config_.fuzzy_control && !state_.window.empty()) {
        const auto& p = state_.probabilities;
        const auto out = fis4_.infer({{"Stagnation", stagnation(state_.window)},
                                      {"PFAGLVA", p[0]},
                                      {"PFAUDVD", p[1]},
                                      {"PFAEDELs", p[2]},
                                      {"NIT", normalized_iteration(state_.t, config_.max_iters)}});
        state_.probabilities = {std::clamp(out.at("PFAGLVA"), 0.0, 1.0), std::clamp(out.at("PFAUDVD"), 0.0, 1.0),
                                std::clamp(out.at("PFAEDELs"), 0.0, 1.0)};
    }
    state_.window.clear();
    notify("faos");
}

TraceEntry FaglsudSearch::trace_entry() const {
    const auto& gb = state_.global_best;
    TraceEntry e;
    e.iter = state_.t;
    e.best_power = gb.power;
    e.z = gb.evaluation->z;
    e.rmse = gb.evaluation->metrics.rmse;
    e.std = gb.evaluation->metrics.std;
    e.n_f = gb.evaluation->objectives.n_f;
    e.probabilities = state_.probabilities;
    return e;
}

void FaglsudSearch::iterate() {
    ++state_.t;
    faglva_step();
    faudvd_step();
    faedels_step();
    swap_pass();
    state_.window.push_back(state_.global_best.power);
    trace_.push_back(trace_entry());
    if (state_.window.size() >= config_.tw) faos_update();
}

void FaglsudSearch::run(const std::function<void(const FaglsudSearch&)>& after_iteration) {
    initialize();
    for (int t = 0; t < config_.max_iters; ++t) {
        iterate();
        if (after_iteration) after_iteration(*this);
    }
}

SingleRunResult run_single(const SearchConfig& config, CandidateEvaluator& evaluator) {
    FaglsudSearch search(config, evaluator);
    search.run();
    return {search.state().global_best, search.trace()};
}

} // namespace fafs
