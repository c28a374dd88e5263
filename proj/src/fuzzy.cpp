#include "fafs/fuzzy.hpp"

#include "fafs/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace fafs::fuzzy {

const char* to_string(Term t) noexcept {
    switch (t) {
    case Term::Low: return "Low";
    case Term::Medium: return "Medium";
    case Term::High: return "High";
    }
    return "?";
}

const char* to_string(Predicate p) noexcept {
    switch (p) {
    case Predicate::Low: return "Low";
    case Predicate::Medium: return "Medium";
    case Predicate::High: return "High";
    case Predicate::LowOrMedium: return "LowOrMedium";
    case Predicate::Any: return "Any";
    }
    return "?";
}

double TriangularMf::operator()(double x) const noexcept {
    if (x < a || x > c) return 0.0;
    if (x == b) return 1.0;
    if (x < b) return (x - a) / (b - a);
    return (c - x) / (c - b);
}

LinguisticVariable LinguisticVariable::unit(std::string name) {
    return {std::move(name),
            {TriangularMf{0.0, 0.0, 0.5}, TriangularMf{0.0, 0.5, 1.0}, TriangularMf{0.5, 1.0, 1.0}}};
}

Degrees fuzzify(double value, const LinguisticVariable& variable) {
    const double x = std::clamp(value, 0.0, 1.0);
    Degrees d{};
    for (std::size_t k = 0; k < 3; ++k) d[k] = std::clamp(variable.terms[k](x), 0.0, 1.0);
    return d;
}

namespace {

double predicate_degree(Predicate p, const Degrees& d) {
    switch (p) {
    case Predicate::Low: return d[0];
    case Predicate::Medium: return d[1];
    case Predicate::High: return d[2];
    case Predicate::LowOrMedium: return std::max(d[0], d[1]);
    case Predicate::Any: return 1.0;
    }
    return 0.0;
}

double grid_x(std::size_t i) {
    return static_cast<double>(i) / static_cast<double>(kCentroidGridPoints - 1);
}

} // namespace

double evaluate_rule(const FuzzyRule& rule, const std::map<std::string, Degrees>& degrees) {
    double strength = 1.0;
    for (const auto& ante : rule.antecedents) {
        auto it = degrees.find(ante.variable);
        if (it == degrees.end())
            throw ConfigError("fuzzy rule references unknown input '" + ante.variable + "'");
        strength = std::min(strength, predicate_degree(ante.predicate, it->second));
    }
    return strength;
}

double grid_centroid(const std::vector<double>& samples) {
    double area = 0.0;
    double moment = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double w = (i == 0 || i + 1 == samples.size()) ? 0.5 : 1.0;
        area += w * samples[i];
        moment += w * samples[i] * grid_x(i);
    }
    if (area <= 0.0) return 0.5;
    return moment / area;
}

RuleBase::RuleBase(std::string name, std::vector<LinguisticVariable> inputs,
                   std::vector<OutputVariable> outputs, std::vector<FuzzyRule> rules)
    : name_(std::move(name)), inputs_(std::move(inputs)), outputs_(std::move(outputs)),
      rules_(std::move(rules)) {
    if (rules_.empty()) throw ConfigError(name_ + ": rule base has no rules");
    std::set<std::string> in_names;
    std::set<std::string> out_names;
    for (const auto& v : inputs_) in_names.insert(v.name);
    for (const auto& o : outputs_) {
        out_names.insert(o.variable.name);
        if (!(o.range_min <= o.range_max))
            throw ConfigError(name_ + ": output '" + o.variable.name + "' has an empty range");
    }
    for (std::size_t r = 0; r < rules_.size(); ++r) {
        const auto& rule = rules_[r];
        const std::string where = name_ + " rule " + std::to_string(r + 1);
        if (rule.consequents.empty()) throw ConfigError(where + " has no consequent");
        for (const auto& a : rule.antecedents)
            if (!in_names.count(a.variable))
                throw ConfigError(where + " references unknown input '" + a.variable + "'");
        for (const auto& c : rule.consequents)
            if (!out_names.count(c.variable))
                throw ConfigError(where + " references unknown output '" + c.variable + "'");
    }
}

std::vector<double> RuleBase::unit_centroids(const std::map<std::string, double>& inputs,
                                             std::vector<bool>& fired) const {
    std::map<std::string, Degrees> degrees;
    for (const auto& v : inputs_) {
        auto it = inputs.find(v.name);
        if (it == inputs.end()) throw ConfigError(name_ + ": missing input '" + v.name + "'");
        degrees.emplace(v.name, fuzzify(it->second, v));
    }

    // Strongest clip level per (output, term); clipping each term at the max
    // firing strength is the same union as clipping every rule separately.
    std::vector<std::array<double, 3>> clip(outputs_.size(), {0.0, 0.0, 0.0});
    std::map<std::string, std::size_t> out_index;
    for (std::size_t o = 0; o < outputs_.size(); ++o) out_index[outputs_[o].variable.name] = o;

    for (const auto& rule : rules_) {
        const double s = evaluate_rule(rule, degrees);
        if (s <= 0.0) continue;
        for (const auto& c : rule.consequents) {
            auto& level = clip[out_index.at(c.variable)][static_cast<std::size_t>(c.term)];
            level = std::max(level, s);
        }
    }

    std::vector<double> result(outputs_.size(), 0.5);
    fired.assign(outputs_.size(), false);
    std::vector<double> samples(kCentroidGridPoints);
    for (std::size_t o = 0; o < outputs_.size(); ++o) {
        const auto& levels = clip[o];
        if (levels[0] <= 0.0 && levels[1] <= 0.0 && levels[2] <= 0.0) continue;
        fired[o] = true;
        const auto& terms = outputs_[o].variable.terms;
        for (std::size_t i = 0; i < kCentroidGridPoints; ++i) {
            const double x = grid_x(i);
            double mu = 0.0;
            for (std::size_t k = 0; k < 3; ++k)
                if (levels[k] > 0.0) mu = std::max(mu, std::min(levels[k], terms[k](x)));
            samples[i] = mu;
        }
        result[o] = grid_centroid(samples);
    }
    return result;
}

std::map<std::string, double> RuleBase::infer_unit(const std::map<std::string, double>& inputs) const {
    std::vector<bool> fired;
    const auto unit = unit_centroids(inputs, fired);
    std::map<std::string, double> out;
    for (std::size_t o = 0; o < outputs_.size(); ++o) out[outputs_[o].variable.name] = unit[o];
    return out;
}

std::map<std::string, double> RuleBase::infer(const std::map<std::string, double>& inputs) const {
    std::vector<bool> fired;
    const auto unit = unit_centroids(inputs, fired);
    std::map<std::string, double> out;
    for (std::size_t o = 0; o < outputs_.size(); ++o) {
        const auto& ov = outputs_[o];
        out[ov.variable.name] = fired[o] ? ov.scale(unit[o]) : ov.midpoint();
    }
    return out;
}

std::string RuleBase::dump() const {
    std::ostringstream os;
    os << "# " << name_ << " (" << rules_.size() << " rules)\n";
    for (std::size_t r = 0; r < rules_.size(); ++r) {
        os << "R" << (r + 1) << ": ";
        const auto& rule = rules_[r];
        for (std::size_t i = 0; i < rule.antecedents.size(); ++i) {
            if (i) os << " & ";
            os << rule.antecedents[i].variable << '=' << to_string(rule.antecedents[i].predicate);
        }
        os << " -> ";
        for (std::size_t i = 0; i < rule.consequents.size(); ++i) {
            if (i) os << ", ";
            os << rule.consequents[i].variable << '=' << to_string(rule.consequents[i].term);
        }
        os << '\n';
    }
    return os.str();
}

} // namespace fafs::fuzzy
