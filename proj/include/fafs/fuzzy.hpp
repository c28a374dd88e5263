#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace fafs::fuzzy {

enum class Term { Low = 0, Medium = 1, High = 2 };

/// Antecedent test on one input variable.
enum class Predicate { Low, Medium, High, LowOrMedium, Any };

const char* to_string(Term t) noexcept;
const char* to_string(Predicate p) noexcept;

/// Triangle with feet at a, c and peak at b. Degenerate sides (a == b or
/// b == c) act as shoulders, so tri(0,0,0.5) is 1 at x = 0.
struct TriangularMf {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    double operator()(double x) const noexcept;
};

using Degrees = std::array<double, 3>; // indexed by Term

struct LinguisticVariable {
    std::string name;
    std::array<TriangularMf, 3> terms; // Low, Medium, High

    /// Standard Low/Medium/High partition of the unit universe.
    static LinguisticVariable unit(std::string name);
};

/// Clamps `value` to [0,1] and returns the per-term membership degrees.
Degrees fuzzify(double value, const LinguisticVariable& variable);

struct OutputVariable {
    LinguisticVariable variable;
    double range_min = 0.0;
    double range_max = 1.0;

    double scale(double unit_value) const noexcept {
        return range_min + (range_max - range_min) * unit_value;
    }
    double midpoint() const noexcept { return 0.5 * (range_min + range_max); }
};

struct Antecedent {
    std::string variable;
    Predicate predicate = Predicate::Any;
};

struct Consequent {
    std::string variable;
    Term term = Term::Medium;
};

struct FuzzyRule {
    std::vector<Antecedent> antecedents;
    std::vector<Consequent> consequents;
};

/// Mamdani firing strength: min over antecedents. LowOrMedium is
/// max(Low, Medium), Any is 1. Throws ConfigError when an antecedent names a
/// variable missing from `degrees`.
double evaluate_rule(const FuzzyRule& rule, const std::map<std::string, Degrees>& degrees);

/// Centroid of max-aggregated clipped consequents on a uniform grid over [0,1].
inline constexpr std::size_t kCentroidGridPoints = 1001;

class RuleBase {
public:
    RuleBase(std::string name, std::vector<LinguisticVariable> inputs,
             std::vector<OutputVariable> outputs, std::vector<FuzzyRule> rules);

    const std::string& name() const noexcept { return name_; }
    const std::vector<LinguisticVariable>& inputs() const noexcept { return inputs_; }
    const std::vector<OutputVariable>& outputs() const noexcept { return outputs_; }
    const std::vector<FuzzyRule>& rules() const noexcept { return rules_; }

    /// Crisp outputs keyed by output name, scaled to each output's range.
    /// An output no rule fires for is set to its range midpoint.
    std::map<std::string, double> infer(const std::map<std::string, double>& inputs) const;

    /// Same as infer() but returns unit-universe centroids (before scaling);
    /// an output no rule fires for is 0.5.
    std::map<std::string, double> infer_unit(const std::map<std::string, double>& inputs) const;

    /// One line per rule: "R1: NP1=Low & ... -> beta1=Low, ...".
    std::string dump() const;

private:
    std::vector<double> unit_centroids(const std::map<std::string, double>& inputs,
                                       std::vector<bool>& fired) const;

    std::string name_;
    std::vector<LinguisticVariable> inputs_;
    std::vector<OutputVariable> outputs_;
    std::vector<FuzzyRule> rules_;
};

/// Centroid of a membership curve sampled on the unit grid (trapezoid rule).
/// Returns 0.5 when the curve has no area.
double grid_centroid(const std::vector<double>& samples);

} // namespace fafs::fuzzy
