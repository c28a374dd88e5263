#include "fafs/fis_tables.hpp"

#include <string_view>

namespace fafs::fuzzy {

namespace {

// Row encoding: antecedent chars L, M, H, o (Low or Medium), * (Any);
// consequent chars L, M, H.
struct Row {
    std::string_view ifs;
    std::string_view thens;
};

Predicate predicate_of(char c) {
    switch (c) {
    case 'L': return Predicate::Low;
    case 'M': return Predicate::Medium;
    case 'H': return Predicate::High;
    case 'o': return Predicate::LowOrMedium;
    default: return Predicate::Any;
    }
}

Term term_of(char c) {
    switch (c) {
    case 'L': return Term::Low;
    case 'H': return Term::High;
    default: return Term::Medium;
    }
}

std::vector<FuzzyRule> make_rules(const std::vector<std::string>& in_names,
                                  const std::vector<std::string>& out_names,
                                  std::initializer_list<Row> rows) {
    std::vector<FuzzyRule> rules;
    rules.reserve(rows.size());
    for (const auto& row : rows) {
        FuzzyRule rule;
        for (std::size_t i = 0; i < in_names.size(); ++i)
            rule.antecedents.push_back({in_names[i], predicate_of(row.ifs[i])});
        for (std::size_t i = 0; i < out_names.size(); ++i)
            rule.consequents.push_back({out_names[i], term_of(row.thens[i])});
        rules.push_back(std::move(rule));
    }
    return rules;
}

std::vector<LinguisticVariable> unit_inputs(const std::vector<std::string>& names) {
    std::vector<LinguisticVariable> v;
    for (const auto& n : names) v.push_back(LinguisticVariable::unit(n));
    return v;
}

std::vector<OutputVariable> unit_outputs(const std::vector<std::string>& names, double lo, double hi) {
    std::vector<OutputVariable> v;
    for (const auto& n : names) v.push_back({LinguisticVariable::unit(n), lo, hi});
    return v;
}

} // namespace

RuleBase build_fis1(const OutputRanges& ranges) {
    const std::vector<std::string> in{"NP1", "NP2", "NP3", "NP4", "NIT"};
    const std::vector<std::string> out{"beta1", "c1", "beta2", "c2"};
    auto rules = make_rules(in, out,
                            {
                                {"LLLLo", "LLLL"}, {"LLLHo", "LLLH"}, {"LLHLo", "LLHL"},
                                {"LLHHo", "LLHH"}, {"LHLLo", "LHLL"}, {"LHLHo", "LHLH"},
                                {"LHHLo", "LHHL"}, {"LHHHo", "LHHH"}, {"HLLLo", "HLLL"},
                                {"HLLHo", "HLLH"}, {"HLHLo", "HLHL"}, {"HLHHo", "HLHH"},
                                {"HHLLo", "HHLL"}, {"HHLHo", "HHLH"}, {"HHHLo", "HHHL"},
                                {"HHHHo", "HHHH"}, {"MMMMo", "MMMM"}, {"****H", "LHLH"},
                            });
    return RuleBase("FIS1", unit_inputs(in),
                    unit_outputs(out, ranges.learning_min, ranges.learning_max), std::move(rules));
}

RuleBase build_fis2(const OutputRanges& ranges) {
    const std::vector<std::string> in{"NP1", "NP2", "NP3", "NP4", "NIT"};
    const std::vector<std::string> out{"w1", "w2", "w3"};
    auto rules = make_rules(in, out,
                            {
                                {"LLLLo", "LLL"}, {"LLLHo", "LLL"}, {"LLHLo", "LHL"},
                                {"LLHHo", "LHL"}, {"LHLLo", "LLL"}, {"LHLHo", "LLL"},
                                {"LHHLo", "LHL"}, {"LHHHo", "LHL"}, {"HLLLo", "HLL"},
                                {"HLLHo", "HLL"}, {"HLHLo", "HHL"}, {"HLHHo", "HHL"},
                                {"HHLLo", "HLL"}, {"HHLHo", "HLL"}, {"HHHLo", "HHL"},
                                {"HHHHo", "HHH"}, {"MMMMo", "MMM"}, {"****H", "LLL"},
                            });
    return RuleBase("FIS2", unit_inputs(in),
                    unit_outputs(out, ranges.inertia_min, ranges.inertia_max), std::move(rules));
}

RuleBase build_fis3(const OutputRanges& ranges) {
    const std::vector<std::string> in{"NP5", "NP6", "NP7", "NP8", "NIT"};
    const std::vector<std::string> out{"F1", "F2", "F3", "F4", "F5", "F6"};
    auto rules = make_rules(in, out,
                            {
                                {"LLLLo", "HHLHHL"}, {"LLLHo", "HHLLHL"}, {"LLHLo", "HHLHLL"},
                                {"LLHHo", "HHLHLH"}, {"LHLLo", "LHHHHL"}, {"LHLHo", "LHHLHH"},
                                {"LHHLo", "LHHHLL"}, {"LHHHo", "LHHHLH"}, {"HLLLo", "HLLHHL"},
                                {"HLLHo", "HLLLHH"}, {"HLHLo", "LHHLHH"}, {"HLHHo", "HLLHLH"},
                                {"HHLLo", "HLHHHL"}, {"HHLHo", "HLHLHH"}, {"HHHLo", "HLHHLL"},
                                {"HHHHo", "HLHHLH"}, {"MMMMo", "MMMMMM"}, {"****H", "LHLLHL"},
                            });
    return RuleBase("FIS3", unit_inputs(in),
                    unit_outputs(out, ranges.scale_min, ranges.scale_max), std::move(rules));
}

RuleBase build_fis4() {
    const std::vector<std::string> in{"Stagnation", "PFAGLVA", "PFAUDVD", "PFAEDELs", "NIT"};
    const std::vector<std::string> out{"PFAGLVA", "PFAUDVD", "PFAEDELs"};
    auto rules = make_rules(in, out,
                            {
                                // low stagnation, early: keep operators as they are
                                {"LLLLL", "LLL"}, {"LLLHL", "LLH"}, {"LLHLL", "LHL"},
                                {"LLHHL", "LHH"}, {"LHLLL", "HLL"}, {"LHLHL", "HLH"},
                                {"LHHLL", "HHL"}, {"LHHHL", "HHH"},
                                // high stagnation, early: invert
                                {"HLLLL", "HHH"}, {"HLLHL", "HHL"}, {"HLHLL", "HLH"},
                                {"HLHHL", "HLL"}, {"HHLLL", "LHH"}, {"HHLHL", "LHL"},
                                {"HHHLL", "LLH"}, {"HHHHL", "LLL"},
                                {"MMMMM", "MMM"},
                                // low stagnation, late: invert
                                {"LLLLH", "HHH"}, {"LLLHH", "HHL"}, {"LLHLH", "HLH"},
                                {"LLHHH", "HLL"}, {"LHLLH", "LHH"}, {"LHLHH", "LHL"},
                                {"LHHLH", "LLH"}, {"LHHHH", "LLL"},
                                // high stagnation, late: keep
                                {"HLLLH", "LLL"}, {"HLLHH", "LLH"}, {"HLHLH", "LHL"},
                                {"HLHHH", "LHH"}, {"HHLLH", "HLL"}, {"HHLHH", "HLH"},
                                {"HHHLH", "HHL"}, {"HHHHH", "HHH"},
                            });
    return RuleBase("FIS4", unit_inputs(in), unit_outputs(out, 0.0, 1.0), std::move(rules));
}

} // namespace fafs::fuzzy
