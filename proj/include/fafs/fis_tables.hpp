#pragma once

#include "fafs/fuzzy.hpp"

namespace fafs::fuzzy {

/// Output ranges the unit-universe centroids are scaled to.
struct OutputRanges {
    double learning_min = 0.0; // beta1, c1, beta2, c2
    double learning_max = 2.0;
    double inertia_min = 0.1;  // w1, w2, w3
    double inertia_max = 0.9;
    double scale_min = 0.0;    // F1..F6
    double scale_max = 2.0;
};

/// Velocity-adaptation rules. Inputs NP1..NP4, NIT; outputs beta1, c1, beta2, c2.
RuleBase build_fis1(const OutputRanges& ranges = {});

/// Diversity-divergence rules. Inputs NP1..NP4, NIT; outputs w1, w2, w3.
RuleBase build_fis2(const OutputRanges& ranges = {});

/// DE local-search rules. Inputs NP5..NP8, NIT; outputs F1..F6.
RuleBase build_fis3(const OutputRanges& ranges = {});

/// Operator-selection rules. Inputs Stagnation, PFAGLVA, PFAUDVD, PFAEDELs,
/// NIT; outputs PFAGLVA, PFAUDVD, PFAEDELs in [0,1].
RuleBase build_fis4();

} // namespace fafs::fuzzy
