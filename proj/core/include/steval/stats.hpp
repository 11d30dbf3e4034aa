#ifndef STEVAL_STATS_HPP
#define STEVAL_STATS_HPP

#include <vector>

#include "steval/corpus.hpp"
#include "steval/types.hpp"

namespace steval {

struct KappaResult {
    double kappa = 0.0;
    std::vector<double> category_proportions;
    bool degenerate = false;  // every rating fell in one category
};

// Fleiss' kappa over a complete items x raters table of categorical values.
KappaResult fleiss_kappa(const RatingsTable& ratings);

// Binary labels from 1-5 absolute scores: natural iff score >= tau.
std::vector<bool> bin_absolute(const std::vector<int>& scores, int tau);

struct CorrelationResult {
    double r = 0.0;
    double halfwidth = 0.0;  // half of the central 95% bootstrap interval
    int n = 0;
};

CorrelationResult pearson(const std::vector<double>& a, const std::vector<double>& b,
                          bool absolute = false, int bootstrap_n = 1000,
                          unsigned seed = 17);

// Per-item mean across raters.
std::vector<double> average_raters(const RatingsTable& ratings);

}  // namespace steval

#endif
