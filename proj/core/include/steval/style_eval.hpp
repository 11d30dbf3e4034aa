#ifndef STEVAL_STYLE_EVAL_HPP
#define STEVAL_STYLE_EVAL_HPP

#include <vector>

#include "steval/linear_model.hpp"
#include "steval/transport.hpp"
#include "steval/types.hpp"

namespace steval {

struct StyleDistribution {
    std::vector<double> probs;
    std::vector<std::string> style_names;

    int size() const { return static_cast<int>(probs.size()); }
};

struct StiScore {
    double value = 0.0;  // in [-1, 1] under unit ground distance
};

struct CorpusSti {
    double mean = 0.0;
    std::vector<StiScore> per_pair;
};

StyleDistribution score_style(const LinearModel& model, const TokenText& text);

// EMD between the two distributions under unit ground distance, negated
// when the target class's probability mass strictly decreases.
StiScore sti(const StyleDistribution& sc_x, const StyleDistribution& sc_xp,
             const StyleLabel& target);

CorpusSti corpus_sti(const std::vector<TransferPair>& pairs, const LinearModel& model);

// Prior-work baseline: fraction of outputs whose argmax class is the
// target style. Argmax ties break toward the lowest class id.
double target_style_rate(const std::vector<TransferPair>& pairs, const LinearModel& model);

// Externally computed style distributions: CSV "pair_id,p_0,...,p_{S-1}".
std::vector<StyleDistribution> load_style_distributions(const std::string& path);

}  // namespace steval

#endif
