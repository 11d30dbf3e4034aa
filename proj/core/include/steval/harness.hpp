#ifndef STEVAL_HARNESS_HPP
#define STEVAL_HARNESS_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "steval/content.hpp"
#include "steval/lexicon.hpp"
#include "steval/linear_model.hpp"
#include "steval/types.hpp"

namespace steval {

// Synthetic stand-in for a style transfer model: flips style words to
// sampled words of the opposite style with probability p.
class FlipModel {
public:
    FlipModel(const StyleLexicon& lexicon, double flip_probability, unsigned seed);

    double flip_probability() const { return p_; }
    unsigned seed() const { return seed_; }
    const std::unordered_map<std::string, std::string>& substitutions() const {
        return substitution_;
    }

    // Each pair's target style is the opposite of the text's label.
    std::vector<TransferPair> synthesize(const LabeledCorpus& corpus) const;

private:
    const StyleLexicon& lexicon_;
    double p_;
    unsigned seed_;
    std::unordered_map<std::string, std::string> substitution_;
};

struct TradeoffPoint {
    std::string label;
    double sti_mean = 0.0;
    double cp_mean = 0.0;  // mean normalized-inverse WMD on masked texts
    double nt_rate = 0.0;  // output-more-natural rate
};

struct TradeoffRun {
    std::string label;
    std::vector<TransferPair> pairs;
};

// One point per run, sorted by sti_mean. The adversarial classifier is
// retrained per run on (inputs, that run's outputs).
std::vector<TradeoffPoint> build_tradeoff(const std::vector<TradeoffRun>& runs,
                                          const LinearModel& sc_model,
                                          const StyleLexicon& lexicon,
                                          const EmbeddingTable& embeddings,
                                          const TrainConfig& clf_cfg);

// Writes "<prefix>_points.csv" plus two self-contained SVG scatter plots,
// "<prefix>_cp_vs_sti.svg" and "<prefix>_nt_vs_sti.svg". Byte-identical
// output for identical input.
void emit_plot(const std::vector<TradeoffPoint>& points, const std::string& prefix);

}  // namespace steval

#endif
