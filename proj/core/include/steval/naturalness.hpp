#ifndef STEVAL_NATURALNESS_HPP
#define STEVAL_NATURALNESS_HPP

#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "steval/linear_model.hpp"
#include "steval/types.hpp"

namespace steval {

inline constexpr const char* kUnkToken = "<unk>";
inline constexpr const char* kBosToken = "<s>";
inline constexpr const char* kEosToken = "</s>";

// Binary logistic regression distinguishing human-written inputs (class 1)
// from machine-generated outputs (class 0).
LinearModel train_adversarial_classifier(const std::vector<TokenText>& inputs,
                                         const std::vector<TokenText>& outputs,
                                         const TrainConfig& cfg);

// P(human-generated | text).
double naturalness_score(const LinearModel& clf, const TokenText& text);

enum class Winner { Input, Output };

struct NaturalnessDecision {
    Winner winner = Winner::Input;
    double margin = 0.0;
    double p_human_input = 0.0;
    double p_human_output = 0.0;
};

// Output wins only when strictly more human-like; ties go to the input.
NaturalnessDecision more_natural(const LinearModel& clf, const TransferPair& pair);

double output_more_natural_rate(const LinearModel& clf,
                                const std::vector<TransferPair>& pairs);

double agreement(const std::vector<NaturalnessDecision>& machine,
                 const std::vector<Winner>& human);

// Interpolated n-gram language model with <unk> thresholding, sentence
// padding, and an additive-1/V floor at the unigram level.
struct NgramLM {
    int order = 3;
    std::vector<double> lambdas;  // one per order 1..n, sums to 1
    std::set<std::string> vocab;  // predicted events, includes <unk> and </s>
    std::unordered_map<std::string, long long> gram_counts;     // joined k-grams, k <= order
    std::unordered_map<std::string, long long> context_counts;  // joined contexts, length >= 1
    long long total_events = 0;

    // P(token | context), always in (0, 1].
    double prob(const std::string& token, const std::vector<std::string>& context) const;
    // exp of the mean negative log-probability over tokens plus </s>.
    double perplexity(const TokenText& text) const;
};

NgramLM train_ngram_lm(const std::vector<TokenText>& corpus, int order = 3,
                       int unk_threshold = 2,
                       std::vector<double> lambdas = {0.1, 0.3, 0.6});

}  // namespace steval

#endif
