#ifndef STEVAL_LINEAR_MODEL_HPP
#define STEVAL_LINEAR_MODEL_HPP

#include <map>
#include <string>
#include <vector>

#include "steval/types.hpp"

namespace steval {

struct TrainConfig {
    double learning_rate = 0.1;
    int epochs = 200;
    double l2 = 1e-4;
    unsigned seed = 17;
    double convergence_tol = 1e-7;
};

// Multinomial (softmax) logistic regression over unigram count features.
// Vocabulary is ordered; feature index order fixes the summation order,
// which makes full-batch training bit-deterministic.
struct LinearModel {
    std::map<std::string, int> vocabulary;  // token -> feature index
    std::vector<std::vector<double>> weights;  // S x V
    std::vector<double> bias;                  // S
    StyleInventory styles;

    int num_classes() const { return static_cast<int>(weights.size()); }
    int num_features() const { return static_cast<int>(vocabulary.size()); }

    // Softmax class probabilities from unigram counts; OOV tokens ignored.
    std::vector<double> predict_proba(const TokenText& text) const;
};

// Full-batch gradient descent on L2-regularized multinomial cross-entropy,
// zero-initialized weights. Stops at cfg.epochs or when the loss delta
// drops below cfg.convergence_tol. When loss_trace is given it receives
// the mean regularized loss after each epoch.
LinearModel train_style_classifier(const LabeledCorpus& corpus, const TrainConfig& cfg,
                                   std::vector<double>* loss_trace = nullptr);

// Fraction of corpus texts whose argmax class matches the label.
double training_accuracy(const LinearModel& model, const LabeledCorpus& corpus);

}  // namespace steval

#endif
