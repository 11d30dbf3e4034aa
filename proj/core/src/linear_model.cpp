#include "steval/linear_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace steval {

namespace {

// Sparse unigram counts in feature-index order.
std::vector<std::pair<int, double>> count_features(
    const TokenText& text, const std::map<std::string, int>& vocab) {
    std::map<int, double> counts;
    for (const auto& tok : text.tokens) {
        auto it = vocab.find(tok);
        if (it != vocab.end()) counts[it->second] += 1.0;
    }
    return {counts.begin(), counts.end()};
}

std::vector<double> softmax(std::vector<double> logits) {
    double mx = *std::max_element(logits.begin(), logits.end());
    double sum = 0.0;
    for (double& z : logits) {
        z = std::exp(z - mx);
        sum += z;
    }
    for (double& z : logits) z /= sum;
    return logits;
}

}  // namespace

std::vector<double> LinearModel::predict_proba(const TokenText& text) const {
    const int S = num_classes();
    std::vector<double> logits = bias;
    for (const auto& [f, c] : count_features(text, vocabulary))
        for (int s = 0; s < S; ++s) logits[s] += weights[s][f] * c;
    return softmax(std::move(logits));
}

LinearModel train_style_classifier(const LabeledCorpus& corpus, const TrainConfig& cfg,
                                   std::vector<double>* loss_trace) {
    const int S = corpus.styles.size();
    if (S < 2) throw InputError("corpus must contain at least 2 style classes");

    LinearModel model;
    model.styles = corpus.styles;
    for (const auto& text : corpus.texts)
        for (const auto& tok : text.tokens)
            model.vocabulary.emplace(tok, 0);
    if (model.vocabulary.empty()) throw InputError("empty vocabulary");
    int next = 0;
    for (auto& [tok, id] : model.vocabulary) id = next++;
    const int V = next;
    const int N = static_cast<int>(corpus.texts.size());

    // Precompute sparse features once.
    std::vector<std::vector<std::pair<int, double>>> feats(N);
    for (int i = 0; i < N; ++i) feats[i] = count_features(corpus.texts[i], model.vocabulary);

    model.weights.assign(S, std::vector<double>(V, 0.0));
    model.bias.assign(S, 0.0);

    std::vector<std::vector<double>> grad_w(S, std::vector<double>(V));
    std::vector<double> grad_b(S);
    double prev_loss = std::numeric_limits<double>::infinity();

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        for (auto& row : grad_w) std::fill(row.begin(), row.end(), 0.0);
        std::fill(grad_b.begin(), grad_b.end(), 0.0);
        double loss = 0.0;

        for (int i = 0; i < N; ++i) {
            std::vector<double> logits = model.bias;
            for (const auto& [f, c] : feats[i])
                for (int s = 0; s < S; ++s) logits[s] += model.weights[s][f] * c;
            auto probs = softmax(std::move(logits));
            const int y = corpus.labels[i].id;
            loss -= std::log(std::max(probs[y], 1e-300));
            for (int s = 0; s < S; ++s) {
                double delta = probs[s] - (s == y ? 1.0 : 0.0);
                grad_b[s] += delta;
                for (const auto& [f, c] : feats[i]) grad_w[s][f] += delta * c;
            }
        }

        loss /= N;
        for (int s = 0; s < S; ++s)
            for (int f = 0; f < V; ++f) loss += 0.5 * cfg.l2 * model.weights[s][f] * model.weights[s][f];

        for (int s = 0; s < S; ++s) {
            model.bias[s] -= cfg.learning_rate * grad_b[s] / N;
            for (int f = 0; f < V; ++f)
                model.weights[s][f] -= cfg.learning_rate *
                    (grad_w[s][f] / N + cfg.l2 * model.weights[s][f]);
        }

        if (loss_trace) loss_trace->push_back(loss);
        if (std::fabs(prev_loss - loss) < cfg.convergence_tol) break;
        prev_loss = loss;
    }
    return model;
}

double training_accuracy(const LinearModel& model, const LabeledCorpus& corpus) {
    if (corpus.texts.empty()) return 0.0;
    int correct = 0;
    for (size_t i = 0; i < corpus.texts.size(); ++i) {
        auto probs = model.predict_proba(corpus.texts[i]);
        int argmax = static_cast<int>(std::max_element(probs.begin(), probs.end()) - probs.begin());
        if (argmax == corpus.labels[i].id) ++correct;
    }
    return static_cast<double>(correct) / corpus.texts.size();
}

}  // namespace steval
