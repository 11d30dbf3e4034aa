#include "steval/naturalness.hpp"

#include <algorithm>
#include <cmath>

namespace steval {

LinearModel train_adversarial_classifier(const std::vector<TokenText>& inputs,
                                         const std::vector<TokenText>& outputs,
                                         const TrainConfig& cfg) {
    if (inputs.empty() || outputs.empty())
        throw InputError("adversarial training needs both inputs and outputs");
    LabeledCorpus corpus;
    StyleLabel machine = corpus.styles.intern("machine");  // class 0
    StyleLabel human = corpus.styles.intern("human");      // class 1
    for (const auto& t : outputs) {
        corpus.texts.push_back(t);
        corpus.labels.push_back(machine);
    }
    for (const auto& t : inputs) {
        corpus.texts.push_back(t);
        corpus.labels.push_back(human);
    }
    return train_style_classifier(corpus, cfg);
}

double naturalness_score(const LinearModel& clf, const TokenText& text) {
    return clf.predict_proba(text)[1];
}

NaturalnessDecision more_natural(const LinearModel& clf, const TransferPair& pair) {
    NaturalnessDecision d;
    d.p_human_input = naturalness_score(clf, pair.input);
    d.p_human_output = naturalness_score(clf, pair.output);
    d.winner = d.p_human_output > d.p_human_input ? Winner::Output : Winner::Input;
    d.margin = std::fabs(d.p_human_output - d.p_human_input);
    return d;
}

double output_more_natural_rate(const LinearModel& clf,
                                const std::vector<TransferPair>& pairs) {
    if (pairs.empty()) throw InputError("no transfer pairs");
    int wins = 0;
    for (const auto& pair : pairs)
        if (more_natural(clf, pair).winner == Winner::Output) ++wins;
    return static_cast<double>(wins) / pairs.size();
}

double agreement(const std::vector<NaturalnessDecision>& machine,
                 const std::vector<Winner>& human) {
    if (machine.size() != human.size())
        throw InputError("decision vectors differ in length");
    if (machine.empty()) throw InputError("no decisions");
    int same = 0;
    for (size_t i = 0; i < machine.size(); ++i)
        if (machine[i].winner == human[i]) ++same;
    return static_cast<double>(same) / machine.size();
}

namespace {

constexpr char kSep = '\x1f';

std::string join(const std::vector<std::string>& toks, size_t from, size_t to) {
    std::string out;
    for (size_t i = from; i < to; ++i) {
        if (i > from) out.push_back(kSep);
        out += toks[i];
    }
    return out;
}

}  // namespace

double NgramLM::prob(const std::string& token, const std::vector<std::string>& context) const {
    const int V = static_cast<int>(vocab.size());
    std::string w = vocab.count(token) ? token : kUnkToken;

    // Padded context of exactly order-1 mapped tokens.
    std::vector<std::string> ctx;
    for (int i = 0; i < order - 1; ++i) ctx.push_back(kBosToken);
    for (const auto& c : context)
        ctx.push_back(c == kBosToken || vocab.count(c) ? c : kUnkToken);
    if (static_cast<int>(ctx.size()) > order - 1)
        ctx.erase(ctx.begin(), ctx.end() - (order - 1));

    auto count = [&](const std::string& key) -> long long {
        auto it = gram_counts.find(key);
        return it == gram_counts.end() ? 0 : it->second;
    };

    double unigram = (count(w) + 1.0) / (total_events + V);
    double p = 0.0;
    for (int k = 1; k <= order; ++k) {
        double pk;
        if (k == 1) {
            pk = unigram;
        } else {
            std::string ctx_key = join(ctx, ctx.size() - (k - 1), ctx.size());
            auto it = context_counts.find(ctx_key);
            if (it == context_counts.end() || it->second == 0) {
                pk = unigram;  // unseen context folds into the floor
            } else {
                pk = static_cast<double>(count(ctx_key + kSep + w)) / it->second;
            }
        }
        p += lambdas[k - 1] * pk;
    }
    return p;
}

double NgramLM::perplexity(const TokenText& text) const {
    std::vector<std::string> context;
    double log_sum = 0.0;
    long long n = 0;
    for (const auto& tok : text.tokens) {
        log_sum += std::log(prob(tok, context));
        context.push_back(tok);
        ++n;
    }
    log_sum += std::log(prob(kEosToken, context));
    ++n;
    return std::exp(-log_sum / n);
}

NgramLM train_ngram_lm(const std::vector<TokenText>& corpus, int order,
                       int unk_threshold, std::vector<double> lambdas) {
    if (corpus.empty()) throw InputError("empty language model corpus");
    if (order < 1) throw InputError("order must be >= 1");
    if (static_cast<int>(lambdas.size()) != order)
        throw InputError("need one interpolation weight per order");
    double lsum = 0.0;
    for (double l : lambdas) {
        if (l < 0.0) throw InputError("interpolation weights must be non-negative");
        lsum += l;
    }
    if (std::fabs(lsum - 1.0) > 1e-9)
        throw InputError("interpolation weights must sum to 1");

    NgramLM lm;
    lm.order = order;
    lm.lambdas = std::move(lambdas);

    std::unordered_map<std::string, long long> raw_freq;
    for (const auto& t : corpus)
        for (const auto& tok : t.tokens) raw_freq[tok] += 1;

    lm.vocab.insert(kUnkToken);
    lm.vocab.insert(kEosToken);
    for (const auto& [tok, c] : raw_freq)
        if (c >= unk_threshold) lm.vocab.insert(tok);

    for (const auto& t : corpus) {
        std::vector<std::string> padded;
        for (int i = 0; i < order - 1; ++i) padded.push_back(kBosToken);
        for (const auto& tok : t.tokens)
            padded.push_back(lm.vocab.count(tok) ? tok : kUnkToken);
        padded.push_back(kEosToken);

        for (size_t pos = order - 1; pos < padded.size(); ++pos) {
            ++lm.total_events;
            for (int k = 1; k <= order; ++k) {
                lm.gram_counts[join(padded, pos - (k - 1), pos + 1)] += 1;
                if (k > 1) lm.context_counts[join(padded, pos - (k - 1), pos)] += 1;
            }
        }
    }
    return lm;
}

}  // namespace steval
