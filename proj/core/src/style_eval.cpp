#include "steval/style_eval.hpp"

#include <algorithm>
#include <sstream>

#include "steval/corpus.hpp"

namespace steval {

StyleDistribution score_style(const LinearModel& model, const TokenText& text) {
    StyleDistribution d;
    d.probs = model.predict_proba(text);
    for (const auto& label : model.styles.labels()) d.style_names.push_back(label.name);
    return d;
}

StiScore sti(const StyleDistribution& sc_x, const StyleDistribution& sc_xp,
             const StyleLabel& target) {
    if (sc_x.size() != sc_xp.size())
        throw InputError("style distributions have different inventories");
    if (target.id < 0 || target.id >= sc_x.size())
        throw InputError("target style not in inventory");
    Distribution p{sc_x.probs}, q{sc_xp.probs};
    double magnitude = emd(p, q, GroundDistance::unit(sc_x.size()));
    // Zero-magnitude scores keep sign +.
    bool wrong_direction = sc_xp.probs[target.id] < sc_x.probs[target.id];
    return {wrong_direction && magnitude > 0.0 ? -magnitude : magnitude};
}

CorpusSti corpus_sti(const std::vector<TransferPair>& pairs, const LinearModel& model) {
    if (pairs.empty()) throw InputError("no transfer pairs");
    CorpusSti result;
    double sum = 0.0;
    for (const auto& pair : pairs) {
        auto score = sti(score_style(model, pair.input), score_style(model, pair.output),
                         pair.target_style);
        result.per_pair.push_back(score);
        sum += score.value;
    }
    result.mean = sum / pairs.size();
    return result;
}

double target_style_rate(const std::vector<TransferPair>& pairs, const LinearModel& model) {
    if (pairs.empty()) throw InputError("no transfer pairs");
    int hits = 0;
    for (const auto& pair : pairs) {
        auto probs = model.predict_proba(pair.output);
        int argmax = 0;
        for (int s = 1; s < static_cast<int>(probs.size()); ++s)
            if (probs[s] > probs[argmax]) argmax = s;
        if (argmax == pair.target_style.id) ++hits;
    }
    return static_cast<double>(hits) / pairs.size();
}

std::vector<StyleDistribution> load_style_distributions(const std::string& path) {
    auto lines = read_lines(path);
    std::vector<StyleDistribution> out;
    for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        std::stringstream ss(lines[i]);
        std::string cell;
        std::getline(ss, cell, ',');  // pair_id, kept implicit by row order
        StyleDistribution d;
        while (std::getline(ss, cell, ',')) {
            try {
                d.probs.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw InputError("non-numeric probability at line " + std::to_string(i + 1));
            }
        }
        if (d.probs.empty())
            throw InputError("no probabilities at line " + std::to_string(i + 1));
        Distribution{d.probs}.validate();
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace steval
