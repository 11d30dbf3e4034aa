#include "steval/lexicon.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

namespace steval {

void StyleLexicon::rebuild_index() {
    membership_.clear();
    for (size_t s = 0; s < entries.size(); ++s)
        for (const auto& e : entries[s]) membership_.emplace(e.word, static_cast<int>(s));
}

StyleLexicon extract_lexicon(const LinearModel& model, int k) {
    const int S = model.num_classes();
    const int V = model.num_features();
    if (k < 0) throw InputError("lexicon size k must be non-negative");
    if (k > V) k = V;  // clamped; caller may warn

    struct Scored {
        std::string word;
        double magnitude;
        int style;
    };
    std::vector<Scored> scored;
    scored.reserve(V);
    for (const auto& [word, f] : model.vocabulary) {
        double magnitude;
        if (S == 2) {
            magnitude = std::fabs(model.weights[1][f] - model.weights[0][f]);
        } else {
            magnitude = 0.0;
            for (int s = 0; s < S; ++s)
                magnitude = std::max(magnitude, std::fabs(model.weights[s][f]));
        }
        int best = 0;
        for (int s = 1; s < S; ++s)
            if (model.weights[s][f] > model.weights[best][f]) best = s;
        scored.push_back({word, magnitude, best});
    }
    // Descending magnitude, ties by lexicographic token order; vocabulary
    // iteration is already lexicographic so stable_sort keeps that order.
    std::stable_sort(scored.begin(), scored.end(),
                     [](const Scored& a, const Scored& b) { return a.magnitude > b.magnitude; });

    StyleLexicon lex;
    for (const auto& label : model.styles.labels()) lex.style_names.push_back(label.name);
    lex.entries.resize(S);
    for (const auto& sc : scored) {
        auto& list = lex.entries[sc.style];
        if (static_cast<int>(list.size()) >= k) continue;
        if (sc.word == lex.placeholder) continue;
        list.push_back({sc.word, sc.magnitude});
    }
    lex.rebuild_index();
    return lex;
}

TokenText mask_style(const TokenText& text, const StyleLexicon& lex) {
    TokenText out;
    for (const auto& tok : text.tokens)
        out.tokens.push_back(lex.contains(tok) ? lex.placeholder : tok);
    out.raw = out.joined();
    return out;
}

TokenText remove_style(const TokenText& text, const StyleLexicon& lex) {
    TokenText out;
    for (const auto& tok : text.tokens)
        if (!lex.contains(tok)) out.tokens.push_back(tok);
    out.raw = out.joined();
    return out;
}

std::string lexicon_to_json(const StyleLexicon& lex) {
    nlohmann::ordered_json j;
    j["placeholder"] = lex.placeholder;
    nlohmann::ordered_json styles = nlohmann::ordered_json::object();
    for (size_t s = 0; s < lex.entries.size(); ++s) {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& e : lex.entries[s])
            list.push_back({{"word", e.word}, {"weight", e.weight}});
        styles[lex.style_names[s]] = std::move(list);
    }
    j["styles"] = std::move(styles);
    return j.dump(2) + "\n";
}

StyleLexicon lexicon_from_json(const std::string& json_text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid lexicon JSON: ") + e.what());
    }
    StyleLexicon lex;
    if (!j.contains("placeholder") || !j.contains("styles"))
        throw InputError("lexicon JSON must contain 'placeholder' and 'styles'");
    lex.placeholder = j["placeholder"].get<std::string>();
    for (const auto& [name, list] : j["styles"].items()) {
        lex.style_names.push_back(name);
        std::vector<LexiconEntry> entries;
        for (const auto& item : list)
            entries.push_back({item["word"].get<std::string>(), item["weight"].get<double>()});
        lex.entries.push_back(std::move(entries));
    }
    lex.rebuild_index();
    for (const auto& [word, style] : lex.membership_)
        if (word == lex.placeholder)
            throw InputError("placeholder must not appear as a style word");
    return lex;
}

void save_lexicon(const StyleLexicon& lex, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write lexicon: " + path);
    out << lexicon_to_json(lex);
}

StyleLexicon load_lexicon(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open lexicon: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return lexicon_from_json(text);
}

}  // namespace steval
