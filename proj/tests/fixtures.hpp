#ifndef STEVAL_TESTS_FIXTURES_HPP
#define STEVAL_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "steval/corpus.hpp"
#include "steval/types.hpp"

namespace fixtures {

inline steval::LabeledCorpus corpus_from(const std::vector<std::string>& texts,
                                         const std::vector<std::string>& labels) {
    steval::LabeledCorpus corpus;
    for (size_t i = 0; i < texts.size(); ++i) {
        corpus.texts.push_back(steval::tokenize(texts[i]));
        corpus.labels.push_back(corpus.styles.intern(labels[i]));
    }
    return corpus;
}

struct PlantedCorpus {
    steval::LabeledCorpus corpus;
    std::vector<std::string> planted;  // planted[s] style words, flat per style
    std::vector<std::vector<std::string>> planted_by_style;
};

// Two-style corpus: every text mixes neutral words with 1-3 planted style
// words of its own class. Style word w "negNN"/"posNN", neutral "wNNN".
inline PlantedCorpus planted_corpus(int texts_per_class, int planted_per_class,
                                    int neutral_words, unsigned seed) {
    PlantedCorpus out;
    out.planted_by_style.resize(2);
    const char* prefix[2] = {"neg", "pos"};
    const char* style_name[2] = {"negative", "positive"};
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i < planted_per_class; ++i) {
            char buf[16];
            std::snprintf(buf, sizeof buf, "%s%02d", prefix[s], i);
            out.planted_by_style[s].push_back(buf);
            out.planted.push_back(buf);
        }

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> n_style(1, 3), n_neutral(3, 7);
    std::uniform_int_distribution<int> pick_neutral(0, neutral_words - 1);
    std::uniform_int_distribution<int> pick_style(0, planted_per_class - 1);

    for (int s = 0; s < 2; ++s) {
        steval::StyleLabel label = out.corpus.styles.intern(style_name[s]);
        for (int t = 0; t < texts_per_class; ++t) {
            std::vector<std::string> toks;
            int ns = n_style(rng), nn = n_neutral(rng);
            for (int i = 0; i < nn; ++i) {
                char buf[16];
                std::snprintf(buf, sizeof buf, "w%03d", pick_neutral(rng));
                toks.push_back(buf);
            }
            for (int i = 0; i < ns; ++i)
                toks.push_back(out.planted_by_style[s][pick_style(rng)]);
            std::shuffle(toks.begin(), toks.end(), rng);
            steval::TokenText text;
            text.tokens = toks;
            text.raw = text.joined();
            out.corpus.texts.push_back(std::move(text));
            out.corpus.labels.push_back(label);
        }
    }
    return out;
}

inline steval::EmbeddingTable random_embeddings(const std::vector<std::string>& vocab,
                                                int dim, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    steval::EmbeddingTable E;
    E.dimension = dim;
    for (const auto& tok : vocab) {
        std::vector<double> v(dim);
        for (double& x : v) x = g(rng);
        E.entries.emplace(tok, std::move(v));
    }
    return E;
}

}  // namespace fixtures

#endif
