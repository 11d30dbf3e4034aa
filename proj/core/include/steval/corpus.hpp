#ifndef STEVAL_CORPUS_HPP
#define STEVAL_CORPUS_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "steval/types.hpp"

namespace steval {

struct EmbeddingTable {
    int dimension = 0;
    std::unordered_map<std::string, std::vector<double>> entries;

    const std::vector<double>* find(const std::string& token) const {
        auto it = entries.find(token);
        return it == entries.end() ? nullptr : &it->second;
    }
};

enum class RatingKind { Ordinal, Binary };

// Binary cells are stored as 0 = input chosen, 1 = output chosen.
struct RatingsTable {
    std::vector<std::string> items;
    int raters = 0;
    RatingKind kind = RatingKind::Ordinal;
    std::vector<std::vector<int>> values;  // items x raters, complete
};

TokenText tokenize(const std::string& raw);

LabeledCorpus load_labeled_corpus(const std::string& texts_path,
                                  const std::string& labels_path);

std::vector<TransferPair> load_pairs(const std::string& path);

EmbeddingTable load_embeddings(const std::string& path);

RatingsTable load_ratings(const std::string& path, RatingKind kind);

// Reads all lines of a UTF-8 text file; malformed byte sequences are an
// InputError. Used by every loader.
std::vector<std::string> read_lines(const std::string& path);

}  // namespace steval

#endif
