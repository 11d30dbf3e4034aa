#ifndef STEVAL_LEXICON_HPP
#define STEVAL_LEXICON_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "steval/linear_model.hpp"
#include "steval/types.hpp"

namespace steval {

inline constexpr const char* kDefaultPlaceholder = "<customstyle>";

struct LexiconEntry {
    std::string word;
    double weight = 0.0;  // magnitude used for selection
};

// Per-style lists of high-weight style words. A word never appears under
// two styles; the placeholder is never a style word.
struct StyleLexicon {
    std::string placeholder = kDefaultPlaceholder;
    std::vector<std::string> style_names;             // index = style id
    std::vector<std::vector<LexiconEntry>> entries;   // per style, by descending weight

    bool contains(const std::string& word) const {
        return membership_.count(word) != 0;
    }
    void rebuild_index();

    std::unordered_map<std::string, int> membership_;  // word -> style id
};

// Top-k features per style class by weight magnitude (binary: |w1 - w0|),
// each word assigned to the style whose weight row values it most.
// Magnitude ties break by lexicographic token order. k > V clamps to V.
StyleLexicon extract_lexicon(const LinearModel& model, int k);

TokenText mask_style(const TokenText& text, const StyleLexicon& lex);
TokenText remove_style(const TokenText& text, const StyleLexicon& lex);

std::string lexicon_to_json(const StyleLexicon& lex);
StyleLexicon lexicon_from_json(const std::string& json_text);
void save_lexicon(const StyleLexicon& lex, const std::string& path);
StyleLexicon load_lexicon(const std::string& path);

}  // namespace steval

#endif
