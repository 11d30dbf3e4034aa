#ifndef STEVAL_TYPES_HPP
#define STEVAL_TYPES_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace steval {

// Bad user input (malformed files, violated preconditions on data).
// The CLI maps this to exit code 2; anything else is an internal error.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Tokenized text. tokens is always the lowercase whitespace split of raw.
struct TokenText {
    std::string raw;
    std::vector<std::string> tokens;

    bool empty() const { return tokens.empty(); }
    std::string joined() const;
};

struct StyleLabel {
    int id = 0;
    std::string name;

    friend bool operator==(const StyleLabel& a, const StyleLabel& b) {
        return a.id == b.id && a.name == b.name;
    }
};

// Dense inventory of style classes, ids 0..S-1 in first-appearance order.
class StyleInventory {
public:
    StyleLabel intern(const std::string& name);
    const StyleLabel* find(const std::string& name) const;
    const StyleLabel& at(int id) const { return labels_.at(id); }
    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<StyleLabel>& labels() const { return labels_; }

private:
    std::vector<StyleLabel> labels_;
};

struct LabeledCorpus {
    std::vector<TokenText> texts;
    std::vector<StyleLabel> labels;
    StyleInventory styles;
};

struct TransferPair {
    TokenText input;
    TokenText output;
    StyleLabel source_style;
    StyleLabel target_style;
};

}  // namespace steval

#endif
