#include "steval/porter.hpp"

#include <algorithm>
#include <cctype>

// Straight transcription of Porter's 1980 algorithm, steps 1a-5b.

namespace steval {

namespace {

bool is_alpha_word(const std::string& w) {
    return !w.empty() && std::all_of(w.begin(), w.end(), [](unsigned char c) {
        return std::islower(c);
    });
}

struct Stemmer {
    std::string b;

    bool is_consonant(int i) const {
        char c = b[i];
        if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
        if (c == 'y') return i == 0 ? true : !is_consonant(i - 1);
        return true;
    }

    // Number of VC sequences in b[0..end].
    int measure(int end) const {
        int n = 0, i = 0;
        while (true) {
            if (i > end) return n;
            if (!is_consonant(i)) break;
            ++i;
        }
        ++i;
        while (true) {
            while (true) {
                if (i > end) return n;
                if (is_consonant(i)) break;
                ++i;
            }
            ++i;
            ++n;
            while (true) {
                if (i > end) return n;
                if (!is_consonant(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool ends_with(const std::string& suffix) const {
        return b.size() >= suffix.size() &&
               b.compare(b.size() - suffix.size(), suffix.size(), suffix) == 0;
    }

    int stem_end(const std::string& suffix) const {
        return static_cast<int>(b.size() - suffix.size()) - 1;
    }

    bool vowel_in_stem(int end) const {
        for (int i = 0; i <= end; ++i)
            if (!is_consonant(i)) return true;
        return false;
    }

    bool double_consonant_at_end() const {
        int n = static_cast<int>(b.size());
        return n >= 2 && b[n - 1] == b[n - 2] && is_consonant(n - 1);
    }

    // cvc at position i, where the second c is not w, x, or y.
    bool cvc(int i) const {
        if (i < 2) return false;
        if (!is_consonant(i) || is_consonant(i - 1) || !is_consonant(i - 2)) return false;
        char c = b[i];
        return c != 'w' && c != 'x' && c != 'y';
    }

    bool replace(const std::string& suffix, const std::string& repl, int min_measure) {
        if (!ends_with(suffix)) return false;
        int end = stem_end(suffix);
        if (measure(end) <= min_measure - 1) return false;
        b = b.substr(0, end + 1) + repl;
        return true;
    }

    void step1a() {
        if (ends_with("sses")) b.resize(b.size() - 2);
        else if (ends_with("ies")) b.resize(b.size() - 2);
        else if (ends_with("ss")) {}
        else if (ends_with("s")) b.resize(b.size() - 1);
    }

    void step1b() {
        bool second = false;
        if (ends_with("eed")) {
            if (measure(stem_end("eed")) > 0) b.resize(b.size() - 1);
        } else if (ends_with("ed") && vowel_in_stem(stem_end("ed"))) {
            b.resize(b.size() - 2);
            second = true;
        } else if (ends_with("ing") && vowel_in_stem(stem_end("ing"))) {
            b.resize(b.size() - 3);
            second = true;
        }
        if (second) {
            if (ends_with("at") || ends_with("bl") || ends_with("iz")) {
                b.push_back('e');
            } else if (double_consonant_at_end()) {
                char c = b.back();
                if (c != 'l' && c != 's' && c != 'z') b.resize(b.size() - 1);
            } else if (measure(static_cast<int>(b.size()) - 1) == 1 &&
                       cvc(static_cast<int>(b.size()) - 1)) {
                b.push_back('e');
            }
        }
    }

    void step1c() {
        if (ends_with("y") && vowel_in_stem(stem_end("y"))) b.back() = 'i';
    }

    void step2() {
        static const std::pair<const char*, const char*> rules[] = {
            {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
            {"izer", "ize"}, {"abli", "able"}, {"alli", "al"}, {"entli", "ent"},
            {"eli", "e"}, {"ousli", "ous"}, {"ization", "ize"}, {"ation", "ate"},
            {"ator", "ate"}, {"alism", "al"}, {"iveness", "ive"}, {"fulness", "ful"},
            {"ousness", "ous"}, {"aliti", "al"}, {"iviti", "ive"}, {"biliti", "ble"}};
        for (const auto& [suf, rep] : rules)
            if (ends_with(suf)) {
                replace(suf, rep, 1);
                return;
            }
    }

    void step3() {
        static const std::pair<const char*, const char*> rules[] = {
            {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
            {"ical", "ic"}, {"ful", ""}, {"ness", ""}};
        for (const auto& [suf, rep] : rules)
            if (ends_with(suf)) {
                replace(suf, rep, 1);
                return;
            }
    }

    void step4() {
        static const char* suffixes[] = {"al", "ance", "ence", "er", "ic", "able",
                                         "ible", "ant", "ement", "ment", "ent", "ion",
                                         "ou", "ism", "ate", "iti", "ous", "ive", "ize"};
        for (const char* suf : suffixes) {
            if (!ends_with(suf)) continue;
            int end = stem_end(suf);
            if (std::string(suf) == "ion" && end >= 0 && b[end] != 's' && b[end] != 't')
                continue;
            if (measure(end) > 1) b.resize(end + 1);
            return;
        }
    }

    void step5a() {
        if (ends_with("e")) {
            int end = stem_end("e");
            int m = measure(end);
            if (m > 1 || (m == 1 && !cvc(end))) b.resize(b.size() - 1);
        }
    }

    void step5b() {
        if (b.size() >= 2 && b.back() == 'l' && double_consonant_at_end() &&
            measure(static_cast<int>(b.size()) - 1) > 1)
            b.resize(b.size() - 1);
    }
};

}  // namespace

std::string porter_stem(const std::string& word) {
    if (word.size() <= 2 || !is_alpha_word(word)) return word;
    Stemmer st{word};
    st.step1a();
    st.step1b();
    st.step1c();
    st.step2();
    st.step3();
    st.step4();
    st.step5a();
    st.step5b();
    return st.b;
}

}  // namespace steval
