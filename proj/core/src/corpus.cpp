#include "steval/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace steval {

std::string TokenText::joined() const {
    std::string out;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) out.push_back(' ');
        out += tokens[i];
    }
    return out;
}

StyleLabel StyleInventory::intern(const std::string& name) {
    if (const StyleLabel* existing = find(name)) return *existing;
    StyleLabel label{static_cast<int>(labels_.size()), name};
    labels_.push_back(label);
    return label;
}

const StyleLabel* StyleInventory::find(const std::string& name) const {
    for (const auto& l : labels_)
        if (l.name == name) return &l;
    return nullptr;
}

TokenText tokenize(const std::string& raw) {
    TokenText t;
    t.raw = raw;
    std::string cur;
    for (unsigned char c : raw) {
        if (std::isspace(c)) {
            if (!cur.empty()) {
                t.tokens.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(static_cast<char>(std::tolower(c)));
        }
    }
    if (!cur.empty()) t.tokens.push_back(cur);
    return t;
}

namespace {

bool valid_utf8(const std::string& s) {
    size_t i = 0;
    while (i < s.size()) {
        unsigned char c = s[i];
        int extra;
        if (c < 0x80) extra = 0;
        else if ((c & 0xE0) == 0xC0) extra = 1;
        else if ((c & 0xF0) == 0xE0) extra = 2;
        else if ((c & 0xF8) == 0xF0) extra = 3;
        else return false;
        if (i + extra >= s.size()) return false;
        for (int k = 1; k <= extra; ++k)
            if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80)
                return false;
        // reject overlong 2-byte forms
        if (extra == 1 && c < 0xC2) return false;
        i += extra + 1;
    }
    return true;
}

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    cells.push_back(cur);
    return cells;
}

std::string trimmed(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!valid_utf8(line))
            throw InputError("malformed UTF-8 in " + path + " at line " +
                             std::to_string(lines.size() + 1));
        lines.push_back(line);
    }
    return lines;
}

LabeledCorpus load_labeled_corpus(const std::string& texts_path,
                                  const std::string& labels_path) {
    auto text_lines = read_lines(texts_path);
    auto label_lines = read_lines(labels_path);
    if (text_lines.size() != label_lines.size())
        throw InputError("line count mismatch: " + std::to_string(text_lines.size()) +
                         " texts vs " + std::to_string(label_lines.size()) + " labels");
    LabeledCorpus corpus;
    for (size_t i = 0; i < text_lines.size(); ++i) {
        std::string name = trimmed(label_lines[i]);
        if (name.empty())
            throw InputError("empty label at line " + std::to_string(i + 1));
        corpus.texts.push_back(tokenize(text_lines[i]));
        corpus.labels.push_back(corpus.styles.intern(name));
    }
    return corpus;
}

std::vector<TransferPair> load_pairs(const std::string& path) {
    auto lines = read_lines(path);
    std::vector<TransferPair> pairs;
    StyleInventory styles;
    for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        std::vector<std::string> cols;
        std::stringstream ss(lines[i]);
        std::string col;
        while (std::getline(ss, col, '\t')) cols.push_back(col);
        if (cols.size() != 4)
            throw InputError("expected 4 tab-separated columns at line " +
                             std::to_string(i + 1) + ", got " +
                             std::to_string(cols.size()));
        std::string src = trimmed(cols[2]), tgt = trimmed(cols[3]);
        if (src == tgt)
            throw InputError("source equals target at line " + std::to_string(i + 1));
        TransferPair p;
        p.input = tokenize(cols[0]);
        p.output = tokenize(cols[1]);
        p.source_style = styles.intern(src);
        p.target_style = styles.intern(tgt);
        pairs.push_back(std::move(p));
    }
    return pairs;
}

EmbeddingTable load_embeddings(const std::string& path) {
    auto lines = read_lines(path);
    EmbeddingTable table;
    for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        std::stringstream ss(lines[i]);
        std::string token;
        ss >> token;
        std::vector<double> vec;
        double v;
        while (ss >> v) vec.push_back(v);
        if (!ss.eof())
            throw InputError("non-numeric embedding component at line " +
                             std::to_string(i + 1));
        if (vec.empty())
            throw InputError("no components at line " + std::to_string(i + 1));
        if (table.dimension == 0) {
            table.dimension = static_cast<int>(vec.size());
        } else if (static_cast<int>(vec.size()) != table.dimension) {
            throw InputError("dimension mismatch at line " + std::to_string(i + 1) +
                             ": expected " + std::to_string(table.dimension) +
                             ", got " + std::to_string(vec.size()));
        }
        for (double x : vec)
            if (!std::isfinite(x))
                throw InputError("non-finite embedding component at line " +
                                 std::to_string(i + 1));
        table.entries.emplace(token, std::move(vec));  // first occurrence wins
    }
    if (table.entries.empty()) throw InputError("empty embedding file: " + path);
    return table;
}

RatingsTable load_ratings(const std::string& path, RatingKind kind) {
    auto lines = read_lines(path);
    if (lines.empty()) throw InputError("empty ratings file: " + path);
    auto header = split_csv_row(lines[0]);
    if (header.size() < 3)
        throw InputError("ratings header must be item,r1,...,rR with >=2 raters");
    RatingsTable table;
    table.kind = kind;
    table.raters = static_cast<int>(header.size()) - 1;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto cells = split_csv_row(lines[i]);
        if (static_cast<int>(cells.size()) != table.raters + 1)
            throw InputError("row " + std::to_string(i + 1) + " has " +
                             std::to_string(cells.size() - 1) + " cells, expected " +
                             std::to_string(table.raters));
        table.items.push_back(trimmed(cells[0]));
        std::vector<int> row;
        for (int r = 1; r <= table.raters; ++r) {
            std::string cell = trimmed(cells[r]);
            if (cell.empty())
                throw InputError("missing cell at row " + std::to_string(i + 1));
            if (kind == RatingKind::Ordinal) {
                int value = 0;
                auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
                if (ec != std::errc{} || p != cell.data() + cell.size())
                    throw InputError("non-integer score '" + cell + "' at row " +
                                     std::to_string(i + 1));
                if (value < 1 || value > 5)
                    throw InputError("score out of range 1..5 at row " +
                                     std::to_string(i + 1));
                row.push_back(value);
            } else {
                if (cell == "input") row.push_back(0);
                else if (cell == "output") row.push_back(1);
                else
                    throw InputError("unknown binary choice '" + cell + "' at row " +
                                     std::to_string(i + 1));
            }
        }
        table.values.push_back(std::move(row));
    }
    if (table.values.empty()) throw InputError("ratings file has no data rows");
    return table;
}

}  // namespace steval
