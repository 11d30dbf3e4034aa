#include "steval/content.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "steval/porter.hpp"
#include "steval/transport.hpp"

namespace steval {

namespace {

constexpr int kMaxOrder = 4;

std::map<std::vector<std::string>, int> ngram_counts(const std::vector<std::string>& toks,
                                                     int n) {
    std::map<std::vector<std::string>, int> counts;
    if (static_cast<int>(toks.size()) < n) return counts;
    for (size_t i = 0; i + n <= toks.size(); ++i)
        counts[std::vector<std::string>(toks.begin() + i, toks.begin() + i + n)] += 1;
    return counts;
}

struct BleuCounts {
    long long matches[kMaxOrder] = {0, 0, 0, 0};
    long long totals[kMaxOrder] = {0, 0, 0, 0};
    long long ref_len = 0;
    long long cand_len = 0;
};

void accumulate_bleu(const TokenText& reference, const TokenText& candidate, BleuCounts& c) {
    c.ref_len += static_cast<long long>(reference.tokens.size());
    c.cand_len += static_cast<long long>(candidate.tokens.size());
    for (int n = 1; n <= kMaxOrder; ++n) {
        auto cand = ngram_counts(candidate.tokens, n);
        auto ref = ngram_counts(reference.tokens, n);
        for (const auto& [gram, count] : cand) {
            auto it = ref.find(gram);
            int clipped = it == ref.end() ? 0 : std::min(count, it->second);
            c.matches[n - 1] += clipped;
            c.totals[n - 1] += count;
        }
    }
}

double combine_bleu(const BleuCounts& c) {
    if (c.cand_len == 0) return 0.0;
    if (c.totals[0] == 0 || c.matches[0] == 0) return 0.0;
    double log_sum = std::log(static_cast<double>(c.matches[0]) / c.totals[0]);
    for (int n = 2; n <= kMaxOrder; ++n)
        log_sum += std::log((c.matches[n - 1] + 1.0) / (c.totals[n - 1] + 1.0));
    double geo = std::exp(log_sum / kMaxOrder);
    double bp = c.cand_len < c.ref_len
                    ? std::exp(1.0 - static_cast<double>(c.ref_len) / c.cand_len)
                    : 1.0;
    return geo * bp;
}

}  // namespace

double bleu(const TokenText& reference, const TokenText& candidate) {
    BleuCounts c;
    accumulate_bleu(reference, candidate, c);
    return combine_bleu(c);
}

double corpus_bleu(const std::vector<TokenText>& references,
                   const std::vector<TokenText>& candidates) {
    if (references.size() != candidates.size())
        throw InputError("reference/candidate count mismatch");
    BleuCounts c;
    for (size_t i = 0; i < references.size(); ++i)
        accumulate_bleu(references[i], candidates[i], c);
    return combine_bleu(c);
}

namespace {

// Pair the i-th occurrence of each (key-equal) token in the candidate with
// the i-th occurrence in the reference. Monotone pairing keeps equal-token
// matches uncrossed, which minimizes chunks for the common cases.
template <typename KeyFn>
void align_stage(const std::vector<std::string>& cand, const std::vector<std::string>& ref,
                 std::vector<int>& cand_to_ref, std::vector<char>& ref_used, KeyFn key) {
    std::map<std::string, std::vector<int>> ref_positions;
    for (size_t j = 0; j < ref.size(); ++j)
        if (!ref_used[j]) ref_positions[key(ref[j])].push_back(static_cast<int>(j));
    std::map<std::string, size_t> next;
    for (size_t i = 0; i < cand.size(); ++i) {
        if (cand_to_ref[i] >= 0) continue;
        auto it = ref_positions.find(key(cand[i]));
        if (it == ref_positions.end()) continue;
        size_t& cursor = next[it->first];
        if (cursor >= it->second.size()) continue;
        int j = it->second[cursor++];
        cand_to_ref[i] = j;
        ref_used[j] = 1;
    }
}

}  // namespace

double meteor_lite(const TokenText& reference, const TokenText& candidate) {
    const auto& ref = reference.tokens;
    const auto& cand = candidate.tokens;
    if (ref.empty() || cand.empty()) return 0.0;

    std::vector<int> cand_to_ref(cand.size(), -1);
    std::vector<char> ref_used(ref.size(), 0);
    align_stage(cand, ref, cand_to_ref, ref_used, [](const std::string& w) { return w; });
    align_stage(cand, ref, cand_to_ref, ref_used,
                [](const std::string& w) { return porter_stem(w); });

    int m = 0;
    for (int j : cand_to_ref)
        if (j >= 0) ++m;
    if (m == 0) return 0.0;

    // Chunks: maximal runs adjacent in both candidate and reference.
    int chunks = 0;
    int prev_cand = -2, prev_ref = -2;
    for (size_t i = 0; i < cand.size(); ++i) {
        if (cand_to_ref[i] < 0) continue;
        if (static_cast<int>(i) != prev_cand + 1 || cand_to_ref[i] != prev_ref + 1) ++chunks;
        prev_cand = static_cast<int>(i);
        prev_ref = cand_to_ref[i];
    }

    double precision = static_cast<double>(m) / cand.size();
    double recall = static_cast<double>(m) / ref.size();
    double fmean = precision * recall / (0.9 * precision + 0.1 * recall);
    double penalty = 0.5 * std::pow(static_cast<double>(chunks) / m, 3.0);
    return fmean * (1.0 - penalty);
}

namespace {

std::vector<const std::vector<double>*> in_vocab_vectors(const TokenText& t,
                                                         const EmbeddingTable& E) {
    std::vector<const std::vector<double>*> vecs;
    for (const auto& tok : t.tokens)
        if (const auto* v = E.find(tok)) vecs.push_back(v);
    return vecs;
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

double rescale(double cos) { return std::clamp((cos + 1.0) / 2.0, 0.0, 1.0); }

void require_in_vocab(const std::vector<const std::vector<double>*>& vecs) {
    if (vecs.empty())
        throw InputError("text has no in-vocabulary tokens");
}

}  // namespace

double embed_average(const TokenText& a, const TokenText& b, const EmbeddingTable& E) {
    auto va = in_vocab_vectors(a, E), vb = in_vocab_vectors(b, E);
    require_in_vocab(va);
    require_in_vocab(vb);
    std::vector<double> ma(E.dimension, 0.0), mb(E.dimension, 0.0);
    for (const auto* v : va)
        for (int i = 0; i < E.dimension; ++i) ma[i] += (*v)[i];
    for (const auto* v : vb)
        for (int i = 0; i < E.dimension; ++i) mb[i] += (*v)[i];
    for (int i = 0; i < E.dimension; ++i) {
        ma[i] /= va.size();
        mb[i] /= vb.size();
    }
    return rescale(cosine(ma, mb));
}

double vector_extrema(const TokenText& a, const TokenText& b, const EmbeddingTable& E) {
    auto extrema = [&](const std::vector<const std::vector<double>*>& vecs) {
        std::vector<double> out(E.dimension, 0.0);
        for (int i = 0; i < E.dimension; ++i) {
            double mx = -std::numeric_limits<double>::infinity();
            double mn = std::numeric_limits<double>::infinity();
            for (const auto* v : vecs) {
                mx = std::max(mx, (*v)[i]);
                mn = std::min(mn, (*v)[i]);
            }
            out[i] = std::fabs(mx) >= std::fabs(mn) ? mx : mn;
        }
        return out;
    };
    auto va = in_vocab_vectors(a, E), vb = in_vocab_vectors(b, E);
    require_in_vocab(va);
    require_in_vocab(vb);
    return rescale(cosine(extrema(va), extrema(vb)));
}

double greedy_match(const TokenText& a, const TokenText& b, const EmbeddingTable& E) {
    auto va = in_vocab_vectors(a, E), vb = in_vocab_vectors(b, E);
    require_in_vocab(va);
    require_in_vocab(vb);
    auto directional = [](const auto& from, const auto& to) {
        double sum = 0.0;
        for (const auto* u : from) {
            double best = -1.0;
            for (const auto* w : to) best = std::max(best, cosine(*u, *w));
            sum += best;
        }
        return sum / from.size();
    };
    return rescale((directional(va, vb) + directional(vb, va)) / 2.0);
}

double wmd(const TokenText& a, const TokenText& b, const EmbeddingTable& E) {
    auto nbow = [&](const TokenText& t) {
        std::map<std::string, int> counts;
        for (const auto& tok : t.tokens)
            if (E.find(tok)) counts[tok] += 1;
        return counts;
    };
    auto ca = nbow(a), cb = nbow(b);
    if (ca.empty() || cb.empty())
        throw InputError("text has no in-vocabulary tokens");

    auto total = [](const std::map<std::string, int>& c) {
        return std::accumulate(c.begin(), c.end(), 0,
                               [](int s, const auto& kv) { return s + kv.second; });
    };
    double ta = total(ca), tb = total(cb);
    Distribution p, q;
    std::vector<const std::vector<double>*> sup_a, sup_b;
    for (const auto& [tok, c] : ca) {
        p.masses.push_back(c / ta);
        sup_a.push_back(E.find(tok));
    }
    for (const auto& [tok, c] : cb) {
        q.masses.push_back(c / tb);
        sup_b.push_back(E.find(tok));
    }
    GroundDistance d;
    d.rows = p.size();
    d.cols = q.size();
    for (const auto* u : sup_a)
        for (const auto* w : sup_b) {
            double s = 0.0;
            for (int i = 0; i < E.dimension; ++i) {
                double diff = (*u)[i] - (*w)[i];
                s += diff * diff;
            }
            d.costs.push_back(std::sqrt(s));
        }
    return emd(p, q, d);
}

double cp_normalized_inverse(double wmd_value) {
    if (wmd_value < 0.0) throw InputError("WMD value must be non-negative");
    return 1.0 / (1.0 + wmd_value);
}

CpMetric parse_cp_metric(const std::string& name) {
    if (name == "bleu") return CpMetric::Bleu;
    if (name == "meteor") return CpMetric::Meteor;
    if (name == "embed_average") return CpMetric::EmbedAverage;
    if (name == "vector_extrema") return CpMetric::VectorExtrema;
    if (name == "greedy_match") return CpMetric::GreedyMatch;
    if (name == "wmd") return CpMetric::Wmd;
    throw InputError("unknown metric: " + name);
}

CpMode parse_cp_mode(const std::string& name) {
    if (name == "unmodified") return CpMode::Unmodified;
    if (name == "removed") return CpMode::Removed;
    if (name == "masked") return CpMode::Masked;
    throw InputError("unknown mode: " + name);
}

std::string cp_metric_name(CpMetric metric) {
    switch (metric) {
        case CpMetric::Bleu: return "bleu";
        case CpMetric::Meteor: return "meteor";
        case CpMetric::EmbedAverage: return "embed_average";
        case CpMetric::VectorExtrema: return "vector_extrema";
        case CpMetric::GreedyMatch: return "greedy_match";
        case CpMetric::Wmd: return "wmd";
    }
    return "?";
}

std::string cp_mode_name(CpMode mode) {
    switch (mode) {
        case CpMode::Unmodified: return "unmodified";
        case CpMode::Removed: return "removed";
        case CpMode::Masked: return "masked";
    }
    return "?";
}

CpReport evaluate_cp(const std::vector<TransferPair>& pairs, const StyleLexicon& lexicon,
                     CpMode mode, CpMetric metric, const EmbeddingTable* E,
                     bool exclude_degenerate) {
    bool needs_embeddings = metric != CpMetric::Bleu && metric != CpMetric::Meteor;
    if (needs_embeddings && E == nullptr)
        throw InputError("metric " + cp_metric_name(metric) + " requires embeddings");

    CpReport report;
    report.metric = metric;
    report.mode = mode;
    report.exclude_degenerate = exclude_degenerate;

    auto modify = [&](const TokenText& t) {
        switch (mode) {
            case CpMode::Unmodified: return t;
            case CpMode::Removed: return remove_style(t, lexicon);
            case CpMode::Masked: return mask_style(t, lexicon);
        }
        return t;
    };

    double sum = 0.0;
    int counted = 0;
    for (size_t i = 0; i < pairs.size(); ++i) {
        TokenText x = modify(pairs[i].input);
        TokenText xp = modify(pairs[i].output);
        CpScore score;
        score.pair_id = std::to_string(i);
        try {
            if (x.empty() || xp.empty()) throw InputError("empty text after modification");
            switch (metric) {
                case CpMetric::Bleu: score.value = bleu(x, xp); break;
                case CpMetric::Meteor: score.value = meteor_lite(x, xp); break;
                case CpMetric::EmbedAverage: score.value = embed_average(x, xp, *E); break;
                case CpMetric::VectorExtrema: score.value = vector_extrema(x, xp, *E); break;
                case CpMetric::GreedyMatch: score.value = greedy_match(x, xp, *E); break;
                case CpMetric::Wmd: score.value = wmd(x, xp, *E); break;
            }
        } catch (const InputError&) {
            score.value = 0.0;
            score.degenerate = true;
            ++report.degenerate_count;
        }
        if (!(score.degenerate && exclude_degenerate)) {
            sum += score.value;
            ++counted;
        }
        report.scores.push_back(std::move(score));
    }
    report.mean = counted > 0 ? sum / counted : 0.0;
    return report;
}

}  // namespace steval
