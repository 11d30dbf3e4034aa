#ifndef STEVAL_CONTENT_HPP
#define STEVAL_CONTENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "steval/corpus.hpp"
#include "steval/lexicon.hpp"
#include "steval/types.hpp"

namespace steval {

enum class CpMetric { Bleu, Meteor, EmbedAverage, VectorExtrema, GreedyMatch, Wmd };
enum class CpMode { Unmodified, Removed, Masked };

CpMetric parse_cp_metric(const std::string& name);
CpMode parse_cp_mode(const std::string& name);
std::string cp_metric_name(CpMetric metric);
std::string cp_mode_name(CpMode mode);

// Sentence BLEU, max order 4, clipped modified precisions, add-one
// smoothing on numerator and denominator for n >= 2, zero when unigram
// precision is zero.
double bleu(const TokenText& reference, const TokenText& candidate);

// Corpus BLEU: clipped counts aggregated over all pairs before combining.
double corpus_bleu(const std::vector<TokenText>& references,
                   const std::vector<TokenText>& candidates);

// Exact + Porter-stem alignment, F_mean = PR/(0.9P + 0.1R),
// penalty = 0.5 (chunks/m)^3.
double meteor_lite(const TokenText& reference, const TokenText& candidate);

// Embedding-based similarities, cosine rescaled from [-1,1] to [0,1].
// All throw InputError when a side has no in-vocabulary token.
double embed_average(const TokenText& a, const TokenText& b, const EmbeddingTable& E);
double vector_extrema(const TokenText& a, const TokenText& b, const EmbeddingTable& E);
double greedy_match(const TokenText& a, const TokenText& b, const EmbeddingTable& E);

// Word Mover's Distance: EMD over count-weighted nBOW distributions with
// Euclidean embedding ground distances.
double wmd(const TokenText& a, const TokenText& b, const EmbeddingTable& E);

// 1/(1+w): maps a WMD value onto (0,1], strictly decreasing.
double cp_normalized_inverse(double wmd_value);

struct CpScore {
    std::string pair_id;
    double value = 0.0;
    bool degenerate = false;
};

struct CpReport {
    CpMetric metric = CpMetric::Bleu;
    CpMode mode = CpMode::Unmodified;
    std::vector<CpScore> scores;
    double mean = 0.0;
    int degenerate_count = 0;
    bool exclude_degenerate = false;
};

// Applies the chosen modification to both sides of every pair, then the
// metric. Degenerate pairs (empty or all-OOV after modification) score 0
// and are tallied; with exclude_degenerate they are left out of the mean.
CpReport evaluate_cp(const std::vector<TransferPair>& pairs, const StyleLexicon& lexicon,
                     CpMode mode, CpMetric metric, const EmbeddingTable* E,
                     bool exclude_degenerate = false);

}  // namespace steval

#endif
