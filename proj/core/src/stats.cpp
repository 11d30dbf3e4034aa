#include "steval/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace steval {

KappaResult fleiss_kappa(const RatingsTable& ratings) {
    const int n_items = static_cast<int>(ratings.values.size());
    const int n_raters = ratings.raters;
    if (n_items < 2 || n_raters < 2)
        throw InputError("Fleiss' kappa needs at least 2 items and 2 raters");

    // Dense category remap so ordinal and binary tables share one path.
    std::map<int, int> categories;
    for (const auto& row : ratings.values)
        for (int v : row) categories.emplace(v, 0);
    int next = 0;
    for (auto& [value, idx] : categories) idx = next++;
    const int n_cats = next;

    std::vector<std::vector<int>> tally(n_items, std::vector<int>(n_cats, 0));
    for (int i = 0; i < n_items; ++i)
        for (int v : ratings.values[i]) tally[i][categories[v]] += 1;

    double p_bar = 0.0;
    for (int i = 0; i < n_items; ++i) {
        double agree = 0.0;
        for (int c = 0; c < n_cats; ++c)
            agree += static_cast<double>(tally[i][c]) * (tally[i][c] - 1);
        p_bar += agree / (static_cast<double>(n_raters) * (n_raters - 1));
    }
    p_bar /= n_items;

    KappaResult result;
    double pe = 0.0;
    for (int c = 0; c < n_cats; ++c) {
        double marginal = 0.0;
        for (int i = 0; i < n_items; ++i) marginal += tally[i][c];
        marginal /= static_cast<double>(n_items) * n_raters;
        result.category_proportions.push_back(marginal);
        pe += marginal * marginal;
    }

    if (pe >= 1.0) {
        // Single category used unanimously; kappa = 1 by convention.
        result.kappa = 1.0;
        result.degenerate = true;
        return result;
    }
    result.kappa = (p_bar - pe) / (1.0 - pe);
    return result;
}

std::vector<bool> bin_absolute(const std::vector<int>& scores, int tau) {
    std::vector<bool> natural;
    natural.reserve(scores.size());
    for (int s : scores) natural.push_back(s >= tau);
    return natural;
}

namespace {

double pearson_r(const std::vector<double>& a, const std::vector<double>& b) {
    const size_t n = a.size();
    double ma = 0.0, mb = 0.0;
    for (size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (size_t i = 0; i < n; ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    if (saa == 0.0 || sbb == 0.0)
        throw InputError("Pearson correlation undefined for constant input");
    return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

}  // namespace

CorrelationResult pearson(const std::vector<double>& a, const std::vector<double>& b,
                          bool absolute, int bootstrap_n, unsigned seed) {
    if (a.size() != b.size()) throw InputError("sequence length mismatch");
    if (a.size() < 3) throw InputError("need at least 3 points");

    CorrelationResult result;
    result.n = static_cast<int>(a.size());
    double r = pearson_r(a, b);
    result.r = absolute ? std::fabs(r) : r;

    if (bootstrap_n > 0) {
        std::vector<double> rs;
        rs.reserve(bootstrap_n);
        std::vector<double> ra(a.size()), rb(b.size());
        for (int t = 0; t < bootstrap_n; ++t) {
            // One generator per resample index: parallel resampling would
            // reproduce the serial sequence.
            std::mt19937 rng(seed + static_cast<unsigned>(t) * 2654435761u);
            std::uniform_int_distribution<size_t> pick(0, a.size() - 1);
            for (size_t i = 0; i < a.size(); ++i) {
                size_t j = pick(rng);
                ra[i] = a[j];
                rb[i] = b[j];
            }
            try {
                double rr = pearson_r(ra, rb);
                rs.push_back(absolute ? std::fabs(rr) : rr);
            } catch (const InputError&) {
                // constant resample, skip
            }
        }
        if (rs.size() >= 2) {
            std::sort(rs.begin(), rs.end());
            auto quantile = [&](double q) {
                double pos = q * (rs.size() - 1);
                size_t lo = static_cast<size_t>(pos);
                size_t hi = std::min(lo + 1, rs.size() - 1);
                double frac = pos - lo;
                return rs[lo] * (1.0 - frac) + rs[hi] * frac;
            };
            result.halfwidth = (quantile(0.975) - quantile(0.025)) / 2.0;
        }
    }
    return result;
}

std::vector<double> average_raters(const RatingsTable& ratings) {
    std::vector<double> means;
    means.reserve(ratings.values.size());
    for (const auto& row : ratings.values) {
        double sum = 0.0;
        for (int v : row) sum += v;
        means.push_back(sum / row.size());
    }
    return means;
}

}  // namespace steval
