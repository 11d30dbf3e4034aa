#include "steval/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "steval/naturalness.hpp"
#include "steval/style_eval.hpp"

namespace steval {

FlipModel::FlipModel(const StyleLexicon& lexicon, double flip_probability, unsigned seed)
    : lexicon_(lexicon), p_(flip_probability), seed_(seed) {
    if (p_ < 0.0 || p_ > 1.0) throw InputError("flip probability out of [0,1]");
    if (lexicon.entries.size() != 2)
        throw InputError("flip model requires a binary lexicon");
    for (int s = 0; s < 2; ++s)
        if (lexicon.entries[1 - s].empty())
            throw InputError("opposite-class word list is empty");
    // Fixed substitution table, sampled once per model.
    std::mt19937 rng(seed);
    for (int s = 0; s < 2; ++s) {
        const auto& opposite = lexicon.entries[1 - s];
        std::uniform_int_distribution<size_t> pick(0, opposite.size() - 1);
        for (const auto& entry : lexicon.entries[s])
            substitution_.emplace(entry.word, opposite[pick(rng)].word);
    }
}

std::vector<TransferPair> FlipModel::synthesize(const LabeledCorpus& corpus) const {
    if (corpus.styles.size() != 2)
        throw InputError("flip model requires a binary corpus");
    std::mt19937 rng(seed_ + 1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<TransferPair> pairs;
    for (size_t i = 0; i < corpus.texts.size(); ++i) {
        const StyleLabel& source = corpus.labels[i];
        const StyleLabel& target = corpus.styles.at(1 - source.id);
        TokenText out;
        for (const auto& tok : corpus.texts[i].tokens) {
            auto it = substitution_.find(tok);
            bool source_word = it != substitution_.end() &&
                               lexicon_.membership_.at(tok) == source.id;
            double roll = coin(rng);  // consumed for every token: p-independent stream
            if (source_word && roll < p_)
                out.tokens.push_back(it->second);
            else
                out.tokens.push_back(tok);
        }
        out.raw = out.joined();
        pairs.push_back({corpus.texts[i], std::move(out), source, target});
    }
    return pairs;
}

std::vector<TradeoffPoint> build_tradeoff(const std::vector<TradeoffRun>& runs,
                                          const LinearModel& sc_model,
                                          const StyleLexicon& lexicon,
                                          const EmbeddingTable& embeddings,
                                          const TrainConfig& clf_cfg) {
    if (runs.empty()) throw InputError("no tradeoff runs");
    std::vector<TradeoffPoint> points;
    for (const auto& run : runs) {
        TradeoffPoint pt;
        pt.label = run.label;
        pt.sti_mean = corpus_sti(run.pairs, sc_model).mean;

        auto wmd_report = evaluate_cp(run.pairs, lexicon, CpMode::Masked, CpMetric::Wmd,
                                      &embeddings);
        double cp_sum = 0.0;
        for (const auto& score : wmd_report.scores)
            cp_sum += score.degenerate ? 0.0 : cp_normalized_inverse(score.value);
        pt.cp_mean = cp_sum / wmd_report.scores.size();

        std::vector<TokenText> inputs, outputs;
        for (const auto& pair : run.pairs) {
            inputs.push_back(pair.input);
            outputs.push_back(pair.output);
        }
        auto clf = train_adversarial_classifier(inputs, outputs, clf_cfg);
        pt.nt_rate = output_more_natural_rate(clf, run.pairs);
        points.push_back(std::move(pt));
    }
    std::stable_sort(points.begin(), points.end(),
                     [](const TradeoffPoint& a, const TradeoffPoint& b) {
                         return a.sti_mean < b.sti_mean;
                     });
    return points;
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void write_svg(const std::vector<TradeoffPoint>& points, const std::string& path,
               const std::string& y_label, double TradeoffPoint::*y_field) {
    const double width = 640, height = 480;
    const double ml = 70, mr = 20, mt = 20, mb = 50;

    double xmin = points[0].sti_mean, xmax = xmin;
    double ymin = points[0].*y_field, ymax = ymin;
    for (const auto& p : points) {
        xmin = std::min(xmin, p.sti_mean);
        xmax = std::max(xmax, p.sti_mean);
        ymin = std::min(ymin, p.*y_field);
        ymax = std::max(ymax, p.*y_field);
    }
    // 5% padding; degenerate ranges get a fixed half-width.
    double xpad = (xmax - xmin) > 0 ? 0.05 * (xmax - xmin) : 0.5;
    double ypad = (ymax - ymin) > 0 ? 0.05 * (ymax - ymin) : 0.5;
    xmin -= xpad;
    xmax += xpad;
    ymin -= ypad;
    ymax += ypad;

    auto sx = [&](double x) {
        return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr);
    };
    auto sy = [&](double y) {
        return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb);
    };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write plot: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
        << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << height - mb << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-size=\"14\">style transfer intensity</text>\n";
    out << "<text x=\"18\" y=\"" << (mt + height - mb) / 2
        << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 18 "
        << (mt + height - mb) / 2 << ")\">" << y_label << "</text>\n";
    // Min/max tick labels on both axes.
    out << "<text x=\"" << fmt(sx(xmin + xpad)) << "\" y=\"" << height - mb + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(xmin + xpad)
        << "</text>\n";
    out << "<text x=\"" << fmt(sx(xmax - xpad)) << "\" y=\"" << height - mb + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(xmax - xpad)
        << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << fmt(sy(ymin + ypad))
        << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(ymin + ypad) << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << fmt(sy(ymax - ypad))
        << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(ymax - ypad) << "</text>\n";
    for (const auto& p : points) {
        out << "<circle cx=\"" << fmt(sx(p.sti_mean)) << "\" cy=\"" << fmt(sy(p.*y_field))
            << "\" r=\"4\" fill=\"steelblue\"/>\n";
        out << "<text x=\"" << fmt(sx(p.sti_mean) + 6) << "\" y=\""
            << fmt(sy(p.*y_field) - 6) << "\" font-size=\"11\">" << p.label
            << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace

void emit_plot(const std::vector<TradeoffPoint>& points, const std::string& prefix) {
    if (points.empty()) throw InputError("no tradeoff points");
    std::ofstream csv(prefix + "_points.csv", std::ios::binary);
    if (!csv) throw InputError("cannot write: " + prefix + "_points.csv");
    csv << "label,sti,cp,nt\n";
    for (const auto& p : points)
        csv << p.label << "," << fmt(p.sti_mean) << "," << fmt(p.cp_mean) << ","
            << fmt(p.nt_rate) << "\n";
    write_svg(points, prefix + "_cp_vs_sti.svg", "content preservation",
              &TradeoffPoint::cp_mean);
    write_svg(points, prefix + "_nt_vs_sti.svg", "naturalness",
              &TradeoffPoint::nt_rate);
}

}  // namespace steval
