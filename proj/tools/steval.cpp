// steval: style transfer evaluation toolkit.
//
// Subcommands cover the full pipeline: style lexicon construction,
// masking/removal, the three evaluation aspects (style transfer
// intensity, content preservation, naturalness), meta statistics, a
// synthetic flip-model generator, and tradeoff plots. All commands are
// deterministic given identical inputs and seeds.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "steval/content.hpp"
#include "steval/corpus.hpp"
#include "steval/harness.hpp"
#include "steval/lexicon.hpp"
#include "steval/naturalness.hpp"
#include "steval/stats.hpp"
#include "steval/style_eval.hpp"

namespace fs = std::filesystem;
using namespace steval;

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write: " + path);
    out << content;
}

struct TrainFlags {
    double lr = 0.1;
    int epochs = 200;
    double l2 = 1e-4;
    unsigned seed = 17;

    TrainConfig config() const { return {lr, epochs, l2, seed, 1e-7}; }

    void attach(CLI::App* cmd) {
        cmd->add_option("--lr", lr, "learning rate");
        cmd->add_option("--epochs", epochs, "training epochs");
        cmd->add_option("--l2", l2, "L2 regularization");
        cmd->add_option("--seed", seed, "random seed");
    }
};

int cmd_build_lexicon(const std::string& corpus_path, const std::string& labels_path,
                      int k, const std::string& out, const TrainFlags& train) {
    auto corpus = load_labeled_corpus(corpus_path, labels_path);
    auto model = train_style_classifier(corpus, train.config());
    if (k > model.num_features())
        std::cerr << "warning: k=" << k << " exceeds vocabulary size "
                  << model.num_features() << ", clamping\n";
    auto lexicon = extract_lexicon(model, k);
    save_lexicon(lexicon, out);
    return 0;
}

int cmd_mask(const std::string& pairs_path, const std::string& corpus_path,
             const std::string& lexicon_path, const std::string& mode,
             const std::string& out) {
    if (mode != "mask" && mode != "remove") throw InputError("mode must be mask or remove");
    auto lexicon = load_lexicon(lexicon_path);
    auto apply = [&](const TokenText& t) {
        return mode == "mask" ? mask_style(t, lexicon) : remove_style(t, lexicon);
    };
    std::string content;
    if (!pairs_path.empty()) {
        for (const auto& pair : load_pairs(pairs_path))
            content += apply(pair.input).joined() + "\t" + apply(pair.output).joined() +
                       "\t" + pair.source_style.name + "\t" + pair.target_style.name + "\n";
    } else {
        for (const auto& line : read_lines(corpus_path))
            content += apply(tokenize(line)).joined() + "\n";
    }
    write_file(out, content);
    return 0;
}

int cmd_eval_sti(const std::vector<TransferPair>& pairs, const std::string& corpus_path,
                 const std::string& labels_path, const TrainFlags& train,
                 const std::string& report_dir) {
    auto corpus = load_labeled_corpus(corpus_path, labels_path);
    auto model = train_style_classifier(corpus, train.config());
    auto result = corpus_sti(pairs, model);

    std::string csv = "pair_id,sti\n";
    for (size_t i = 0; i < result.per_pair.size(); ++i)
        csv += std::to_string(i) + "," + fmt(result.per_pair[i].value) + "\n";
    write_file(report_dir + "/sti.csv", csv);

    nlohmann::ordered_json summary;
    summary["aspect"] = "sti";
    summary["mean"] = result.mean;
    summary["pairs"] = result.per_pair.size();
    summary["target_style_rate"] = target_style_rate(pairs, model);
    write_file(report_dir + "/sti_summary.json", summary.dump(2) + "\n");
    return 0;
}

int cmd_eval_cp(const std::vector<TransferPair>& pairs, const std::string& lexicon_path,
                const std::string& mode, const std::string& metric,
                const std::string& embeddings_path, bool exclude_degenerate,
                const std::string& report_dir) {
    StyleLexicon lexicon;
    if (!lexicon_path.empty()) lexicon = load_lexicon(lexicon_path);
    else if (mode != "unmodified")
        throw InputError("mode " + mode + " requires --lexicon");
    CpMetric m = parse_cp_metric(metric);
    CpMode md = parse_cp_mode(mode);
    EmbeddingTable table;
    const EmbeddingTable* E = nullptr;
    if (!embeddings_path.empty()) {
        table = load_embeddings(embeddings_path);
        E = &table;
    }
    auto report = evaluate_cp(pairs, lexicon, md, m, E, exclude_degenerate);

    std::string csv = "pair_id,metric,mode,score\n";
    for (const auto& s : report.scores)
        csv += s.pair_id + "," + metric + "," + mode + "," + fmt(s.value) + "\n";
    write_file(report_dir + "/cp.csv", csv);

    nlohmann::ordered_json summary;
    summary["aspect"] = "cp";
    summary["metric"] = metric;
    summary["mode"] = mode;
    summary["mean"] = report.mean;
    summary["count"] = report.scores.size();
    summary["degenerate_count"] = report.degenerate_count;
    write_file(report_dir + "/cp_summary.json", summary.dump(2) + "\n");
    return 0;
}

int cmd_eval_nt(const std::vector<TransferPair>& pairs, const std::string& inputs_path,
                const std::string& lm_corpus_path, const TrainFlags& train,
                const std::string& report_dir) {
    if (inputs_path.empty())
        throw InputError("naturalness evaluation requires --inputs-for-classifier");
    std::vector<TokenText> inputs;
    for (const auto& line : read_lines(inputs_path)) inputs.push_back(tokenize(line));
    std::vector<TokenText> outputs;
    for (const auto& pair : pairs) outputs.push_back(pair.output);
    auto clf = train_adversarial_classifier(inputs, outputs, train.config());

    std::string csv = "pair_id,winner,margin,p_human_input,p_human_output\n";
    int output_wins = 0;
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto d = more_natural(clf, pairs[i]);
        if (d.winner == Winner::Output) ++output_wins;
        csv += std::to_string(i) + "," +
               (d.winner == Winner::Output ? "output" : "input") + "," + fmt(d.margin) +
               "," + fmt(d.p_human_input) + "," + fmt(d.p_human_output) + "\n";
    }
    write_file(report_dir + "/nt.csv", csv);

    nlohmann::ordered_json summary;
    summary["aspect"] = "nt";
    summary["output_more_natural_rate"] =
        static_cast<double>(output_wins) / pairs.size();
    summary["pairs"] = pairs.size();
    write_file(report_dir + "/nt_summary.json", summary.dump(2) + "\n");

    if (!lm_corpus_path.empty()) {
        std::vector<TokenText> lm_corpus;
        for (const auto& line : read_lines(lm_corpus_path))
            lm_corpus.push_back(tokenize(line));
        auto lm = train_ngram_lm(lm_corpus);
        std::string ppl = "text_id,ppl\n";
        for (size_t i = 0; i < pairs.size(); ++i)
            ppl += std::to_string(i) + "," + fmt(lm.perplexity(pairs[i].output)) + "\n";
        write_file(report_dir + "/ppl.csv", ppl);
    }
    return 0;
}

// Per-item metric scores: CSV "item,score" with header.
std::vector<double> load_metric_scores(const std::string& path) {
    auto lines = read_lines(path);
    std::vector<double> scores;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto comma = lines[i].rfind(',');
        if (comma == std::string::npos)
            throw InputError("expected item,score at line " + std::to_string(i + 1));
        try {
            scores.push_back(std::stod(lines[i].substr(comma + 1)));
        } catch (const std::exception&) {
            throw InputError("non-numeric score at line " + std::to_string(i + 1));
        }
    }
    return scores;
}

std::vector<Winner> load_machine_winners(const std::string& path) {
    auto lines = read_lines(path);
    std::vector<Winner> winners;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto first = lines[i].find(',');
        auto second = lines[i].find(',', first + 1);
        if (first == std::string::npos)
            throw InputError("expected decisions CSV at line " + std::to_string(i + 1));
        std::string w = lines[i].substr(first + 1, second == std::string::npos
                                                      ? std::string::npos
                                                      : second - first - 1);
        if (w == "input") winners.push_back(Winner::Input);
        else if (w == "output") winners.push_back(Winner::Output);
        else throw InputError("unknown winner '" + w + "' at line " + std::to_string(i + 1));
    }
    return winners;
}

int cmd_stats(const std::string& ratings_path, const std::string& kind,
              const std::string& metric_scores_path, const std::string& stat, int tau,
              bool absolute, int bootstrap_n, unsigned seed, const std::string& out) {
    nlohmann::ordered_json result;
    result["statistic"] = stat;
    if (stat == "kappa") {
        auto ratings = load_ratings(ratings_path,
                                    kind == "binary" ? RatingKind::Binary : RatingKind::Ordinal);
        if (tau > 0 && ratings.kind == RatingKind::Ordinal) {
            for (auto& row : ratings.values)
                for (int& v : row) v = v >= tau ? 1 : 0;
            result["tau"] = tau;
        }
        auto kappa = fleiss_kappa(ratings);
        result["value"] = kappa.kappa;
        result["degenerate"] = kappa.degenerate;
        result["n"] = ratings.values.size();
    } else if (stat == "pearson") {
        auto ratings = load_ratings(ratings_path, RatingKind::Ordinal);
        auto human = average_raters(ratings);
        auto metric = load_metric_scores(metric_scores_path);
        if (human.size() != metric.size())
            throw InputError("ratings and metric scores disagree on item count");
        auto corr = pearson(human, metric, absolute, bootstrap_n, seed);
        result["value"] = corr.r;
        result["halfwidth"] = corr.halfwidth;
        result["n"] = corr.n;
    } else if (stat == "agreement") {
        auto ratings = load_ratings(ratings_path, RatingKind::Binary);
        std::vector<Winner> human;
        for (const auto& row : ratings.values) {
            int output_votes = 0;
            for (int v : row) output_votes += v;
            // Majority across raters; ties go to input.
            human.push_back(2 * output_votes > ratings.raters ? Winner::Output
                                                              : Winner::Input);
        }
        auto machine_winners = load_machine_winners(metric_scores_path);
        std::vector<NaturalnessDecision> machine;
        for (Winner w : machine_winners) machine.push_back({w, 0.0, 0.0, 0.0});
        result["value"] = agreement(machine, human);
        result["n"] = human.size();
    } else {
        throw InputError("unknown statistic: " + stat);
    }
    std::string text = result.dump(2) + "\n";
    if (out.empty()) std::cout << text;
    else write_file(out, text);
    return 0;
}

int cmd_synthesize(const std::string& corpus_path, const std::string& labels_path,
                   const std::string& lexicon_path, double p, unsigned seed,
                   const std::string& out) {
    auto corpus = load_labeled_corpus(corpus_path, labels_path);
    auto lexicon = load_lexicon(lexicon_path);
    FlipModel model(lexicon, p, seed);
    std::string content;
    for (const auto& pair : model.synthesize(corpus))
        content += pair.input.joined() + "\t" + pair.output.joined() + "\t" +
                   pair.source_style.name + "\t" + pair.target_style.name + "\n";
    write_file(out, content);
    return 0;
}

int cmd_tradeoff(const std::string& runs_dir, const std::string& corpus_path,
                 const std::string& labels_path, const std::string& lexicon_path,
                 const std::string& embeddings_path, const TrainFlags& train,
                 const std::string& out_prefix) {
    std::vector<std::string> run_files;
    if (!fs::is_directory(runs_dir)) throw InputError("not a directory: " + runs_dir);
    for (const auto& entry : fs::directory_iterator(runs_dir))
        if (entry.is_regular_file()) run_files.push_back(entry.path().string());
    std::sort(run_files.begin(), run_files.end());
    if (run_files.empty()) throw InputError("no run files in " + runs_dir);

    std::vector<TradeoffRun> runs;
    for (const auto& file : run_files)
        runs.push_back({fs::path(file).stem().string(), load_pairs(file)});

    auto corpus = load_labeled_corpus(corpus_path, labels_path);
    auto sc_model = train_style_classifier(corpus, train.config());
    auto lexicon = load_lexicon(lexicon_path);
    auto embeddings = load_embeddings(embeddings_path);

    auto points = build_tradeoff(runs, sc_model, lexicon, embeddings, train.config());
    emit_plot(points, out_prefix);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"style transfer evaluation toolkit"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads (never changes results)");

    TrainFlags train;

    // build-lexicon
    auto* lex_cmd = app.add_subcommand("build-lexicon", "train a style classifier and extract a lexicon");
    std::string corpus_path, labels_path, out_path;
    int k = 100;
    lex_cmd->add_option("--corpus", corpus_path, "texts, one per line")->required();
    lex_cmd->add_option("--labels", labels_path, "style names, one per line")->required();
    lex_cmd->add_option("--k", k, "words per style class");
    lex_cmd->add_option("--out", out_path, "output lexicon JSON")->required();
    train.attach(lex_cmd);

    // mask
    auto* mask_cmd = app.add_subcommand("mask", "apply style masking or removal");
    std::string mask_pairs, mask_corpus, mask_lexicon, mask_mode = "mask", mask_out;
    mask_cmd->add_option("--pairs", mask_pairs, "transfer pairs TSV");
    mask_cmd->add_option("--corpus", mask_corpus, "texts, one per line");
    mask_cmd->add_option("--lexicon", mask_lexicon, "lexicon JSON")->required();
    mask_cmd->add_option("--mode", mask_mode, "mask|remove");
    mask_cmd->add_option("--out", mask_out, "output path")->required();

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate one aspect over transfer pairs");
    std::string eval_pairs, aspect, report_dir = ".";
    std::string eval_lexicon, cp_mode = "unmodified", cp_metric = "bleu", eval_embeddings;
    std::string nt_inputs, nt_lm_corpus;
    bool exclude_degenerate = false;
    eval_cmd->add_option("--pairs", eval_pairs, "transfer pairs TSV")->required();
    eval_cmd->add_option("--aspect", aspect, "sti|cp|nt")->required();
    eval_cmd->add_option("--corpus", corpus_path, "classifier training texts (sti)");
    eval_cmd->add_option("--labels", labels_path, "classifier training labels (sti)");
    eval_cmd->add_option("--lexicon", eval_lexicon, "lexicon JSON (cp)");
    eval_cmd->add_option("--mode", cp_mode, "unmodified|removed|masked (cp)");
    eval_cmd->add_option("--metric", cp_metric, "bleu|meteor|embed_average|vector_extrema|greedy_match|wmd (cp)");
    eval_cmd->add_option("--embeddings", eval_embeddings, "embedding table (cp)");
    eval_cmd->add_flag("--exclude-degenerate", exclude_degenerate, "exclude degenerate pairs from the mean (cp)");
    eval_cmd->add_option("--inputs-for-classifier", nt_inputs, "human input texts (nt)");
    eval_cmd->add_option("--lm-corpus", nt_lm_corpus, "language model corpus for perplexity (nt)");
    eval_cmd->add_option("--report", report_dir, "report output directory");
    train.attach(eval_cmd);

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "meta-evaluation statistics");
    std::string ratings_path, ratings_kind = "ordinal", metric_scores, stat, stats_out;
    int tau = 0, bootstrap_n = 1000;
    bool absolute = false;
    unsigned stats_seed = 17;
    stats_cmd->add_option("--ratings", ratings_path, "ratings CSV")->required();
    stats_cmd->add_option("--kind", ratings_kind, "ordinal|binary");
    stats_cmd->add_option("--metric-scores", metric_scores, "per-item metric scores CSV");
    stats_cmd->add_option("--stat", stat, "kappa|pearson|agreement")->required();
    stats_cmd->add_option("--tau", tau, "binning threshold for ordinal naturalness");
    stats_cmd->add_flag("--absolute", absolute, "absolute Pearson correlation");
    stats_cmd->add_option("--bootstrap-n", bootstrap_n, "bootstrap resamples");
    stats_cmd->add_option("--seed", stats_seed, "bootstrap seed");
    stats_cmd->add_option("--out", stats_out, "output JSON (stdout if omitted)");

    // synthesize
    auto* syn_cmd = app.add_subcommand("synthesize", "generate flip-model transfer pairs");
    std::string syn_corpus, syn_labels, syn_lexicon, syn_out;
    double flip_p = 1.0;
    unsigned syn_seed = 17;
    syn_cmd->add_option("--corpus", syn_corpus, "texts, one per line")->required();
    syn_cmd->add_option("--labels", syn_labels, "style names, one per line")->required();
    syn_cmd->add_option("--lexicon", syn_lexicon, "lexicon JSON")->required();
    syn_cmd->add_option("--p", flip_p, "flip probability");
    syn_cmd->add_option("--seed", syn_seed, "sampling seed");
    syn_cmd->add_option("--out", syn_out, "output pairs TSV")->required();

    // tradeoff
    auto* trade_cmd = app.add_subcommand("tradeoff", "build tradeoff points and plots");
    std::string runs_dir, trade_corpus, trade_labels, trade_lexicon, trade_embeddings,
        trade_out = "tradeoff";
    trade_cmd->add_option("--runs", runs_dir, "directory of per-run pairs TSVs")->required();
    trade_cmd->add_option("--corpus", trade_corpus, "classifier training texts")->required();
    trade_cmd->add_option("--labels", trade_labels, "classifier training labels")->required();
    trade_cmd->add_option("--lexicon", trade_lexicon, "lexicon JSON")->required();
    trade_cmd->add_option("--embeddings", trade_embeddings, "embedding table")->required();
    trade_cmd->add_option("--out", trade_out, "output file prefix");
    train.attach(trade_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(lex_cmd))
            return cmd_build_lexicon(corpus_path, labels_path, k, out_path, train);
        if (app.got_subcommand(mask_cmd)) {
            if (mask_pairs.empty() == mask_corpus.empty())
                throw InputError("provide exactly one of --pairs or --corpus");
            return cmd_mask(mask_pairs, mask_corpus, mask_lexicon, mask_mode, mask_out);
        }
        if (app.got_subcommand(eval_cmd)) {
            auto pairs = load_pairs(eval_pairs);
            if (pairs.empty()) throw InputError("no pairs in " + eval_pairs);
            if (aspect == "sti") {
                if (corpus_path.empty() || labels_path.empty())
                    throw InputError("sti requires --corpus and --labels");
                return cmd_eval_sti(pairs, corpus_path, labels_path, train, report_dir);
            }
            if (aspect == "cp")
                return cmd_eval_cp(pairs, eval_lexicon, cp_mode, cp_metric,
                                   eval_embeddings, exclude_degenerate, report_dir);
            if (aspect == "nt")
                return cmd_eval_nt(pairs, nt_inputs, nt_lm_corpus, train, report_dir);
            throw InputError("unknown aspect: " + aspect);
        }
        if (app.got_subcommand(stats_cmd))
            return cmd_stats(ratings_path, ratings_kind, metric_scores, stat, tau,
                             absolute, bootstrap_n, stats_seed, stats_out);
        if (app.got_subcommand(syn_cmd))
            return cmd_synthesize(syn_corpus, syn_labels, syn_lexicon, flip_p, syn_seed,
                                  syn_out);
        if (app.got_subcommand(trade_cmd))
            return cmd_tradeoff(runs_dir, trade_corpus, trade_labels, trade_lexicon,
                                trade_embeddings, train, trade_out);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
