#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <thread>

#include "parmine/alignment.hpp"
#include "parmine/config.hpp"
#include "parmine/corpus.hpp"
#include "parmine/evaluation.hpp"
#include "parmine/freq_dictionary.hpp"
#include "parmine/keywords.hpp"
#include "parmine/morphology.hpp"
#include "parmine/translation.hpp"
#include "parmine/util.hpp"

namespace {

using namespace parmine;

unsigned default_workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n ? n : 1;
}

std::string uniform_lang(const std::vector<Document>& docs, const std::string& origin) {
    std::string lang;
    for (const auto& doc : docs) {
        if (lang.empty()) {
            lang = doc.lang;
        } else if (doc.lang != lang) {
            throw ConfigError(origin + ": mixed languages '" + lang + "' and '" + doc.lang + "'");
        }
    }
    return lang;
}

std::string profile_lang(const std::vector<KeywordProfile>& profiles, const std::string& origin) {
    std::string lang;
    for (const auto& p : profiles) {
        if (lang.empty()) {
            lang = p.lang;
        } else if (p.lang != lang) {
            throw ConfigError(origin + ": mixed languages '" + lang + "' and '" + p.lang + "'");
        }
    }
    return lang;
}

void apply_match_config(const Config& cfg, MatchConfig& mc) {
    mc.min_shared_keywords = cfg.get_int("min_shared_keywords", mc.min_shared_keywords);
    mc.profile_size = cfg.get_int("profile_size", mc.profile_size);
    mc.min_char_count = cfg.get_int("min_char_count", mc.min_char_count);
    mc.require_both_sides_long =
        cfg.get_bool("require_both_sides_long", mc.require_both_sides_long);
    mc.max_wordcount_ratio_diff =
        cfg.get_real("max_wordcount_ratio_diff", mc.max_wordcount_ratio_diff);
    mc.max_capitalized_diff = cfg.get_int("max_capitalized_diff", mc.max_capitalized_diff);
    mc.max_numbercount_diff = cfg.get_int("max_numbercount_diff", mc.max_numbercount_diff);
    mc.max_number_value_diff = cfg.get_real("max_number_value_diff", mc.max_number_value_diff);
}

void validate_match_config(const MatchConfig& mc) {
    if (mc.min_shared_keywords < 0 || mc.profile_size < 0 || mc.min_char_count < 0 ||
        mc.max_wordcount_ratio_diff < 0.0 || mc.max_capitalized_diff < 0 ||
        mc.max_numbercount_diff < 0 || mc.max_number_value_diff < 0.0) {
        throw ConfigError("match thresholds must be non-negative");
    }
    if (mc.min_shared_keywords > mc.profile_size) {
        throw ConfigError("min_shared_keywords must not exceed profile_size");
    }
}

struct ExtractResult {
    std::vector<KeywordProfile> profiles;
    std::unordered_map<std::string, SurfaceStats> stats;
};

ExtractResult extract_all(const std::vector<Document>& docs, const MorphDictionary& md,
                          const FrequencyDictionary& fd, const StopwordSet& stop,
                          const TranslationDictionary& td, const Bm25Params& bp,
                          std::size_t top_k, unsigned workers) {
    ExtractResult out;
    out.profiles.resize(docs.size());
    std::vector<SurfaceStats> stats(docs.size());
    parallel_chunks(docs.size(), workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            out.profiles[i] = extract_keywords(docs[i], md, fd, stop, td, bp, top_k);
            stats[i] = surface_stats(tokenize(docs[i].text, docs[i].lang), docs[i].text);
        }
    });
    for (std::size_t i = 0; i < docs.size(); ++i) {
        out.stats.emplace(docs[i].id, std::move(stats[i]));
    }
    return out;
}

std::unordered_map<std::string, Document> doc_map(const std::vector<Document>& side_a,
                                                  const std::vector<Document>& side_b) {
    std::unordered_map<std::string, Document> docs;
    for (const auto* side : {&side_a, &side_b}) {
        for (const auto& doc : *side) {
            if (!docs.emplace(doc.id, doc).second) {
                throw ConfigError("duplicate document id across corpora: '" + doc.id + "'");
            }
        }
    }
    return docs;
}

std::unordered_map<std::string, SurfaceStats> merged_stats(const std::string& path_a,
                                                           const std::string& path_b) {
    auto stats = load_surface_stats(path_a);
    for (auto& [id, st] : load_surface_stats(path_b)) {
        if (!stats.emplace(id, std::move(st)).second) {
            throw ConfigError("duplicate document id across stats files: '" + id + "'");
        }
    }
    return stats;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mines translation-equivalent document pairs from two monolingual corpora"};
    app.require_subcommand(1);

    unsigned workers = default_workers();
    bool verbose = false;
    auto* workers_opt =
        app.add_option("--workers", workers, "worker thread count")->capture_default_str();
    app.add_flag("--verbose", verbose, "extra progress and debug output");

    // build-freqdict
    struct {
        std::string corpus, morph, out, lang, noun_tag = "noun";
        std::int64_t prune = 2;
    } bf;
    auto* bf_cmd = app.add_subcommand("build-freqdict", "count lemma frequencies over a corpus");
    bf_cmd->fallthrough();
    bf_cmd->add_option("corpus", bf.corpus, "corpus JSON-lines file")->required();
    bf_cmd->add_option("morph", bf.morph, "morphological dictionary TSV")->required();
    bf_cmd->add_option("out", bf.out, "output frequency dictionary TSV")->required();
    bf_cmd->add_option("--lang", bf.lang, "expected corpus language");
    bf_cmd->add_option("--noun-tag", bf.noun_tag, "pos tag marking nouns")->capture_default_str();
    bf_cmd->add_option("--prune-threshold", bf.prune,
                       "drop lemmas occurring this many times or fewer")
        ->capture_default_str();
    bf_cmd->callback([&]() {
        auto docs = load_corpus(bf.corpus);
        std::string lang = uniform_lang(docs, bf.corpus);
        if (lang.empty()) lang = bf.lang;
        if (!bf.lang.empty() && lang != bf.lang) {
            throw ConfigError(bf.corpus + ": language '" + lang + "' does not match --lang '" +
                              bf.lang + "'");
        }
        if (docs.empty()) std::cerr << "warning: corpus " << bf.corpus << " is empty\n";
        auto md = load_morph_dictionary(bf.morph, lang, bf.noun_tag);
        auto fd = build_frequency_dictionary(docs, md, bf.prune, workers);
        save_frequency_dictionary(fd, bf.out);
        std::cout << "doc_count=" << fd.doc_count << " retained_lemmas=" << fd.term_stats.size()
                  << " avg_doc_len=" << format_double(fd.avg_doc_len) << '\n';
    });

    // resolve-translations
    struct {
        std::string raw, freqdict, out, src_lang, dst_lang;
    } rt;
    auto* rt_cmd = app.add_subcommand("resolve-translations",
                                      "pick one sense per lemma by target-corpus frequency");
    rt_cmd->fallthrough();
    rt_cmd->add_option("raw", rt.raw, "multi-sense translation table TSV")->required();
    rt_cmd->add_option("freqdict", rt.freqdict, "target-language frequency dictionary")
        ->required();
    rt_cmd->add_option("out", rt.out, "output single-sense dictionary TSV")->required();
    rt_cmd->add_option("--src-lang", rt.src_lang, "source language code")->required();
    rt_cmd->add_option("--dst-lang", rt.dst_lang, "target language code")->required();
    rt_cmd->callback([&]() {
        auto fd = load_frequency_dictionary(rt.freqdict);
        if (!fd.lang.empty() && fd.lang != rt.dst_lang) {
            throw ConfigError(rt.freqdict + ": frequency dictionary language '" + fd.lang +
                              "' does not match --dst-lang '" + rt.dst_lang + "'");
        }
        auto raw = load_raw_table(rt.raw, rt.src_lang, rt.dst_lang);
        auto td = resolve_senses(raw, fd);
        save_translation_dictionary(td, rt.out);
        std::cout << "entries=" << td.entries.size() << '\n';
    });

    // extract
    struct {
        std::string corpus, morph, freqdict, translations, profiles_out, stats_out;
        std::string stopwords, config, dst_lang, noun_tag = "noun";
        std::int64_t top_k = 12;
        double k1 = 2.0, b = 0.75;
    } ex;
    auto* ex_cmd =
        app.add_subcommand("extract", "compute keyword profiles and surface statistics");
    ex_cmd->fallthrough();
    ex_cmd->add_option("corpus", ex.corpus, "corpus JSON-lines file")->required();
    ex_cmd->add_option("morph", ex.morph, "morphological dictionary TSV")->required();
    ex_cmd->add_option("freqdict", ex.freqdict, "frequency dictionary TSV")->required();
    ex_cmd->add_option("translations", ex.translations, "resolved translation dictionary TSV")
        ->required();
    ex_cmd->add_option("profiles-out", ex.profiles_out, "output profiles JSON-lines")->required();
    ex_cmd->add_option("stats-out", ex.stats_out, "output surface stats JSON-lines")->required();
    ex_cmd->add_option("--stopwords", ex.stopwords, "stopword list, one lemma per line");
    ex_cmd->add_option("--dst-lang", ex.dst_lang, "translation target language code");
    ex_cmd->add_option("--noun-tag", ex.noun_tag, "pos tag marking nouns")->capture_default_str();
    auto* ex_topk = ex_cmd->add_option("--top-k", ex.top_k, "keywords per profile");
    auto* ex_k1 = ex_cmd->add_option("--k1", ex.k1, "BM25 k1");
    auto* ex_b = ex_cmd->add_option("--b", ex.b, "BM25 b");
    ex_cmd->add_option("--config", ex.config, "key=value file with top_k, bm25_k1, bm25_b");
    ex_cmd->callback([&]() {
        Bm25Params bp;
        std::int64_t top_k = 12;
        if (!ex.config.empty()) {
            Config cfg = Config::load(ex.config);
            top_k = cfg.get_int("top_k", top_k);
            bp.k1 = cfg.get_real("bm25_k1", bp.k1);
            bp.b = cfg.get_real("bm25_b", bp.b);
            cfg.ensure_consumed();
        }
        if (ex_topk->count()) top_k = ex.top_k;
        if (ex_k1->count()) bp.k1 = ex.k1;
        if (ex_b->count()) bp.b = ex.b;
        if (top_k < 1) throw ConfigError("top-k must be at least 1");

        auto docs = load_corpus(ex.corpus);
        std::string lang = uniform_lang(docs, ex.corpus);
        auto md = load_morph_dictionary(ex.morph, lang, ex.noun_tag);
        auto fd = load_frequency_dictionary(ex.freqdict);
        if (!fd.lang.empty() && !lang.empty() && fd.lang != lang) {
            throw ConfigError(ex.freqdict + ": frequency dictionary language '" + fd.lang +
                              "' does not match corpus language '" + lang + "'");
        }
        StopwordSet stop;
        if (!ex.stopwords.empty()) stop = load_stopwords(ex.stopwords);
        auto td = load_translation_dictionary(ex.translations, lang, ex.dst_lang);
        auto result = extract_all(docs, md, fd, stop, td, bp,
                                  static_cast<std::size_t>(top_k), workers);
        save_profiles(result.profiles, ex.profiles_out);
        save_surface_stats(result.stats, ex.stats_out);
        std::cout << "profiles=" << result.profiles.size() << '\n';
    });

    // align
    struct {
        std::string profiles_a, profiles_b, stats_a, stats_b, out;
        std::string rejected, td_ab, td_ba, config;
        MatchConfig flags;
    } al;
    auto* al_cmd = app.add_subcommand("align", "match profiles into candidate document pairs");
    al_cmd->fallthrough();
    al_cmd->add_option("profiles-a", al.profiles_a, "side A profiles JSON-lines")->required();
    al_cmd->add_option("profiles-b", al.profiles_b, "side B profiles JSON-lines")->required();
    al_cmd->add_option("stats-a", al.stats_a, "side A surface stats JSON-lines")->required();
    al_cmd->add_option("stats-b", al.stats_b, "side B surface stats JSON-lines")->required();
    al_cmd->add_option("out", al.out, "output accepted pairs JSON-lines")->required();
    al_cmd->add_option("--rejected", al.rejected, "write rejected candidates TSV here");
    al_cmd->add_option("--td-ab", al.td_ab, "A-to-B translation dictionary for evidence");
    al_cmd->add_option("--td-ba", al.td_ba, "B-to-A translation dictionary for evidence");
    al_cmd->add_option("--config", al.config, "key=value file with match thresholds");
    auto* al_shared = al_cmd->add_option("--min-shared-keywords", al.flags.min_shared_keywords);
    auto* al_profile = al_cmd->add_option("--profile-size", al.flags.profile_size);
    auto* al_chars = al_cmd->add_option("--min-char-count", al.flags.min_char_count);
    auto* al_both = al_cmd->add_flag("--require-both-sides-long",
                                     al.flags.require_both_sides_long);
    auto* al_wc = al_cmd->add_option("--max-wordcount-ratio-diff",
                                     al.flags.max_wordcount_ratio_diff);
    auto* al_cap = al_cmd->add_option("--max-capitalized-diff", al.flags.max_capitalized_diff);
    auto* al_nc = al_cmd->add_option("--max-numbercount-diff", al.flags.max_numbercount_diff);
    auto* al_nv = al_cmd->add_option("--max-number-value-diff", al.flags.max_number_value_diff);
    al_cmd->callback([&]() {
        MatchConfig mc;
        if (!al.config.empty()) {
            Config cfg = Config::load(al.config);
            apply_match_config(cfg, mc);
            cfg.ensure_consumed();
        }
        if (al_shared->count()) mc.min_shared_keywords = al.flags.min_shared_keywords;
        if (al_profile->count()) mc.profile_size = al.flags.profile_size;
        if (al_chars->count()) mc.min_char_count = al.flags.min_char_count;
        if (al_both->count()) mc.require_both_sides_long = al.flags.require_both_sides_long;
        if (al_wc->count()) mc.max_wordcount_ratio_diff = al.flags.max_wordcount_ratio_diff;
        if (al_cap->count()) mc.max_capitalized_diff = al.flags.max_capitalized_diff;
        if (al_nc->count()) mc.max_numbercount_diff = al.flags.max_numbercount_diff;
        if (al_nv->count()) mc.max_number_value_diff = al.flags.max_number_value_diff;
        validate_match_config(mc);

        auto profiles_a = load_profiles(al.profiles_a);
        auto profiles_b = load_profiles(al.profiles_b);
        std::string lang_a = profile_lang(profiles_a, al.profiles_a);
        std::string lang_b = profile_lang(profiles_b, al.profiles_b);
        if (!lang_a.empty() && lang_a == lang_b) {
            throw ConfigError("profile sides share the language '" + lang_a + "'");
        }
        auto stats = merged_stats(al.stats_a, al.stats_b);

        TranslationDictionary td_ab, td_ba;
        AlignOptions opts;
        opts.keep_rejected = !al.rejected.empty();
        opts.workers = workers;
        if (!al.td_ab.empty()) {
            td_ab = load_translation_dictionary(al.td_ab, lang_a, lang_b);
            opts.td_ab = &td_ab;
        }
        if (!al.td_ba.empty()) {
            td_ba = load_translation_dictionary(al.td_ba, lang_b, lang_a);
            opts.td_ba = &td_ba;
        }

        auto result = align(profiles_a, profiles_b, stats, mc, opts);
        save_pairs(result.accepted, al.out);
        if (!al.rejected.empty()) save_rejected_tsv(result.rejected, mc, al.rejected);
        std::cout << "accepted=" << result.accepted.size()
                  << " rejected=" << result.rejected.size() << '\n';
    });

    // emit
    struct {
        std::string pairs, corpus_a, corpus_b, out;
    } em;
    auto* em_cmd = app.add_subcommand("emit", "write the parallel corpus for accepted pairs");
    em_cmd->fallthrough();
    em_cmd->add_option("pairs", em.pairs, "accepted pairs JSON-lines")->required();
    em_cmd->add_option("corpus-a", em.corpus_a, "side A corpus JSON-lines")->required();
    em_cmd->add_option("corpus-b", em.corpus_b, "side B corpus JSON-lines")->required();
    em_cmd->add_option("out", em.out, "output parallel corpus JSON-lines")->required();
    em_cmd->callback([&]() {
        auto pairs = load_pairs(em.pairs);
        auto docs = doc_map(load_corpus(em.corpus_a), load_corpus(em.corpus_b));
        emit_parallel_corpus(pairs, docs, em.out);
        std::cout << "pairs=" << pairs.size() << '\n';
    });

    // synth
    struct {
        std::string spec, out_dir;
    } sy;
    auto* sy_cmd = app.add_subcommand("synth", "generate a synthetic bilingual corpus with gold pairs");
    sy_cmd->fallthrough();
    sy_cmd->add_option("spec", sy.spec, "synthetic spec key=value file")->required();
    sy_cmd->add_option("out-dir", sy.out_dir, "output directory")->required();
    sy_cmd->callback([&]() {
        auto spec = load_synthetic_spec(sy.spec);
        auto out = generate_synthetic(spec);
        std::filesystem::create_directories(sy.out_dir);
        auto in_dir = [&](const char* name) {
            return (std::filesystem::path(sy.out_dir) / name).string();
        };
        save_corpus(out.docs_a, in_dir("corpus_a.jsonl"));
        save_corpus(out.docs_b, in_dir("corpus_b.jsonl"));
        save_morph_dictionary(out.morph_a, in_dir("morph_a.tsv"));
        save_morph_dictionary(out.morph_b, in_dir("morph_b.tsv"));
        save_raw_table(out.table_ab, in_dir("trans_ab.tsv"));
        save_raw_table(out.table_ba, in_dir("trans_ba.tsv"));
        save_gold_pairs(out.gold, in_dir("gold.tsv"));
        std::cout << "docs_a=" << out.docs_a.size() << " docs_b=" << out.docs_b.size()
                  << " gold=" << out.gold.size() << '\n';
    });

    // evaluate
    struct {
        std::string pairs, gold, rejected, report;
    } ev;
    auto* ev_cmd = app.add_subcommand("evaluate", "score aligned pairs against gold pairs");
    ev_cmd->fallthrough();
    ev_cmd->add_option("pairs", ev.pairs, "accepted pairs JSON-lines")->required();
    ev_cmd->add_option("gold", ev.gold, "gold pairs TSV")->required();
    ev_cmd->add_option("--rejected", ev.rejected, "rejected candidates TSV for the histogram");
    ev_cmd->add_option("--report", ev.report, "write the report JSON here");
    ev_cmd->callback([&]() {
        auto output = load_pairs(ev.pairs);
        auto gold = load_gold_pairs(ev.gold);
        std::vector<CandidatePair> rejected;
        if (!ev.rejected.empty()) rejected = load_rejected_tsv(ev.rejected);
        auto report = evaluate(output, gold, rejected);
        if (!ev.report.empty()) save_report(report, ev.report);
        std::cout << format_report(report);
    });

    // pipeline
    struct {
        std::string config;
    } pl;
    auto* pl_cmd = app.add_subcommand("pipeline", "run every stage from two corpora to the parallel corpus");
    pl_cmd->fallthrough();
    pl_cmd->add_option("--config", pl.config, "pipeline key=value config file")->required();
    pl_cmd->callback([&]() {
        auto started = std::chrono::steady_clock::now();
        Config cfg = Config::load(pl.config);

        std::string lang_a = cfg.get_string("lang_a");
        std::string lang_b = cfg.get_string("lang_b");
        if (lang_a == lang_b) throw ConfigError("lang_a and lang_b must differ");
        std::string out_dir = cfg.get_string("out_dir");
        std::string noun_tag = cfg.get_string("noun_tag", "noun");
        std::int64_t prune = cfg.get_int("freq_prune_threshold", 2);
        std::int64_t top_k = cfg.get_int("top_k", 12);
        if (top_k < 1) throw ConfigError("top_k must be at least 1");
        Bm25Params bp;
        bp.k1 = cfg.get_real("bm25_k1", bp.k1);
        bp.b = cfg.get_real("bm25_b", bp.b);
        MatchConfig mc;
        apply_match_config(cfg, mc);
        validate_match_config(mc);
        unsigned pipeline_workers =
            workers_opt->count()
                ? workers
                : static_cast<unsigned>(cfg.get_int("workers", static_cast<std::int64_t>(workers)));

        auto docs_a = load_corpus(cfg.get_string("corpus_a"));
        auto docs_b = load_corpus(cfg.get_string("corpus_b"));
        for (const auto& [docs, lang, key] :
             {std::tuple{&docs_a, &lang_a, "corpus_a"}, {&docs_b, &lang_b, "corpus_b"}}) {
            std::string found = uniform_lang(*docs, key);
            if (!found.empty() && found != *lang) {
                throw ConfigError(std::string(key) + ": language '" + found +
                                  "' does not match configured '" + *lang + "'");
            }
        }

        auto morph_a = load_morph_dictionary(cfg.get_string("morph_a"), lang_a, noun_tag);
        auto morph_b = load_morph_dictionary(cfg.get_string("morph_b"), lang_b, noun_tag);

        std::filesystem::create_directories(out_dir);
        auto in_dir = [&](const std::string& name) {
            return (std::filesystem::path(out_dir) / name).string();
        };

        auto fd_a = build_frequency_dictionary(docs_a, morph_a, prune, pipeline_workers);
        auto fd_b = build_frequency_dictionary(docs_b, morph_b, prune, pipeline_workers);
        save_frequency_dictionary(fd_a, in_dir("freq_a.tsv"));
        save_frequency_dictionary(fd_b, in_dir("freq_b.tsv"));

        auto raw_ab = load_raw_table(cfg.get_string("translations_ab"), lang_a, lang_b);
        auto raw_ba = load_raw_table(cfg.get_string("translations_ba"), lang_b, lang_a);
        auto td_ab = resolve_senses(raw_ab, fd_b);
        auto td_ba = resolve_senses(raw_ba, fd_a);
        save_translation_dictionary(td_ab, in_dir("trans_ab.tsv"));
        save_translation_dictionary(td_ba, in_dir("trans_ba.tsv"));

        StopwordSet stop_a, stop_b;
        if (cfg.has("stopwords_a")) stop_a = load_stopwords(cfg.get_string("stopwords_a"));
        if (cfg.has("stopwords_b")) stop_b = load_stopwords(cfg.get_string("stopwords_b"));

        auto side_a = extract_all(docs_a, morph_a, fd_a, stop_a, td_ab, bp,
                                  static_cast<std::size_t>(top_k), pipeline_workers);
        auto side_b = extract_all(docs_b, morph_b, fd_b, stop_b, td_ba, bp,
                                  static_cast<std::size_t>(top_k), pipeline_workers);
        save_profiles(side_a.profiles, in_dir("profiles_a.jsonl"));
        save_profiles(side_b.profiles, in_dir("profiles_b.jsonl"));
        save_surface_stats(side_a.stats, in_dir("stats_a.jsonl"));
        save_surface_stats(side_b.stats, in_dir("stats_b.jsonl"));

        auto stats = side_a.stats;
        for (const auto& [id, st] : side_b.stats) {
            if (!stats.emplace(id, st).second) {
                throw ConfigError("duplicate document id across corpora: '" + id + "'");
            }
        }

        AlignOptions opts;
        opts.keep_rejected = true;
        opts.td_ab = &td_ab;
        opts.td_ba = &td_ba;
        opts.workers = pipeline_workers;
        auto result = align(side_a.profiles, side_b.profiles, stats, mc, opts);
        save_pairs(result.accepted, in_dir("pairs.jsonl"));
        if (verbose) save_rejected_tsv(result.rejected, mc, in_dir("rejected.tsv"));

        emit_parallel_corpus(result.accepted, doc_map(docs_a, docs_b),
                             in_dir("parallel_corpus.jsonl"));

        bool have_gold = cfg.has("gold");
        std::string gold_path = have_gold ? cfg.get_string("gold") : "";
        cfg.ensure_consumed();

        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
        std::cout << "pairs=" << result.accepted.size() << " elapsed="
                  << format_double(elapsed.count()) << "s\n";

        if (have_gold) {
            auto gold = load_gold_pairs(gold_path);
            auto report = evaluate(result.accepted, gold, result.rejected);
            save_report(report, in_dir("report.json"));
            std::cout << format_report(report);
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
