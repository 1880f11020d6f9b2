#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "parmine/config.hpp"
#include "parmine/evaluation.hpp"
#include "parmine/keywords.hpp"
#include "parmine/util.hpp"
#include "test_util.hpp"

using namespace parmine;
using testutil::TempDir;
using testutil::read_file;
using testutil::write_file;

namespace {

SyntheticSpec small_spec() {
    SyntheticSpec spec;
    spec.n_pairs = 3;
    spec.n_noise_a = 2;
    spec.n_noise_b = 2;
    spec.vocab_size = 120;
    spec.doc_len_min = 60;
    spec.doc_len_max = 70;
    spec.seed = 42;
    return spec;
}

CandidatePair mk_pair(std::string a, std::string b) {
    CandidatePair p;
    p.doc_a = std::move(a);
    p.doc_b = std::move(b);
    p.accepted = p.keyword_matched = true;
    return p;
}

EvalReport run_pipeline(const SyntheticSpec& spec) {
    auto synth = generate_synthetic(spec);
    auto fd_a = build_frequency_dictionary(synth.docs_a, synth.morph_a, 2);
    auto fd_b = build_frequency_dictionary(synth.docs_b, synth.morph_b, 2);
    auto td_ab = resolve_senses(synth.table_ab, fd_b);
    auto td_ba = resolve_senses(synth.table_ba, fd_a);

    std::vector<KeywordProfile> pa, pb;
    std::unordered_map<std::string, SurfaceStats> stats;
    for (const auto& doc : synth.docs_a) {
        pa.push_back(extract_keywords(doc, synth.morph_a, fd_a, {}, td_ab, Bm25Params{}, 12));
        stats[doc.id] = surface_stats(tokenize(doc.text, doc.lang), doc.text);
    }
    for (const auto& doc : synth.docs_b) {
        pb.push_back(extract_keywords(doc, synth.morph_b, fd_b, {}, td_ba, Bm25Params{}, 12));
        stats[doc.id] = surface_stats(tokenize(doc.text, doc.lang), doc.text);
    }

    AlignOptions opts;
    opts.keep_rejected = true;
    auto res = align(pa, pb, stats, MatchConfig{}, opts);
    return evaluate(res.accepted, synth.gold, res.rejected);
}

}  // namespace

TEST_CASE("spec validation") {
    auto spec = small_spec();
    CHECK_NOTHROW(validate_spec(spec));

    SUBCASE("rates outside [0, 1]") {
        spec.noise_ops.keyword_drop_rate = 1.2;
        CHECK_THROWS_AS(validate_spec(spec), ConfigError);
    }
    SUBCASE("negative counts") {
        spec.n_noise_b = -1;
        CHECK_THROWS_AS(validate_spec(spec), ConfigError);
    }
    SUBCASE("document length below the topic block") {
        spec.doc_len_min = 59;
        CHECK_THROWS_AS(validate_spec(spec), ConfigError);
    }
    SUBCASE("inverted length range") {
        spec.doc_len_max = spec.doc_len_min - 1;
        CHECK_THROWS_AS(validate_spec(spec), ConfigError);
    }
    SUBCASE("vocabulary too small for the stories") {
        spec.vocab_size = 90;
        CHECK_THROWS_AS(validate_spec(spec), ConfigError);
    }
}

TEST_CASE("generated corpora have the advertised shape") {
    auto spec = small_spec();
    auto out = generate_synthetic(spec);

    CHECK(out.docs_a.size() == 5);
    CHECK(out.docs_b.size() == 5);
    CHECK(out.gold.size() == 3);
    CHECK(out.docs_a[0].id == "a-p000001");
    CHECK(out.docs_b[2].id == "b-p000003");
    CHECK(out.docs_a[3].id == "a-n000001");
    CHECK(out.docs_b[4].id == "b-n000002");
    CHECK(out.gold[0] == std::pair<std::string, std::string>{"a-p000001", "b-p000001"});
    for (const auto& d : out.docs_a) {
        CHECK(d.lang == "aa");
        CHECK(d.source == "synthetic");
    }
    CHECK(out.morph_a.size() == 120);
    CHECK(out.morph_b.size() == 120);
    CHECK(out.table_ab.rows.size() == 120);
    CHECK(out.table_ba.rows.size() == 120);
}

TEST_CASE("the two languages use disjoint alphabets") {
    auto out = generate_synthetic(small_spec());
    const std::string alpha_a = "bcdfghjklma";
    const std::string alpha_b = "npqrstvwzxo";
    for (const auto& d : out.docs_a) {
        for (char c : d.text) {
            if (std::isalpha(static_cast<unsigned char>(c))) {
                CHECK(alpha_a.find(c) != std::string::npos);
            }
        }
    }
    for (const auto& d : out.docs_b) {
        for (char c : d.text) {
            if (std::isalpha(static_cast<unsigned char>(c))) {
                CHECK(alpha_b.find(c) != std::string::npos);
            }
        }
    }
}

TEST_CASE("translation tables invert each other") {
    auto out = generate_synthetic(small_spec());
    for (const auto& [src, candidates] : out.table_ab.rows) {
        REQUIRE(candidates.size() == 1);
        auto back = out.table_ba.rows.find(candidates[0]);
        REQUIRE(back != out.table_ba.rows.end());
        REQUIRE(back->second.size() == 1);
        CHECK(back->second[0] == src);
    }
}

TEST_CASE("noiseless pairs translate word for word") {
    auto spec = small_spec();
    auto out = generate_synthetic(spec);
    for (std::size_t p = 0; p < out.gold.size(); ++p) {
        const auto& doc_a = out.docs_a[p];
        const auto& doc_b = out.docs_b[p];

        std::vector<std::string> words_a, words_b;
        std::vector<double> nums_a, nums_b;
        auto ts_a = tokenize(doc_a.text, doc_a.lang);
        auto ts_b = tokenize(doc_b.text, doc_b.lang);
        for (const auto& t : ts_a.tokens) {
            if (t.kind == TokenKind::word) words_a.push_back(t.surface);
            if (t.kind == TokenKind::number) nums_a.push_back(parse_number_value(t.surface));
        }
        for (const auto& t : ts_b.tokens) {
            if (t.kind == TokenKind::word) words_b.push_back(t.surface);
            if (t.kind == TokenKind::number) nums_b.push_back(parse_number_value(t.surface));
        }

        REQUIRE(words_a.size() == words_b.size());
        for (std::size_t i = 0; i < words_a.size(); ++i) {
            const auto& row = out.table_ab.rows.at(words_a[i]);
            CHECK(row[0] == words_b[i]);
        }
        std::sort(nums_a.begin(), nums_a.end());
        std::sort(nums_b.begin(), nums_b.end());
        CHECK(nums_a == nums_b);
        CHECK(nums_a.size() == 3);
    }
}

TEST_CASE("generation is deterministic in the seed") {
    auto spec = small_spec();
    auto first = generate_synthetic(spec);
    auto second = generate_synthetic(spec);
    CHECK(first.docs_a == second.docs_a);
    CHECK(first.docs_b == second.docs_b);
    CHECK(first.gold == second.gold);

    spec.seed = 43;
    auto other = generate_synthetic(spec);
    CHECK(other.docs_a[0].text != first.docs_a[0].text);
}

TEST_CASE("zero pairs produce only noise documents") {
    auto spec = small_spec();
    spec.n_pairs = 0;
    auto out = generate_synthetic(spec);
    CHECK(out.gold.empty());
    CHECK(out.docs_a.size() == 2);
    CHECK(out.docs_b.size() == 2);
    CHECK(out.docs_a[0].id == "a-n000001");
}

TEST_CASE("noise operations change only the b side") {
    auto spec = small_spec();
    auto clean = generate_synthetic(spec);
    spec.noise_ops.word_insertion_rate = 0.1;
    spec.noise_ops.number_jitter = 0.1;
    auto noisy = generate_synthetic(spec);
    CHECK(noisy.docs_a[0].text == clean.docs_a[0].text);

    auto count_words = [&](const Document& d) {
        std::int64_t n = 0;
        for (const auto& t : tokenize(d.text, d.lang).tokens) {
            if (t.kind == TokenKind::word) ++n;
        }
        return n;
    };
    auto wa = count_words(noisy.docs_a[0]);
    auto wb = count_words(noisy.docs_b[0]);
    CHECK(wb - wa == wa / 10);
}

TEST_CASE("evaluation arithmetic") {
    std::vector<std::pair<std::string, std::string>> gold = {
        {"a-1", "b-1"}, {"a-2", "b-2"}, {"a-3", "b-3"}};

    SUBCASE("one spurious pair") {
        std::vector<CandidatePair> out = {mk_pair("a-1", "b-1"), mk_pair("a-2", "b-2"),
                                          mk_pair("a-3", "b-3"), mk_pair("a-1", "b-2")};
        auto report = evaluate(out, gold);
        CHECK(report.true_pos == 3);
        CHECK(report.false_pos == 1);
        CHECK(report.false_neg == 0);
        CHECK(report.precision == doctest::Approx(0.75));
        CHECK(report.recall == doctest::Approx(1.0));
        CHECK(report.f1 == doctest::Approx(6.0 / 7.0));
    }
    SUBCASE("empty output keeps precision at 1") {
        auto report = evaluate({}, gold);
        CHECK(report.precision == 1.0);
        CHECK(report.recall == 0.0);
        CHECK(report.f1 == 0.0);
        CHECK(report.false_neg == 3);
    }
    SUBCASE("empty gold and output are perfect") {
        auto report = evaluate({}, {});
        CHECK(report.precision == 1.0);
        CHECK(report.recall == 1.0);
        CHECK(report.f1 == 1.0);
    }
    SUBCASE("pair direction does not matter") {
        std::vector<CandidatePair> out = {mk_pair("b-1", "a-1")};
        auto report = evaluate(out, gold);
        CHECK(report.true_pos == 1);
        CHECK(report.false_pos == 0);
    }
    SUBCASE("duplicate output pairs count once") {
        std::vector<CandidatePair> out = {mk_pair("a-1", "b-1"), mk_pair("a-1", "b-1")};
        auto report = evaluate(out, gold);
        CHECK(report.true_pos == 1);
        CHECK(report.false_pos == 0);
    }
}

TEST_CASE("filter rejection histogram") {
    std::vector<CandidatePair> rejected(2);
    rejected[0].filter_verdicts = {{FilterKind::word_count_ratio, false},
                                   {FilterKind::capitalized_midline, true},
                                   {FilterKind::number_count, false},
                                   {FilterKind::number_values, true}};
    rejected[1].filter_verdicts = {{FilterKind::word_count_ratio, false},
                                   {FilterKind::capitalized_midline, true},
                                   {FilterKind::number_count, true},
                                   {FilterKind::number_values, true}};
    auto report = evaluate({}, {}, rejected);
    CHECK(report.filter_rejections.at("word_count_ratio") == 2);
    CHECK(report.filter_rejections.at("number_count") == 1);
    CHECK(report.filter_rejections.at("capitalized_midline") == 0);
    CHECK(report.filter_rejections.at("number_values") == 0);
    CHECK(report.filter_rejections.size() == 4);
}

TEST_CASE("gold pair files round-trip") {
    TempDir dir;
    std::vector<std::pair<std::string, std::string>> gold = {{"a-p000001", "b-p000001"},
                                                             {"a-p000002", "b-p000002"}};
    std::string path = dir.file("gold.tsv");
    save_gold_pairs(gold, path);
    CHECK(load_gold_pairs(path) == gold);

    SUBCASE("malformed rows are rejected") {
        std::string bad = write_file(dir, "bad.tsv", "only-one-column\n");
        CHECK_THROWS_AS(load_gold_pairs(bad), ParseError);
    }
}

TEST_CASE("synthetic spec files") {
    TempDir dir;
    SUBCASE("all keys parsed") {
        std::string path = write_file(dir, "spec.conf",
                                      "# synthetic corpus\n"
                                      "n_pairs = 3\n"
                                      "n_noise_a = 2\n"
                                      "n_noise_b = 2\n"
                                      "vocab_size = 120\n"
                                      "doc_len_min = 60\n"
                                      "doc_len_max = 70\n"
                                      "keyword_drop_rate = 0.2\n"
                                      "word_insertion_rate = 0.1\n"
                                      "number_jitter = 0.05\n"
                                      "zipf_exponent = 1.1\n"
                                      "seed = 7\n"
                                      "lang_a = uk\n"
                                      "lang_b = en\n");
        auto spec = load_synthetic_spec(path);
        CHECK(spec.n_pairs == 3);
        CHECK(spec.vocab_size == 120);
        CHECK(spec.noise_ops.keyword_drop_rate == 0.2);
        CHECK(spec.noise_ops.number_jitter == 0.05);
        CHECK(spec.zipf_exponent == 1.1);
        CHECK(spec.seed == 7);
        CHECK(spec.lang_a == "uk");
        CHECK(spec.lang_b == "en");
    }
    SUBCASE("defaults fill optional keys") {
        std::string path = write_file(dir, "spec.conf",
                                      "n_pairs = 1\nvocab_size = 120\n"
                                      "doc_len_min = 60\ndoc_len_max = 60\n");
        auto spec = load_synthetic_spec(path);
        CHECK(spec.n_noise_a == 0);
        CHECK(spec.noise_ops.keyword_drop_rate == 0.0);
        CHECK(spec.zipf_exponent == 1.0);
        CHECK(spec.lang_a == "aa");
    }
    SUBCASE("unknown keys are rejected") {
        std::string path = write_file(dir, "spec.conf",
                                      "n_pairs = 1\nvocab_size = 120\n"
                                      "doc_len_min = 60\ndoc_len_max = 60\n"
                                      "n_parrs = 2\n");
        CHECK_THROWS_WITH_AS(load_synthetic_spec(path), doctest::Contains("n_parrs"),
                             ConfigError);
    }
    SUBCASE("missing required keys are rejected") {
        std::string path = write_file(dir, "spec.conf", "n_pairs = 1\n");
        CHECK_THROWS_AS(load_synthetic_spec(path), ConfigError);
    }
}

TEST_CASE("report serialization") {
    TempDir dir;
    std::vector<std::pair<std::string, std::string>> gold = {{"a-1", "b-1"}};
    auto report = evaluate({mk_pair("a-1", "b-1")}, gold);

    std::string path = dir.file("report.json");
    save_report(report, path);
    auto j = nlohmann::json::parse(read_file(path));
    CHECK(j["precision"] == 1.0);
    CHECK(j["recall"] == 1.0);
    CHECK(j["true_pos"] == 1);
    CHECK(j["filter_rejections"].size() == 4);

    std::string text = format_report(report);
    CHECK(text.find("precision: 1") != std::string::npos);
    CHECK(text.find("rejected by filter:") != std::string::npos);
    CHECK(text.find("word_count_ratio") != std::string::npos);
}

TEST_CASE("recall degrades monotonically with keyword drop") {
    auto median_recall = [](double drop_rate) {
        std::vector<double> recalls;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            SyntheticSpec spec;
            spec.n_pairs = 15;
            spec.n_noise_a = 5;
            spec.n_noise_b = 5;
            spec.vocab_size = 400;
            spec.doc_len_min = 130;
            spec.doc_len_max = 170;
            spec.noise_ops.keyword_drop_rate = drop_rate;
            spec.seed = seed;
            recalls.push_back(run_pipeline(spec).recall);
        }
        std::sort(recalls.begin(), recalls.end());
        return recalls[recalls.size() / 2];
    };

    double at_zero = median_recall(0.0);
    double at_mid = median_recall(0.3);
    double at_high = median_recall(0.6);
    CHECK(at_zero == 1.0);
    CHECK(at_zero >= at_mid);
    CHECK(at_mid >= at_high);
    CHECK(at_zero > at_high);
}
