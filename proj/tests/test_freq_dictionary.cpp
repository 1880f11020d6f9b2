#include <doctest.h>

#include <algorithm>
#include <random>

#include "parmine/freq_dictionary.hpp"
#include "parmine/util.hpp"
#include "test_util.hpp"

using namespace parmine;
using testutil::TempDir;
using testutil::write_file;

namespace {

MorphDictionary identity_nouns(std::initializer_list<const char*> lemmas) {
    MorphDictionary md("uk");
    for (const char* lemma : lemmas) md.add(lemma, {lemma, Pos::noun});
    return md;
}

}  // namespace

TEST_CASE("collection and document frequencies follow their definitions") {
    auto md = identity_nouns({"літо", "зима", "сонце"});
    std::vector<Document> docs = {
        {"d1", "uk", "літо літо зима", "", ""},
        {"d2", "uk", "літо сонце сонце сонце", "", ""},
        {"d3", "uk", "зима зима", "", ""},
    };
    auto fd = build_frequency_dictionary(docs, md, 2);
    CHECK(fd.doc_count == 3);
    const TermStats* lito = fd.find("літо");
    REQUIRE(lito);
    CHECK(lito->collection_freq == 3);
    CHECK(lito->doc_freq == 2);
}

TEST_CASE("lemmas occurring at most twice are pruned") {
    auto md = identity_nouns({"раз", "два"});
    std::vector<Document> docs = {
        {"d1", "uk", "раз два", "", ""},
        {"d2", "uk", "раз два раз", "", ""},
    };
    auto fd = build_frequency_dictionary(docs, md, 2);
    CHECK(fd.find("раз"));
    CHECK_FALSE(fd.find("два"));
}

TEST_CASE("avg doc len is the mean word count") {
    auto md = identity_nouns({"а"});
    auto text = [](int n) {
        std::string t;
        for (int i = 0; i < n; ++i) t += i ? " слово" : "слово";
        return t;
    };
    std::vector<Document> docs = {
        {"d1", "uk", text(10), "", ""},
        {"d2", "uk", text(20), "", ""},
        {"d3", "uk", text(30), "", ""},
    };
    auto fd = build_frequency_dictionary(docs, md, 2);
    CHECK(fd.doc_count == 3);
    CHECK(fd.avg_doc_len == 20.0);
}

TEST_CASE("documents without word tokens still count toward N and avgdl") {
    auto md = identity_nouns({"літо"});
    std::vector<Document> docs = {
        {"d1", "uk", "літо літо літо літо", "", ""},
        {"d2", "uk", "123 456.", "", ""},
        {"d3", "uk", "", "", ""},
    };
    auto fd = build_frequency_dictionary(docs, md, 2);
    CHECK(fd.doc_count == 3);
    CHECK(fd.avg_doc_len == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("every noun analysis of an ambiguous form is counted") {
    MorphDictionary md("uk");
    md.add("коси", {"коса", Pos::noun});
    md.add("коси", {"косити", Pos::other});
    md.add("коси", {"кіс", Pos::noun});
    std::vector<Document> docs = {
        {"d1", "uk", "коси коси коси", "", ""},
    };
    auto fd = build_frequency_dictionary(docs, md, 2);
    REQUIRE(fd.find("коса"));
    REQUIRE(fd.find("кіс"));
    CHECK(fd.find("коса")->collection_freq == 3);
    CHECK(fd.find("кіс")->collection_freq == 3);
    CHECK_FALSE(fd.find("косити"));
}

TEST_CASE("most frequent lemma wins; ties break lexicographically") {
    FrequencyDictionary fd;
    fd.lang = "uk";
    fd.doc_count = 10;
    fd.term_stats["a"] = {100, 5};
    fd.term_stats["b"] = {7, 3};
    fd.term_stats["c"] = {5, 2};
    fd.term_stats["d"] = {5, 4};

    SUBCASE("higher collection frequency wins") {
        std::vector<Analysis> analyses = {{"b", Pos::noun}, {"a", Pos::noun}};
        CHECK(most_frequent_lemma(fd, analyses) == "a");
    }
    SUBCASE("tie goes to the lexicographically smaller lemma") {
        std::vector<Analysis> analyses = {{"d", Pos::noun}, {"c", Pos::noun}};
        CHECK(most_frequent_lemma(fd, analyses) == "c");
    }
    SUBCASE("non-noun analyses are ignored") {
        std::vector<Analysis> analyses = {{"a", Pos::other}, {"b", Pos::noun}};
        CHECK(most_frequent_lemma(fd, analyses) == "b");
    }
    SUBCASE("unretained and absent lemmas yield nothing") {
        std::vector<Analysis> analyses = {{"zzz", Pos::noun}};
        CHECK_FALSE(most_frequent_lemma(fd, analyses).has_value());
        CHECK_FALSE(most_frequent_lemma(fd, {}).has_value());
    }
}

TEST_CASE("building is independent of document order and worker count") {
    auto md = identity_nouns({"літо", "зима", "сонце", "дощ"});
    std::vector<Document> docs;
    std::mt19937_64 rng(123);
    const char* words[] = {"літо", "зима", "сонце", "дощ", "і", "чи"};
    for (int i = 0; i < 40; ++i) {
        std::string text;
        int len = 3 + static_cast<int>(rng() % 25);
        for (int w = 0; w < len; ++w) {
            text += words[rng() % 6];
            text += ' ';
        }
        docs.push_back({"d" + std::to_string(i), "uk", text, "", ""});
    }
    auto base = build_frequency_dictionary(docs, md, 2, 1);

    auto shuffled = docs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(build_frequency_dictionary(shuffled, md, 2, 1) == base);
    CHECK(build_frequency_dictionary(docs, md, 2, 3) == base);
    CHECK(build_frequency_dictionary(shuffled, md, 2, 7) == base);
}

TEST_CASE("merging shards equals building over the concatenation") {
    auto md = identity_nouns({"літо", "зима"});
    std::vector<Document> part1 = {
        {"d1", "uk", "літо зима літо", "", ""},
        {"d2", "uk", "зима", "", ""},
    };
    std::vector<Document> part2 = {
        {"d3", "uk", "літо літо", "", ""},
    };
    FreqDictBuilder b1("uk"), b2("uk");
    for (const auto& d : part1) b1.add_document(d, md);
    for (const auto& d : part2) b2.add_document(d, md);
    b1.merge(b2);

    std::vector<Document> all = part1;
    all.insert(all.end(), part2.begin(), part2.end());
    CHECK(b1.finish(2) == build_frequency_dictionary(all, md, 2));
}

TEST_CASE("frequency dictionaries round-trip through files") {
    TempDir dir;
    auto md = identity_nouns({"літо", "зима", "сонце"});
    std::vector<Document> docs = {
        {"d1", "uk", "літо літо зима сонце", "", ""},
        {"d2", "uk", "літо сонце сонце сонце", "", ""},
    };
    auto fd = build_frequency_dictionary(docs, md, 0);
    std::string path = dir.file("freq.tsv");
    save_frequency_dictionary(fd, path);
    CHECK(load_frequency_dictionary(path) == fd);

    SUBCASE("empty dictionary round-trips") {
        FrequencyDictionary empty;
        empty.lang = "uk";
        save_frequency_dictionary(empty, path);
        CHECK(load_frequency_dictionary(path) == empty);
    }
}

TEST_CASE("loader enforces dictionary invariants") {
    TempDir dir;
    SUBCASE("negative doc_freq") {
        std::string path = write_file(
            dir, "f.tsv", "#lang=uk\n#doc_count=3\n#avg_doc_len=5\nлемма\t4\t-1\n");
        CHECK_THROWS_AS(load_frequency_dictionary(path), ParseError);
    }
    SUBCASE("doc_freq above doc_count") {
        std::string path = write_file(
            dir, "f.tsv", "#lang=uk\n#doc_count=3\n#avg_doc_len=5\nлемма\t9\t4\n");
        CHECK_THROWS_AS(load_frequency_dictionary(path), ParseError);
    }
    SUBCASE("collection_freq below doc_freq") {
        std::string path = write_file(
            dir, "f.tsv", "#lang=uk\n#doc_count=3\n#avg_doc_len=5\nлемма\t1\t2\n");
        CHECK_THROWS_AS(load_frequency_dictionary(path), ParseError);
    }
    SUBCASE("missing headers") {
        std::string path = write_file(dir, "f.tsv", "лемма\t4\t2\n");
        CHECK_THROWS_AS(load_frequency_dictionary(path), ParseError);
    }
    SUBCASE("duplicate lemma") {
        std::string path = write_file(
            dir, "f.tsv",
            "#lang=uk\n#doc_count=3\n#avg_doc_len=5\nлемма\t4\t2\nлемма\t5\t1\n");
        CHECK_THROWS_AS(load_frequency_dictionary(path), ParseError);
    }
}

TEST_CASE("per-lemma invariants hold after building") {
    auto md = identity_nouns({"літо", "зима", "сонце", "дощ"});
    std::vector<Document> docs;
    std::mt19937_64 rng(7);
    const char* words[] = {"літо", "зима", "сонце", "дощ"};
    for (int i = 0; i < 25; ++i) {
        std::string text;
        for (unsigned w = 0; w < 1 + rng() % 12; ++w) {
            text += words[rng() % 4];
            text += ' ';
        }
        docs.push_back({"d" + std::to_string(i), "uk", text, "", ""});
    }
    auto fd = build_frequency_dictionary(docs, md, 2);
    for (const auto& [lemma, stats] : fd.term_stats) {
        CHECK(stats.doc_freq >= 1);
        CHECK(stats.doc_freq <= fd.doc_count);
        CHECK(stats.collection_freq >= stats.doc_freq);
        CHECK(stats.collection_freq > 2);
    }
}
