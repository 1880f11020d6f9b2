#include <doctest.h>

#include "parmine/morphology.hpp"
#include "parmine/util.hpp"
#include "test_util.hpp"

using namespace parmine;
using testutil::TempDir;
using testutil::write_file;

namespace {

MorphDictionary load_from(const TempDir& dir, const std::string& content,
                          const std::string& noun_tag = "noun") {
    return load_morph_dictionary(write_file(dir, "md.tsv", content), "uk", noun_tag);
}

}  // namespace

TEST_CASE("rows load into analyses") {
    TempDir dir;
    auto md = load_from(dir, "столу\tстіл\tnoun\n");
    auto& analyses = md.analyses("столу");
    REQUIRE(analyses.size() == 1);
    CHECK(analyses[0].lemma == "стіл");
    CHECK(analyses[0].pos == Pos::noun);
}

TEST_CASE("every lemma analyzes to itself") {
    TempDir dir;
    auto md = load_from(dir, "столу\tстіл\tnoun\n");
    auto& analyses = md.analyses("стіл");
    REQUIRE(analyses.size() == 1);
    CHECK(analyses[0] == Analysis{"стіл", Pos::noun});
}

TEST_CASE("empty lemma and empty tag are load errors with line numbers") {
    TempDir dir;
    CHECK_THROWS_WITH_AS(load_from(dir, "abc\t\tnoun\n"), doctest::Contains(":1:"), ParseError);
    CHECK_THROWS_AS(load_from(dir, "столу\tстіл\tnoun\nabc\tdef\t\n"), ParseError);
    CHECK_THROWS_AS(load_from(dir, "\tстіл\tnoun\n"), ParseError);
}

TEST_CASE("wrong column count is a load error") {
    TempDir dir;
    CHECK_THROWS_WITH_AS(load_from(dir, "столу\tстіл\n"), doctest::Contains("column"),
                         ParseError);
}

TEST_CASE("lookup is case-insensitive") {
    TempDir dir;
    auto md = load_from(dir, "столу\tстіл\tnoun\n");
    REQUIRE(md.analyses("СТОЛУ").size() == 1);
    CHECK(md.analyses("СТОЛУ")[0].lemma == "стіл");
}

TEST_CASE("out-of-vocabulary lookup is empty") {
    TempDir dir;
    auto md = load_from(dir, "столу\tстіл\tnoun\n");
    CHECK(md.analyses("кварцелій").empty());
}

TEST_CASE("ambiguous forms keep every analysis in file order") {
    TempDir dir;
    auto md = load_from(dir, "три\tтри\tnumeral\nтри\tтерти\tverb\nкоси\tкоса\tnoun\nкоси\tкосити\tverb\n");
    auto& analyses = md.analyses("коси");
    REQUIRE(analyses.size() == 2);
    CHECK(analyses[0] == Analysis{"коса", Pos::noun});
    CHECK(analyses[1] == Analysis{"косити", Pos::other});
}

TEST_CASE("tags other than the noun tag map to other") {
    TempDir dir;
    auto md = load_from(dir, "швидко\tшвидко\tadv\n");
    REQUIRE(md.analyses("швидко").size() == 1);
    CHECK(md.analyses("швидко")[0].pos == Pos::other);

    auto md2 = load_from(dir, "стола\tстіл\tN\n", "N");
    CHECK(md2.analyses("стола")[0].pos == Pos::noun);
}

TEST_CASE("augment unions a supplement file") {
    TempDir dir;
    auto md = load_from(dir, "столу\tстіл\tnoun\n");
    CHECK(md.analyses("infostream").empty());

    SUBCASE("new entries become visible") {
        std::string extra = write_file(dir, "extra.tsv", "infostream\tinfostream\tnoun\n");
        auto bigger = augment(md, extra);
        REQUIRE(bigger.analyses("infostream").size() == 1);
        CHECK(bigger.analyses("столу").size() == 1);
    }
    SUBCASE("empty extra file changes nothing") {
        std::string extra = write_file(dir, "extra.tsv", "");
        CHECK(augment(md, extra) == md);
    }
    SUBCASE("re-adding an existing row changes nothing") {
        std::string extra = write_file(dir, "extra.tsv", "столу\tстіл\tnoun\n");
        CHECK(augment(md, extra) == md);
    }
}

TEST_CASE("comments and blank lines are skipped") {
    TempDir dir;
    auto md = load_from(dir, "# comment\n\nстолу\tстіл\tnoun\n");
    CHECK(md.size() == 2);
}

TEST_CASE("morph dictionaries round-trip through files") {
    TempDir dir;
    auto md = load_from(dir,
                        "столу\tстіл\tnoun\nстоли\tстіл\tnoun\nкоси\tкоса\tnoun\n"
                        "коси\tкосити\tverb\nшвидко\tшвидко\tadv\n");
    std::string path = dir.file("saved.tsv");
    save_morph_dictionary(md, path);
    CHECK(load_morph_dictionary(path, "uk") == md);
}

TEST_CASE("analyses always carry non-empty lemmas") {
    TempDir dir;
    auto md = load_from(dir, "столу\tстіл\tnoun\nкоси\tкоса\tnoun\n");
    for (const auto& [wordform, analyses] : md.entries()) {
        for (const auto& a : analyses) CHECK_FALSE(a.lemma.empty());
    }
}
