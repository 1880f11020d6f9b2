#include "parmine/morphology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "parmine/unicode.hpp"
#include "parmine/util.hpp"

namespace parmine {

namespace {

const std::vector<Analysis> kNoAnalyses;

MorphDictionary load_into(const std::string& path, const std::string& lang,
                          const std::string& noun_tag) {
    LineReader reader(path);
    MorphDictionary md(lang);
    // (lemma, pos) in first-appearance order, to synthesize self-analyses
    std::vector<Analysis> lemma_order;
    std::set<std::pair<std::string, Pos>> lemma_seen;

    std::string line;
    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 3) {
            throw reader.error("expected 3 tab-separated columns, got " +
                               std::to_string(cols.size()));
        }
        if (cols[0].empty()) throw reader.error("empty wordform");
        if (cols[1].empty()) throw reader.error("empty lemma");
        if (cols[2].empty()) throw reader.error("empty pos tag");
        Analysis a{cols[1], cols[2] == noun_tag ? Pos::noun : Pos::other};
        if (lemma_seen.emplace(a.lemma, a.pos).second) lemma_order.push_back(a);
        md.add(fold_case(cols[0]), std::move(a));
    }
    for (const Analysis& a : lemma_order) {
        md.add(fold_case(a.lemma), a);
    }
    return md;
}

}  // namespace

const std::vector<Analysis>& MorphDictionary::analyses(const std::string& wordform) const {
    auto it = entries_.find(fold_case(wordform));
    return it == entries_.end() ? kNoAnalyses : it->second;
}

void MorphDictionary::add(const std::string& wordform, Analysis analysis) {
    std::vector<Analysis>& list = entries_[wordform];
    if (std::find(list.begin(), list.end(), analysis) == list.end()) {
        list.push_back(std::move(analysis));
    }
}

MorphDictionary load_morph_dictionary(const std::string& path, const std::string& lang,
                                      const std::string& noun_tag) {
    return load_into(path, lang, noun_tag);
}

MorphDictionary augment(const MorphDictionary& md, const std::string& extra_path,
                        const std::string& noun_tag) {
    MorphDictionary merged = load_into(extra_path, md.lang(), noun_tag);
    for (const auto& [wordform, analyses] : md.entries()) {
        for (const Analysis& a : analyses) {
            merged.add(wordform, a);
        }
    }
    return merged;
}

void save_morph_dictionary(const MorphDictionary& md, const std::string& path) {
    std::map<std::string, const std::vector<Analysis>*> ordered;
    for (const auto& [wordform, analyses] : md.entries()) {
        ordered.emplace(wordform, &analyses);
    }
    AtomicFile out(path);
    for (const auto& [wordform, analyses] : ordered) {
        for (const Analysis& a : *analyses) {
            out.stream() << wordform << '\t' << a.lemma << '\t'
                         << (a.pos == Pos::noun ? "noun" : "other") << '\n';
        }
    }
    out.commit();
}

}  // namespace parmine
