#include "parmine/translation.hpp"

#include <algorithm>
#include <map>

#include "parmine/util.hpp"

namespace parmine {

TranslationDictionary resolve_senses(const RawTranslationTable& raw,
                                     const FrequencyDictionary& dst_fd) {
    TranslationDictionary td;
    td.src_lang = raw.src_lang;
    td.dst_lang = raw.dst_lang;
    td.entries.reserve(raw.rows.size());
    for (const auto& [src, candidates] : raw.rows) {
        if (candidates.empty()) {
            throw std::runtime_error("raw translation row for \"" + src +
                                     "\" has no candidates");
        }
        const std::string* best = &candidates.front();
        std::int64_t best_freq = -1;  // absent candidates score -1
        for (const std::string& cand : candidates) {
            const TermStats* stats = dst_fd.find(cand);
            std::int64_t freq = stats ? stats->collection_freq : -1;
            if (freq > best_freq) {
                best = &cand;
                best_freq = freq;
            }
        }
        td.entries.emplace(src, *best);
    }
    return td;
}

std::optional<std::string> translate_lemma(const TranslationDictionary& td,
                                           const std::string& lemma) {
    auto it = td.entries.find(lemma);
    if (it == td.entries.end()) return std::nullopt;
    return it->second;
}

RawTranslationTable load_raw_table(const std::string& path, const std::string& src_lang,
                                   const std::string& dst_lang) {
    LineReader reader(path);
    RawTranslationTable raw;
    raw.src_lang = src_lang;
    raw.dst_lang = dst_lang;
    std::string line;
    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 2) {
            throw reader.error("expected 2 tab-separated columns, got " +
                               std::to_string(cols.size()));
        }
        if (cols[0].empty()) throw reader.error("empty source lemma");
        std::vector<std::string>& list = raw.rows[cols[0]];
        for (std::string& cand : split(cols[1], '|')) {
            if (cand.empty()) throw reader.error("empty translation candidate");
            if (std::find(list.begin(), list.end(), cand) == list.end()) {
                list.push_back(std::move(cand));
            }
        }
    }
    return raw;
}

void save_raw_table(const RawTranslationTable& raw, const std::string& path) {
    std::map<std::string, const std::vector<std::string>*> ordered;
    for (const auto& [src, candidates] : raw.rows) ordered.emplace(src, &candidates);
    AtomicFile out(path);
    for (const auto& [src, candidates] : ordered) {
        out.stream() << src << '\t';
        for (std::size_t i = 0; i < candidates->size(); ++i) {
            if (i) out.stream() << '|';
            out.stream() << (*candidates)[i];
        }
        out.stream() << '\n';
    }
    out.commit();
}

void save_translation_dictionary(const TranslationDictionary& td, const std::string& path) {
    std::map<std::string, std::string> ordered(td.entries.begin(), td.entries.end());
    AtomicFile out(path);
    for (const auto& [src, dst] : ordered) {
        out.stream() << src << '\t' << dst << '\n';
    }
    out.commit();
}

TranslationDictionary load_translation_dictionary(const std::string& path,
                                                  const std::string& src_lang,
                                                  const std::string& dst_lang) {
    LineReader reader(path);
    TranslationDictionary td;
    td.src_lang = src_lang;
    td.dst_lang = dst_lang;
    std::string line;
    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 2) {
            throw reader.error("expected 2 tab-separated columns, got " +
                               std::to_string(cols.size()));
        }
        if (cols[0].empty()) throw reader.error("empty source lemma");
        if (cols[1].empty()) throw reader.error("empty target lemma");
        if (!td.entries.emplace(cols[0], cols[1]).second) {
            throw reader.error("duplicate source lemma \"" + cols[0] + "\"");
        }
    }
    return td;
}

}  // namespace parmine
