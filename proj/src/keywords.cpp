#include "parmine/keywords.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "parmine/unicode.hpp"
#include "parmine/util.hpp"

namespace parmine {

StopwordSet load_stopwords(const std::string& path) {
    LineReader reader(path);
    StopwordSet stop;
    std::string line;
    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        stop.insert(line);
    }
    return stop;
}

double idf(const FrequencyDictionary& fd, const std::string& lemma) {
    const TermStats* stats = fd.find(lemma);
    double n = stats ? static_cast<double>(stats->doc_freq) : 0.0;
    double N = static_cast<double>(fd.doc_count);
    return std::log((N - n + 0.5) / (n + 0.5));
}

double bm25_score(const TermVector& tv, const std::string& lemma,
                  const FrequencyDictionary& fd, const Bm25Params& p) {
    auto it = tv.freqs.find(lemma);
    if (it == tv.freqs.end()) return 0.0;
    double f = static_cast<double>(it->second);
    double len_norm =
        1.0 - p.b + p.b * static_cast<double>(tv.doc_len) / fd.avg_doc_len;
    return idf(fd, lemma) * (f * (p.k1 + 1.0)) / (f + p.k1 * len_norm);
}

KeywordProfile extract_keywords(const Document& doc, const MorphDictionary& md,
                                const FrequencyDictionary& fd, const StopwordSet& stop,
                                const TranslationDictionary& td, const Bm25Params& p,
                                std::size_t top_k) {
    KeywordProfile profile;
    profile.doc_id = doc.id;
    profile.lang = doc.lang;
    profile.char_count = static_cast<std::int64_t>(codepoint_count(doc.text));

    TokenStream ts = tokenize(doc.text, doc.lang);
    TermVector tv;
    tv.doc_id = doc.id;
    // surface -> resolved lemma ("" when the word resolves to nothing)
    std::unordered_map<std::string, std::string> resolved;
    for (const Token& t : ts.tokens) {
        if (t.kind != TokenKind::word) continue;
        ++tv.doc_len;
        auto [it, inserted] = resolved.try_emplace(t.surface);
        if (inserted) {
            if (auto lemma = most_frequent_lemma(fd, md.analyses(t.surface))) {
                if (!stop.contains(*lemma)) it->second = *lemma;
            }
        }
        if (!it->second.empty()) ++tv.freqs[it->second];
    }

    std::vector<ScoredKeyword> scored;
    scored.reserve(tv.freqs.size());
    for (const auto& [lemma, freq] : tv.freqs) {
        scored.push_back({lemma, bm25_score(tv, lemma, fd, p)});
    }
    std::sort(scored.begin(), scored.end(), [](const ScoredKeyword& a, const ScoredKeyword& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.lemma < b.lemma;
    });
    if (scored.size() > top_k) scored.resize(top_k);
    profile.keywords = std::move(scored);

    for (const ScoredKeyword& kw : profile.keywords) {
        if (auto t = translate_lemma(td, kw.lemma)) {
            profile.translated_keywords.insert(*t);
        }
    }
    return profile;
}

void save_profiles(const std::vector<KeywordProfile>& profiles, const std::string& path) {
    std::vector<const KeywordProfile*> ordered;
    ordered.reserve(profiles.size());
    for (const KeywordProfile& p : profiles) ordered.push_back(&p);
    std::sort(ordered.begin(), ordered.end(),
              [](const KeywordProfile* a, const KeywordProfile* b) {
                  return a->doc_id < b->doc_id;
              });

    AtomicFile out(path);
    for (const KeywordProfile* p : ordered) {
        nlohmann::ordered_json j;
        j["id"] = p->doc_id;
        j["lang"] = p->lang;
        j["char_count"] = p->char_count;
        auto& kws = j["keywords"] = nlohmann::ordered_json::array();
        for (const ScoredKeyword& kw : p->keywords) {
            kws.push_back({{"lemma", kw.lemma}, {"score", kw.score}});
        }
        j["translated"] = p->translated_keywords;
        out.stream() << j.dump() << '\n';
    }
    out.commit();
}

std::vector<KeywordProfile> load_profiles(const std::string& path) {
    LineReader reader(path);
    std::vector<KeywordProfile> profiles;
    std::string line;
    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            throw reader.error("invalid JSON object");
        }
        KeywordProfile p;
        try {
            p.doc_id = j.at("id").get<std::string>();
            p.lang = j.at("lang").get<std::string>();
            p.char_count = j.at("char_count").get<std::int64_t>();
            for (const auto& kw : j.at("keywords")) {
                p.keywords.push_back(
                    {kw.at("lemma").get<std::string>(), kw.at("score").get<double>()});
            }
            for (const auto& t : j.at("translated")) {
                p.translated_keywords.insert(t.get<std::string>());
            }
        } catch (const nlohmann::json::exception& e) {
            throw reader.error(std::string("invalid profile record: ") + e.what());
        }
        profiles.push_back(std::move(p));
    }
    return profiles;
}

}  // namespace parmine
