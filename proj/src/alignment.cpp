#include "parmine/alignment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>
#include "parmine/util.hpp"

namespace parmine {

namespace {

double relative_diff(double x, double y) {
    double denom = std::max(std::fabs(x), std::fabs(y));
    if (denom == 0.0) return 0.0;
    return std::fabs(x - y) / denom;
}

std::unordered_set<std::string> lemma_set(const KeywordProfile& p) {
    std::unordered_set<std::string> out;
    out.reserve(p.keywords.size());
    for (const auto& kw : p.keywords) out.insert(kw.lemma);
    return out;
}

std::int64_t directional_count(const std::unordered_set<std::string>& from,
                               const std::unordered_set<std::string>& to_keywords,
                               const std::set<std::string>& to_translated) {
    std::int64_t n = 0;
    for (const auto& lemma : from) {
        if (to_keywords.count(lemma) || to_translated.count(lemma)) ++n;
    }
    return n;
}

std::vector<std::pair<std::string, std::string>> shared_keyword_evidence(
    const KeywordProfile& a, const KeywordProfile& b, const TranslationDictionary* td_ab,
    const TranslationDictionary* td_ba) {
    std::unordered_set<std::string> ka = lemma_set(a);
    std::unordered_set<std::string> kb = lemma_set(b);
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& lemma : ka) {
        if (kb.count(lemma)) pairs.emplace(lemma, lemma);
        if (td_ab) {
            if (auto t = translate_lemma(*td_ab, lemma); t && kb.count(*t)) {
                pairs.emplace(lemma, *t);
            }
        }
    }
    if (td_ba) {
        for (const auto& lemma : kb) {
            if (auto t = translate_lemma(*td_ba, lemma); t && ka.count(*t)) {
                pairs.emplace(*t, lemma);
            }
        }
    }
    return {pairs.begin(), pairs.end()};
}

}  // namespace

const char* filter_name(FilterKind kind) {
    switch (kind) {
        case FilterKind::word_count_ratio: return "word_count_ratio";
        case FilterKind::capitalized_midline: return "capitalized_midline";
        case FilterKind::number_count: return "number_count";
        case FilterKind::number_values: return "number_values";
    }
    return "unknown";
}

bool passes_length_gate(const KeywordProfile& a, const KeywordProfile& b,
                        const MatchConfig& cfg) {
    bool a_long = a.char_count > cfg.min_char_count;
    bool b_long = b.char_count > cfg.min_char_count;
    return cfg.require_both_sides_long ? (a_long && b_long) : (a_long || b_long);
}

MatchResult keyword_match(const KeywordProfile& a, const KeywordProfile& b,
                          const MatchConfig& cfg) {
    std::unordered_set<std::string> ka = lemma_set(a);
    std::unordered_set<std::string> kb = lemma_set(b);
    std::int64_t ab = directional_count(ka, kb, b.translated_keywords);
    std::int64_t ba = directional_count(kb, ka, a.translated_keywords);
    MatchResult res;
    res.shared = std::max(ab, ba);
    res.matched = res.shared >= cfg.min_shared_keywords;
    return res;
}

std::vector<FilterVerdict> heuristic_filters(const SurfaceStats& a, const SurfaceStats& b,
                                             const MatchConfig& cfg) {
    std::vector<FilterVerdict> verdicts;
    verdicts.reserve(4);

    double wc_diff = relative_diff(static_cast<double>(a.word_count),
                                   static_cast<double>(b.word_count));
    verdicts.push_back({FilterKind::word_count_ratio, wc_diff <= cfg.max_wordcount_ratio_diff});

    std::int64_t cap_diff =
        std::abs(a.capitalized_midline_count - b.capitalized_midline_count);
    verdicts.push_back({FilterKind::capitalized_midline, cap_diff <= cfg.max_capitalized_diff});

    std::int64_t num_diff = std::abs(a.number_count - b.number_count);
    verdicts.push_back({FilterKind::number_count, num_diff <= cfg.max_numbercount_diff});

    std::size_t n = std::min(a.numbers.size(), b.numbers.size());
    bool values_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (relative_diff(a.numbers[i], b.numbers[i]) > cfg.max_number_value_diff) {
            values_ok = false;
            break;
        }
    }
    verdicts.push_back({FilterKind::number_values, values_ok});
    return verdicts;
}

std::vector<std::pair<std::size_t, std::size_t>> candidate_pairs(
    const std::vector<KeywordProfile>& profiles_a,
    const std::vector<KeywordProfile>& profiles_b) {
    std::unordered_map<std::string, std::vector<std::size_t>> index;
    for (std::size_t j = 0; j < profiles_b.size(); ++j) {
        const auto& p = profiles_b[j];
        std::set<std::string> terms(p.translated_keywords);
        for (const auto& kw : p.keywords) terms.insert(kw.lemma);
        for (const auto& term : terms) index[term].push_back(j);
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < profiles_a.size(); ++i) {
        const auto& p = profiles_a[i];
        std::set<std::string> terms(p.translated_keywords);
        for (const auto& kw : p.keywords) terms.insert(kw.lemma);
        hits.clear();
        for (const auto& term : terms) {
            auto it = index.find(term);
            if (it == index.end()) continue;
            hits.insert(hits.end(), it->second.begin(), it->second.end());
        }
        std::sort(hits.begin(), hits.end());
        hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
        for (std::size_t j : hits) pairs.emplace_back(i, j);
    }
    return pairs;
}

AlignResult align(const std::vector<KeywordProfile>& profiles_a,
                  const std::vector<KeywordProfile>& profiles_b,
                  const std::unordered_map<std::string, SurfaceStats>& stats,
                  const MatchConfig& cfg, const AlignOptions& opts) {
    for (const auto* profiles : {&profiles_a, &profiles_b}) {
        for (const auto& p : *profiles) {
            if (!stats.count(p.doc_id)) {
                throw std::runtime_error("align: no surface stats for document '" + p.doc_id +
                                         "'");
            }
        }
    }

    auto candidates = candidate_pairs(profiles_a, profiles_b);
    std::vector<CandidatePair> evaluated(candidates.size());
    std::vector<char> gated(candidates.size(), 0);

    parallel_chunks(candidates.size(), opts.workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t c = begin; c < end; ++c) {
            const auto& pa = profiles_a[candidates[c].first];
            const auto& pb = profiles_b[candidates[c].second];
            if (!passes_length_gate(pa, pb, cfg)) continue;
            gated[c] = 1;

            CandidatePair& pair = evaluated[c];
            pair.doc_a = pa.doc_id;
            pair.doc_b = pb.doc_id;
            MatchResult match = keyword_match(pa, pb, cfg);
            pair.shared_keyword_count = match.shared;
            pair.keyword_matched = match.matched;
            pair.filter_verdicts = heuristic_filters(stats.at(pa.doc_id), stats.at(pb.doc_id), cfg);
            bool filters_ok = true;
            for (const auto& v : pair.filter_verdicts) filters_ok &= v.passed;
            pair.accepted = match.matched && filters_ok;
            if (pair.accepted) {
                pair.shared_keywords = shared_keyword_evidence(pa, pb, opts.td_ab, opts.td_ba);
            }
        }
    });

    AlignResult result;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (!gated[c]) continue;
        if (evaluated[c].accepted) {
            result.accepted.push_back(std::move(evaluated[c]));
        } else if (opts.keep_rejected) {
            result.rejected.push_back(std::move(evaluated[c]));
        }
    }

    auto order = [](const CandidatePair& x, const CandidatePair& y) {
        if (x.shared_keyword_count != y.shared_keyword_count) {
            return x.shared_keyword_count > y.shared_keyword_count;
        }
        if (x.doc_a != y.doc_a) return x.doc_a < y.doc_a;
        return x.doc_b < y.doc_b;
    };
    std::sort(result.accepted.begin(), result.accepted.end(), order);
    std::sort(result.rejected.begin(), result.rejected.end(), order);
    return result;
}

void emit_parallel_corpus(const std::vector<CandidatePair>& pairs,
                          const std::unordered_map<std::string, Document>& docs,
                          const std::string& path) {
    AtomicFile file(path);
    if (pairs.empty()) {
        file.stream() << "# parallel corpus: 0 pairs\n";
        file.commit();
        return;
    }
    std::unordered_set<std::string> seen;
    for (const auto& pair : pairs) {
        std::string pair_id = pair.doc_a + "::" + pair.doc_b;
        if (!seen.insert(pair_id).second) {
            throw std::runtime_error("emit: duplicate pair id '" + pair_id + "'");
        }
        auto doc_a = docs.find(pair.doc_a);
        auto doc_b = docs.find(pair.doc_b);
        if (doc_a == docs.end() || doc_b == docs.end()) {
            throw std::runtime_error("emit: unknown document id '" +
                                     (doc_a == docs.end() ? pair.doc_a : pair.doc_b) + "'");
        }
        nlohmann::ordered_json line;
        line["pair_id"] = pair_id;
        for (auto [key, doc] : {std::pair{"side_a", &doc_a->second}, {"side_b", &doc_b->second}}) {
            line[key] = {{"id", doc->id}, {"lang", doc->lang}, {"text", doc->text}};
        }
        auto& shared = line["shared_keywords"] = nlohmann::ordered_json::array();
        for (const auto& [la, lb] : pair.shared_keywords) {
            shared.push_back(nlohmann::ordered_json::array({la, lb}));
        }
        file.stream() << line.dump() << '\n';
    }
    file.commit();
}

void save_pairs(const std::vector<CandidatePair>& pairs, const std::string& path) {
    AtomicFile file(path);
    for (const auto& pair : pairs) {
        nlohmann::ordered_json line;
        line["doc_a"] = pair.doc_a;
        line["doc_b"] = pair.doc_b;
        line["shared"] = pair.shared_keyword_count;
        auto& keywords = line["keywords"] = nlohmann::ordered_json::array();
        for (const auto& [la, lb] : pair.shared_keywords) {
            keywords.push_back(nlohmann::ordered_json::array({la, lb}));
        }
        file.stream() << line.dump() << '\n';
    }
    file.commit();
}

std::vector<CandidatePair> load_pairs(const std::string& path) {
    LineReader reader(path);
    std::vector<CandidatePair> pairs;
    std::string raw;
    while (reader.next(raw)) {
        if (raw.empty() || raw[0] == '#') continue;
        nlohmann::json line = nlohmann::json::parse(raw, nullptr, false);
        if (line.is_discarded() || !line.is_object()) throw reader.error("invalid JSON object");
        if (!line.contains("doc_a") || !line["doc_a"].is_string() || !line.contains("doc_b") ||
            !line["doc_b"].is_string() || !line.contains("shared") ||
            !line["shared"].is_number_integer()) {
            throw reader.error("expected doc_a, doc_b and shared fields");
        }
        CandidatePair pair;
        pair.doc_a = line["doc_a"].get<std::string>();
        pair.doc_b = line["doc_b"].get<std::string>();
        pair.shared_keyword_count = line["shared"].get<std::int64_t>();
        pair.keyword_matched = true;
        pair.accepted = true;
        if (line.contains("keywords")) {
            if (!line["keywords"].is_array()) throw reader.error("keywords must be an array");
            for (const auto& item : line["keywords"]) {
                if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
                    !item[1].is_string()) {
                    throw reader.error("keyword evidence must be [lemma, lemma] pairs");
                }
                pair.shared_keywords.emplace_back(item[0].get<std::string>(),
                                                  item[1].get<std::string>());
            }
        }
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

void save_rejected_tsv(const std::vector<CandidatePair>& rejected, const MatchConfig& cfg,
                       const std::string& path) {
    AtomicFile file(path);
    file.stream() << "# min_shared_keywords=" << cfg.min_shared_keywords
                  << " max_wordcount_ratio_diff=" << format_double(cfg.max_wordcount_ratio_diff)
                  << " max_capitalized_diff=" << cfg.max_capitalized_diff
                  << " max_numbercount_diff=" << cfg.max_numbercount_diff
                  << " max_number_value_diff=" << format_double(cfg.max_number_value_diff)
                  << '\n';
    file.stream() << "doc_a\tdoc_b\tshared\tkeyword_matched";
    for (FilterKind kind :
         {FilterKind::word_count_ratio, FilterKind::capitalized_midline, FilterKind::number_count,
          FilterKind::number_values}) {
        file.stream() << '\t' << filter_name(kind);
    }
    file.stream() << '\n';
    for (const auto& pair : rejected) {
        file.stream() << pair.doc_a << '\t' << pair.doc_b << '\t' << pair.shared_keyword_count
                      << '\t' << (pair.keyword_matched ? "yes" : "no");
        for (const auto& verdict : pair.filter_verdicts) {
            file.stream() << '\t' << (verdict.passed ? "pass" : "fail");
        }
        file.stream() << '\n';
    }
    file.commit();
}

std::vector<CandidatePair> load_rejected_tsv(const std::string& path) {
    static constexpr FilterKind kOrder[] = {FilterKind::word_count_ratio,
                                            FilterKind::capitalized_midline,
                                            FilterKind::number_count, FilterKind::number_values};
    LineReader reader(path);
    std::vector<CandidatePair> pairs;
    std::string line;
    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("doc_a\t", 0) == 0) continue;
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 8) {
            throw reader.error("expected 8 tab-separated columns, got " +
                               std::to_string(cols.size()));
        }
        CandidatePair pair;
        pair.doc_a = cols[0];
        pair.doc_b = cols[1];
        bool ok = false;
        pair.shared_keyword_count = parse_int(cols[2], ok);
        if (!ok) throw reader.error("shared count is not an integer: '" + cols[2] + "'");
        pair.keyword_matched = cols[3] == "yes";
        for (std::size_t i = 0; i < 4; ++i) {
            const std::string& v = cols[4 + i];
            if (v != "pass" && v != "fail") {
                throw reader.error("verdict must be pass or fail, got '" + v + "'");
            }
            pair.filter_verdicts.push_back({kOrder[i], v == "pass"});
        }
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

}  // namespace parmine
