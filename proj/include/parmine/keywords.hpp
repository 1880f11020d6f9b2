#pragma once

#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "parmine/corpus.hpp"
#include "parmine/freq_dictionary.hpp"
#include "parmine/translation.hpp"

namespace parmine {

struct Bm25Params {
    double k1 = 2.0;
    double b = 0.75;
};

// Lemma occurrence counts for one document. doc_len counts every word
// token, including words that resolved to no lemma.
struct TermVector {
    std::string doc_id;
    std::int64_t doc_len = 0;
    std::unordered_map<std::string, std::int64_t> freqs;
};

struct ScoredKeyword {
    std::string lemma;
    double score = 0.0;

    bool operator==(const ScoredKeyword&) const = default;
};

// A document's matching fingerprint: its top-K keywords by BM25 score plus
// the set of their known target-language translations.
struct KeywordProfile {
    std::string doc_id;
    std::string lang;
    std::vector<ScoredKeyword> keywords;       // score desc, ties lemma asc
    std::set<std::string> translated_keywords;
    std::int64_t char_count = 0;

    bool operator==(const KeywordProfile&) const = default;
};

using StopwordSet = std::unordered_set<std::string>;

// One lemma per line, '#' comments; an empty file means no stopping.
StopwordSet load_stopwords(const std::string& path);

// log((N - n + 0.5) / (n + 0.5)), natural log; n = 0 for unknown lemmas.
// Negative for lemmas found in more than half the collection.
double idf(const FrequencyDictionary& fd, const std::string& lemma);

double bm25_score(const TermVector& tv, const std::string& lemma,
                  const FrequencyDictionary& fd, const Bm25Params& p);

// Resolves each word to its most corpus-frequent noun lemma, drops stopworded
// and unretained lemmas, scores the remaining terms with BM25 and keeps the
// top K with their translations.
KeywordProfile extract_keywords(const Document& doc, const MorphDictionary& md,
                                const FrequencyDictionary& fd, const StopwordSet& stop,
                                const TranslationDictionary& td, const Bm25Params& p,
                                std::size_t top_k = 12);

// Profile files are JSON lines sorted by doc id:
// {"id","lang","char_count","keywords":[{"lemma","score"}...],"translated":[...]}.
void save_profiles(const std::vector<KeywordProfile>& profiles, const std::string& path);
std::vector<KeywordProfile> load_profiles(const std::string& path);

}  // namespace parmine
