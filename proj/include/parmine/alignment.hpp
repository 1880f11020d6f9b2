#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "parmine/corpus.hpp"
#include "parmine/keywords.hpp"
#include "parmine/translation.hpp"

namespace parmine {

struct MatchConfig {
    std::int64_t min_shared_keywords = 5;
    std::int64_t profile_size = 12;
    std::int64_t min_char_count = 1000;  // at least one side must exceed this
    bool require_both_sides_long = false;
    double max_wordcount_ratio_diff = 0.10;
    std::int64_t max_capitalized_diff = 3;
    std::int64_t max_numbercount_diff = 2;
    double max_number_value_diff = 0.15;
};

enum class FilterKind {
    word_count_ratio,
    capitalized_midline,
    number_count,
    number_values,
};

const char* filter_name(FilterKind kind);

struct FilterVerdict {
    FilterKind kind;
    bool passed = false;

    bool operator==(const FilterVerdict&) const = default;
};

struct CandidatePair {
    std::string doc_a;
    std::string doc_b;
    std::int64_t shared_keyword_count = 0;
    std::vector<FilterVerdict> filter_verdicts;
    bool keyword_matched = false;
    bool accepted = false;
    // (a-side lemma, b-side lemma) evidence for the shared keywords
    std::vector<std::pair<std::string, std::string>> shared_keywords;

    bool operator==(const CandidatePair&) const = default;
};

struct ParallelCorpusEntry {
    std::string pair_id;
    Document side_a;
    Document side_b;
    std::vector<std::pair<std::string, std::string>> shared_keywords;
};

struct MatchResult {
    std::int64_t shared = 0;
    bool matched = false;
};

// True when the pair clears the character-length gate.
bool passes_length_gate(const KeywordProfile& a, const KeywordProfile& b,
                        const MatchConfig& cfg);

// Shared-keyword count between two profiles: keywords of one side found
// verbatim among the other side's keywords or among their translations,
// taken as the max over both directions, so the result is symmetric.
MatchResult keyword_match(const KeywordProfile& a, const KeywordProfile& b,
                          const MatchConfig& cfg);

// The four surface filters: word-count ratio, capitalized mid-sentence
// words, number count, and pairwise number values (sorted, truncated to the
// shorter multiset).
std::vector<FilterVerdict> heuristic_filters(const SurfaceStats& a, const SurfaceStats& b,
                                             const MatchConfig& cfg);

// Cross-language candidate pairs that share at least one keyword or keyword
// translation, generated through an inverted index. Sorted by (a index, b index).
std::vector<std::pair<std::size_t, std::size_t>> candidate_pairs(
    const std::vector<KeywordProfile>& profiles_a,
    const std::vector<KeywordProfile>& profiles_b);

struct AlignOptions {
    bool keep_rejected = false;
    // when present, used to annotate shared_keywords evidence on pairs
    const TranslationDictionary* td_ab = nullptr;
    const TranslationDictionary* td_ba = nullptr;
    unsigned workers = 1;
};

struct AlignResult {
    std::vector<CandidatePair> accepted;  // (shared desc, doc_a, doc_b)
    std::vector<CandidatePair> rejected;  // only with keep_rejected
};

// Evaluates every candidate with keyword_match then heuristic_filters.
// Every profiled document must have surface stats; a document may appear in
// any number of accepted pairs.
AlignResult align(const std::vector<KeywordProfile>& profiles_a,
                  const std::vector<KeywordProfile>& profiles_b,
                  const std::unordered_map<std::string, SurfaceStats>& stats,
                  const MatchConfig& cfg, const AlignOptions& opts = {});

// JSON lines, one ParallelCorpusEntry per accepted pair in align order;
// an empty result writes a single '#' header line.
void emit_parallel_corpus(const std::vector<CandidatePair>& pairs,
                          const std::unordered_map<std::string, Document>& docs,
                          const std::string& path);

// Align output as JSON lines {"doc_a","doc_b","shared","keywords":[[a,b]..]}.
void save_pairs(const std::vector<CandidatePair>& pairs, const std::string& path);
std::vector<CandidatePair> load_pairs(const std::string& path);

// Debug TSV of rejected candidates with per-filter verdicts.
void save_rejected_tsv(const std::vector<CandidatePair>& rejected, const MatchConfig& cfg,
                       const std::string& path);
std::vector<CandidatePair> load_rejected_tsv(const std::string& path);

}  // namespace parmine
