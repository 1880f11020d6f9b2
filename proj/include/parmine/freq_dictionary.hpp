#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "parmine/corpus.hpp"
#include "parmine/morphology.hpp"

namespace parmine {

struct TermStats {
    std::int64_t collection_freq = 0;  // total occurrences in the collection
    std::int64_t doc_freq = 0;         // documents containing the lemma

    bool operator==(const TermStats&) const = default;
};

// Per-lemma corpus statistics for one language: N, avgdl and the n(q) /
// collection counts the scoring formulas need.
struct FrequencyDictionary {
    std::string lang;
    std::int64_t doc_count = 0;
    double avg_doc_len = 0.0;
    std::unordered_map<std::string, TermStats> term_stats;

    const TermStats* find(const std::string& lemma) const {
        auto it = term_stats.find(lemma);
        return it == term_stats.end() ? nullptr : &it->second;
    }

    bool operator==(const FrequencyDictionary&) const = default;
};

// Accumulates counts over documents; shards can be built independently and
// merged, then finished once. Every noun analysis of a word contributes its
// lemma; disambiguation happens later, at keyword extraction.
class FreqDictBuilder {
public:
    explicit FreqDictBuilder(std::string lang) : lang_(std::move(lang)) {}

    void add_document(const Document& doc, const MorphDictionary& md);
    void merge(const FreqDictBuilder& other);

    // Prunes lemmas whose collection frequency is <= prune_threshold
    // (default keeps only lemmas occurring more than twice).
    FrequencyDictionary finish(std::int64_t prune_threshold = 2) const;

private:
    std::string lang_;
    std::int64_t doc_count_ = 0;
    std::int64_t total_words_ = 0;
    std::unordered_map<std::string, TermStats> counts_;
};

FrequencyDictionary build_frequency_dictionary(const std::vector<Document>& docs,
                                               const MorphDictionary& md,
                                               std::int64_t prune_threshold = 2,
                                               unsigned workers = 1);

// Among the noun analyses whose lemma the dictionary retains, the lemma
// with the highest collection frequency; ties go to the lexicographically
// smallest lemma.
std::optional<std::string> most_frequent_lemma(const FrequencyDictionary& fd,
                                               const std::vector<Analysis>& analyses);

// TSV with `#doc_count=` / `#avg_doc_len=` headers then
// `lemma<TAB>collection_freq<TAB>doc_freq` rows sorted by lemma.
// Round-trips exactly, including avg_doc_len.
void save_frequency_dictionary(const FrequencyDictionary& fd, const std::string& path);
FrequencyDictionary load_frequency_dictionary(const std::string& path);

}  // namespace parmine
