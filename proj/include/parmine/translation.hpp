#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "parmine/freq_dictionary.hpp"

namespace parmine {

// Multi-sense table as delivered by an upstream translation source:
// src lemma -> ordered candidate target lemmas.
struct RawTranslationTable {
    std::string src_lang;
    std::string dst_lang;
    std::unordered_map<std::string, std::vector<std::string>> rows;
};

// Single-sense lemma mapping after frequency-based sense resolution.
struct TranslationDictionary {
    std::string src_lang;
    std::string dst_lang;
    std::unordered_map<std::string, std::string> entries;

    bool operator==(const TranslationDictionary&) const = default;
};

// Picks, per source lemma, the candidate with the highest collection
// frequency in the target-language dictionary. Candidates unknown to the
// frequency dictionary rank below all known ones; ties and the all-unknown
// case fall back to candidate list order.
TranslationDictionary resolve_senses(const RawTranslationTable& raw,
                                     const FrequencyDictionary& dst_fd);

std::optional<std::string> translate_lemma(const TranslationDictionary& td,
                                           const std::string& lemma);

// TSV `src_lemma<TAB>cand1|cand2|...`; duplicate source rows merge their
// candidate lists in order with duplicates removed.
RawTranslationTable load_raw_table(const std::string& path, const std::string& src_lang,
                                   const std::string& dst_lang);
void save_raw_table(const RawTranslationTable& raw, const std::string& path);

// TSV `src_lemma<TAB>dst_lemma` sorted by source lemma.
void save_translation_dictionary(const TranslationDictionary& td, const std::string& path);
TranslationDictionary load_translation_dictionary(const std::string& path,
                                                  const std::string& src_lang,
                                                  const std::string& dst_lang);

}  // namespace parmine
