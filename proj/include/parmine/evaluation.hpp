#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parmine/alignment.hpp"
#include "parmine/corpus.hpp"
#include "parmine/morphology.hpp"
#include "parmine/translation.hpp"

namespace parmine {

struct NoiseOps {
    // chance that a planted topic lemma is swapped out on the translated side
    double keyword_drop_rate = 0.0;
    // extra background words per word of the translated side (floored count)
    double word_insertion_rate = 0.0;
    // max relative perturbation applied to the translated side's numbers
    double number_jitter = 0.0;
};

struct SyntheticSpec {
    std::int64_t n_pairs = 0;
    std::int64_t n_noise_a = 0;
    std::int64_t n_noise_b = 0;
    std::int64_t vocab_size = 0;
    std::int64_t doc_len_min = 0;  // words per document, inclusive range
    std::int64_t doc_len_max = 0;
    NoiseOps noise_ops;
    double zipf_exponent = 1.0;
    std::uint64_t seed = 0;
    std::string lang_a = "aa";
    std::string lang_b = "bb";
};

struct SyntheticOutput {
    std::vector<Document> docs_a;
    std::vector<Document> docs_b;
    std::vector<std::pair<std::string, std::string>> gold;
    MorphDictionary morph_a;
    MorphDictionary morph_b;
    RawTranslationTable table_ab;
    RawTranslationTable table_ba;
};

struct EvalReport {
    double precision = 1.0;
    double recall = 1.0;
    double f1 = 1.0;
    std::int64_t true_pos = 0;
    std::int64_t false_pos = 0;
    std::int64_t false_neg = 0;
    std::map<std::string, std::int64_t> filter_rejections;
};

// Each generated story carries 12 private topic lemmas repeated often enough
// to dominate its BM25 profile; the rest of a document is Zipf-sampled
// background vocabulary. True pairs are lemma-by-lemma translations of the
// same story with noise_ops applied to the B side. The two languages use
// disjoint letter alphabets, so no wordform collides across sides.
SyntheticOutput generate_synthetic(const SyntheticSpec& spec);

// Throws on out-of-range rates, a vocabulary too small for the requested
// document count, or a length range shorter than the planted topic block.
void validate_spec(const SyntheticSpec& spec);

SyntheticSpec load_synthetic_spec(const std::string& path);

// Unordered id-pair set comparison of pipeline output against gold.
// Precision and recall fall back to 1.0 on an empty denominator; rejected
// candidates feed the per-filter rejection histogram.
EvalReport evaluate(const std::vector<CandidatePair>& output,
                    const std::vector<std::pair<std::string, std::string>>& gold,
                    const std::vector<CandidatePair>& rejected = {});

void save_gold_pairs(const std::vector<std::pair<std::string, std::string>>& gold,
                     const std::string& path);
std::vector<std::pair<std::string, std::string>> load_gold_pairs(const std::string& path);

void save_report(const EvalReport& report, const std::string& path);
std::string format_report(const EvalReport& report);

}  // namespace parmine
