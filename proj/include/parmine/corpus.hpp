#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace parmine {

// One web publication. `lang` is a two-letter code; `text` is UTF-8.
struct Document {
    std::string id;
    std::string lang;
    std::string text;
    std::string source;     // optional, empty when absent
    std::string timestamp;  // optional ISO-8601, empty when absent

    bool operator==(const Document&) const = default;
};

enum class TokenKind { word, number, punctuation };

struct Token {
    std::string surface;
    TokenKind kind = TokenKind::word;
    bool is_capitalized = false;
    // true for the first word token after ., ! or ? (or at text start)
    bool sentence_initial = false;
};

struct TokenStream {
    std::vector<Token> tokens;
};

// Per-document surface statistics consumed by the alignment filters.
struct SurfaceStats {
    std::int64_t word_count = 0;
    std::int64_t char_count = 0;  // code points, not bytes
    std::int64_t capitalized_midline_count = 0;
    std::int64_t number_count = 0;
    std::vector<double> numbers;  // sorted ascending (multiset)

    bool operator==(const SurfaceStats&) const = default;
};

// Deterministic segmentation: words are maximal letter runs (letter-internal
// apostrophes kept, so Ukrainian forms like "п'ять" stay whole), numbers are
// digit runs with at most one '.' or ',' decimal separator, every other
// non-space character is a single punctuation token.
TokenStream tokenize(const std::string& text, const std::string& lang);

SurfaceStats surface_stats(const TokenStream& ts, const std::string& text);

// Value of a number token's surface; grouping has already been excluded by
// tokenization, ',' is read as a decimal point.
double parse_number_value(const std::string& surface);

// Corpus files are JSON lines: {"id","lang","text","source"?,"timestamp"?}.
// Blank lines and lines starting with '#' are skipped. Duplicate ids and
// missing required fields are reported with their line number.
std::vector<Document> load_corpus(const std::string& path);
void save_corpus(const std::vector<Document>& docs, const std::string& path);

// Stats files are JSON lines sorted by id:
// {"id","word_count","char_count","capitalized_midline","number_count","numbers"}.
void save_surface_stats(const std::unordered_map<std::string, SurfaceStats>& stats,
                        const std::string& path);
std::unordered_map<std::string, SurfaceStats> load_surface_stats(const std::string& path);

}  // namespace parmine
