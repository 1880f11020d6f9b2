#include "parmine/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <unordered_set>

#include <json.hpp>

#include "parmine/unicode.hpp"
#include "parmine/util.hpp"

namespace parmine {

namespace {

bool is_apostrophe(char32_t cp) {
    return cp == 0x27 || cp == 0x2019 || cp == 0x02BC;
}

bool is_sentence_final(char32_t cp) {
    return cp == '.' || cp == '!' || cp == '?';
}

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    // decode at pos without consuming
    char32_t peek() const {
        std::size_t p = pos;
        return next_codepoint(text, p);
    }
    char32_t take() { return next_codepoint(text, pos); }
};

}  // namespace

TokenStream tokenize(const std::string& text, const std::string& /*lang*/) {
    TokenStream ts;
    Cursor cur{text};
    bool sentence_flag = true;  // text start counts as a sentence start

    while (!cur.done()) {
        std::size_t start = cur.pos;
        char32_t cp = cur.take();

        if (is_space(cp)) continue;

        if (is_letter(cp)) {
            char32_t first = cp;
            while (!cur.done()) {
                std::size_t mark = cur.pos;
                char32_t next = cur.take();
                if (is_letter(next)) continue;
                if (is_apostrophe(next) && !cur.done() && is_letter(cur.peek())) continue;
                cur.pos = mark;
                break;
            }
            Token t;
            t.surface = text.substr(start, cur.pos - start);
            t.kind = TokenKind::word;
            t.is_capitalized = is_uppercase_letter(first);
            t.sentence_initial = sentence_flag;
            sentence_flag = false;
            ts.tokens.push_back(std::move(t));
            continue;
        }

        if (is_ascii_digit(cp)) {
            bool seen_separator = false;
            while (!cur.done()) {
                std::size_t mark = cur.pos;
                char32_t next = cur.take();
                if (is_ascii_digit(next)) continue;
                if (!seen_separator && (next == '.' || next == ',') && !cur.done() &&
                    is_ascii_digit(cur.peek())) {
                    seen_separator = true;
                    continue;
                }
                cur.pos = mark;
                break;
            }
            Token t;
            t.surface = text.substr(start, cur.pos - start);
            t.kind = TokenKind::number;
            ts.tokens.push_back(std::move(t));
            continue;
        }

        Token t;
        t.surface = text.substr(start, cur.pos - start);
        t.kind = TokenKind::punctuation;
        ts.tokens.push_back(std::move(t));
        if (is_sentence_final(cp)) sentence_flag = true;
    }
    return ts;
}

double parse_number_value(const std::string& surface) {
    std::string normalized = surface;
    std::replace(normalized.begin(), normalized.end(), ',', '.');
    return std::strtod(normalized.c_str(), nullptr);
}

SurfaceStats surface_stats(const TokenStream& ts, const std::string& text) {
    SurfaceStats s;
    s.char_count = static_cast<std::int64_t>(codepoint_count(text));
    for (const Token& t : ts.tokens) {
        switch (t.kind) {
            case TokenKind::word:
                ++s.word_count;
                if (t.is_capitalized && !t.sentence_initial) ++s.capitalized_midline_count;
                break;
            case TokenKind::number:
                ++s.number_count;
                s.numbers.push_back(parse_number_value(t.surface));
                break;
            case TokenKind::punctuation:
                break;
        }
    }
    std::sort(s.numbers.begin(), s.numbers.end());
    return s;
}

std::vector<Document> load_corpus(const std::string& path) {
    LineReader reader(path);
    std::vector<Document> docs;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            throw reader.error("invalid JSON object");
        }
        Document d;
        for (const char* field : {"id", "lang", "text"}) {
            if (!j.contains(field) || !j[field].is_string()) {
                throw reader.error(std::string("missing or non-string field \"") + field + "\"");
            }
        }
        d.id = j["id"].get<std::string>();
        d.lang = j["lang"].get<std::string>();
        d.text = j["text"].get<std::string>();
        if (j.contains("source")) d.source = j["source"].get<std::string>();
        if (j.contains("timestamp")) d.timestamp = j["timestamp"].get<std::string>();
        if (d.id.empty()) throw reader.error("empty document id");
        if (!seen_ids.insert(d.id).second) {
            throw reader.error("duplicate document id \"" + d.id + "\"");
        }
        docs.push_back(std::move(d));
    }
    return docs;
}

void save_corpus(const std::vector<Document>& docs, const std::string& path) {
    AtomicFile out(path);
    for (const Document& d : docs) {
        nlohmann::ordered_json j;
        j["id"] = d.id;
        j["lang"] = d.lang;
        j["text"] = d.text;
        if (!d.source.empty()) j["source"] = d.source;
        if (!d.timestamp.empty()) j["timestamp"] = d.timestamp;
        out.stream() << j.dump() << '\n';
    }
    out.commit();
}

void save_surface_stats(const std::unordered_map<std::string, SurfaceStats>& stats,
                        const std::string& path) {
    std::map<std::string, const SurfaceStats*> ordered;
    for (const auto& [id, s] : stats) ordered.emplace(id, &s);

    AtomicFile out(path);
    for (const auto& [id, s] : ordered) {
        nlohmann::ordered_json j;
        j["id"] = id;
        j["word_count"] = s->word_count;
        j["char_count"] = s->char_count;
        j["capitalized_midline"] = s->capitalized_midline_count;
        j["number_count"] = s->number_count;
        j["numbers"] = s->numbers;
        out.stream() << j.dump() << '\n';
    }
    out.commit();
}

std::unordered_map<std::string, SurfaceStats> load_surface_stats(const std::string& path) {
    LineReader reader(path);
    std::unordered_map<std::string, SurfaceStats> stats;
    std::string line;
    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("id")) {
            throw reader.error("invalid stats record");
        }
        SurfaceStats s;
        try {
            s.word_count = j.at("word_count").get<std::int64_t>();
            s.char_count = j.at("char_count").get<std::int64_t>();
            s.capitalized_midline_count = j.at("capitalized_midline").get<std::int64_t>();
            s.number_count = j.at("number_count").get<std::int64_t>();
            s.numbers = j.at("numbers").get<std::vector<double>>();
        } catch (const nlohmann::json::exception& e) {
            throw reader.error(std::string("invalid stats record: ") + e.what());
        }
        if (s.number_count != static_cast<std::int64_t>(s.numbers.size())) {
            throw reader.error("number_count does not match numbers array");
        }
        std::sort(s.numbers.begin(), s.numbers.end());
        std::string id = j["id"].get<std::string>();
        if (!stats.emplace(id, std::move(s)).second) {
            throw reader.error("duplicate stats for id \"" + id + "\"");
        }
    }
    return stats;
}

}  // namespace parmine
