#include "parmine/freq_dictionary.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "parmine/util.hpp"

namespace parmine {

void FreqDictBuilder::add_document(const Document& doc, const MorphDictionary& md) {
    ++doc_count_;
    TokenStream ts = tokenize(doc.text, doc.lang);
    std::unordered_set<std::string> in_doc;
    for (const Token& t : ts.tokens) {
        if (t.kind != TokenKind::word) continue;
        ++total_words_;
        for (const Analysis& a : md.analyses(t.surface)) {
            if (a.pos != Pos::noun) continue;
            ++counts_[a.lemma].collection_freq;
            in_doc.insert(a.lemma);
        }
    }
    for (const std::string& lemma : in_doc) {
        ++counts_[lemma].doc_freq;
    }
}

void FreqDictBuilder::merge(const FreqDictBuilder& other) {
    doc_count_ += other.doc_count_;
    total_words_ += other.total_words_;
    for (const auto& [lemma, stats] : other.counts_) {
        TermStats& mine = counts_[lemma];
        mine.collection_freq += stats.collection_freq;
        mine.doc_freq += stats.doc_freq;
    }
}

FrequencyDictionary FreqDictBuilder::finish(std::int64_t prune_threshold) const {
    FrequencyDictionary fd;
    fd.lang = lang_;
    fd.doc_count = doc_count_;
    fd.avg_doc_len = doc_count_ > 0
                         ? static_cast<double>(total_words_) / static_cast<double>(doc_count_)
                         : 0.0;
    for (const auto& [lemma, stats] : counts_) {
        if (stats.collection_freq > prune_threshold) {
            fd.term_stats.emplace(lemma, stats);
        }
    }
    return fd;
}

FrequencyDictionary build_frequency_dictionary(const std::vector<Document>& docs,
                                               const MorphDictionary& md,
                                               std::int64_t prune_threshold,
                                               unsigned workers) {
    if (workers <= 1 || docs.size() < 2 * workers) {
        FreqDictBuilder builder(md.lang());
        for (const Document& d : docs) builder.add_document(d, md);
        return builder.finish(prune_threshold);
    }
    std::size_t chunk = (docs.size() + workers - 1) / workers;
    std::size_t shard_count = (docs.size() + chunk - 1) / chunk;
    std::vector<FreqDictBuilder> shards(shard_count, FreqDictBuilder(md.lang()));
    parallel_chunks(docs.size(), workers, [&](std::size_t begin, std::size_t end) {
        FreqDictBuilder& shard = shards[begin / chunk];
        for (std::size_t i = begin; i < end; ++i) shard.add_document(docs[i], md);
    });
    FreqDictBuilder total(md.lang());
    for (const FreqDictBuilder& shard : shards) total.merge(shard);
    return total.finish(prune_threshold);
}

std::optional<std::string> most_frequent_lemma(const FrequencyDictionary& fd,
                                               const std::vector<Analysis>& analyses) {
    const std::string* best = nullptr;
    std::int64_t best_freq = -1;
    for (const Analysis& a : analyses) {
        if (a.pos != Pos::noun) continue;
        const TermStats* stats = fd.find(a.lemma);
        if (stats == nullptr) continue;
        if (stats->collection_freq > best_freq ||
            (stats->collection_freq == best_freq && a.lemma < *best)) {
            best = &a.lemma;
            best_freq = stats->collection_freq;
        }
    }
    if (best == nullptr) return std::nullopt;
    return *best;
}

void save_frequency_dictionary(const FrequencyDictionary& fd, const std::string& path) {
    std::map<std::string, TermStats> ordered(fd.term_stats.begin(), fd.term_stats.end());
    AtomicFile out(path);
    out.stream() << "#lang=" << fd.lang << '\n';
    out.stream() << "#doc_count=" << fd.doc_count << '\n';
    out.stream() << "#avg_doc_len=" << format_double(fd.avg_doc_len) << '\n';
    for (const auto& [lemma, stats] : ordered) {
        out.stream() << lemma << '\t' << stats.collection_freq << '\t' << stats.doc_freq
                     << '\n';
    }
    out.commit();
}

FrequencyDictionary load_frequency_dictionary(const std::string& path) {
    LineReader reader(path);
    FrequencyDictionary fd;
    bool have_doc_count = false;
    bool have_avg = false;
    std::string line;
    while (reader.next(line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string_view sv(line);
            bool ok = false;
            if (sv.starts_with("#lang=")) {
                fd.lang = std::string(sv.substr(6));
            } else if (sv.starts_with("#doc_count=")) {
                fd.doc_count = parse_int(sv.substr(11), ok);
                if (!ok || fd.doc_count < 0) throw reader.error("invalid doc_count");
                have_doc_count = true;
            } else if (sv.starts_with("#avg_doc_len=")) {
                fd.avg_doc_len = parse_double(sv.substr(13), ok);
                if (!ok || fd.avg_doc_len < 0) throw reader.error("invalid avg_doc_len");
                have_avg = true;
            }
            continue;
        }
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 3) {
            throw reader.error("expected 3 tab-separated columns, got " +
                               std::to_string(cols.size()));
        }
        if (cols[0].empty()) throw reader.error("empty lemma");
        bool ok_cf = false;
        bool ok_df = false;
        TermStats stats;
        stats.collection_freq = parse_int(cols[1], ok_cf);
        stats.doc_freq = parse_int(cols[2], ok_df);
        if (!ok_cf || !ok_df) throw reader.error("non-numeric frequency");
        if (stats.doc_freq < 1) throw reader.error("doc_freq must be >= 1");
        if (stats.doc_freq > fd.doc_count) {
            throw reader.error("doc_freq exceeds doc_count");
        }
        if (stats.collection_freq < stats.doc_freq) {
            throw reader.error("collection_freq below doc_freq");
        }
        if (!fd.term_stats.emplace(cols[0], stats).second) {
            throw reader.error("duplicate lemma \"" + cols[0] + "\"");
        }
    }
    if (!have_doc_count || !have_avg) {
        throw ParseError(path, "missing #doc_count= or #avg_doc_len= header");
    }
    return fd;
}

}  // namespace parmine
