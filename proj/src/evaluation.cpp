#include "parmine/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>
#include "parmine/config.hpp"
#include "parmine/util.hpp"

namespace parmine {

namespace {

constexpr std::int64_t kTopicsPerDoc = 12;
constexpr std::int64_t kTopicFreq = 5;
constexpr std::int64_t kTopicBlock = kTopicsPerDoc * kTopicFreq;
constexpr std::int64_t kNumbersPerDoc = 3;
constexpr std::size_t kSentenceLen = 10;
constexpr char kConsonantsA[] = "bcdfghjklm";
constexpr char kConsonantsB[] = "npqrstvwzx";

std::string lemma_form(const char* consonants, char vowel, std::int64_t index, int width) {
    std::string digits = std::to_string(index);
    std::string form;
    form.reserve(2 * static_cast<std::size_t>(width));
    for (int i = static_cast<int>(digits.size()); i < width; ++i) {
        form += consonants[0];
        form += vowel;
    }
    for (char d : digits) {
        form += consonants[d - '0'];
        form += vowel;
    }
    return form;
}

class ZipfSampler {
public:
    ZipfSampler(std::int64_t n, double exponent) {
        cumulative_.reserve(static_cast<std::size_t>(n));
        double total = 0.0;
        for (std::int64_t rank = 1; rank <= n; ++rank) {
            total += std::pow(static_cast<double>(rank), -exponent);
            cumulative_.push_back(total);
        }
    }

    std::int64_t sample(Rng& rng) const {
        double u = rng.uniform_real() * cumulative_.back();
        auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
        if (it == cumulative_.end()) --it;
        return it - cumulative_.begin();
    }

private:
    std::vector<double> cumulative_;
};

std::string render_text(const std::vector<std::string>& tokens) {
    std::string text;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) text += (i % kSentenceLen == 0) ? ". " : " ";
        text += tokens[i];
    }
    if (!text.empty()) text += '.';
    return text;
}

std::string padded(std::int64_t n) {
    std::string s = std::to_string(n);
    return s.size() < 6 ? std::string(6 - s.size(), '0') + s : s;
}

std::pair<std::string, std::string> unordered_key(const std::string& x, const std::string& y) {
    return x <= y ? std::pair(x, y) : std::pair(y, x);
}

}  // namespace

void validate_spec(const SyntheticSpec& spec) {
    auto rate_ok = [](double r) { return r >= 0.0 && r <= 1.0; };
    if (!rate_ok(spec.noise_ops.keyword_drop_rate) ||
        !rate_ok(spec.noise_ops.word_insertion_rate) || !rate_ok(spec.noise_ops.number_jitter)) {
        throw ConfigError("synthetic spec: noise rates must lie in [0, 1]");
    }
    if (spec.n_pairs < 0 || spec.n_noise_a < 0 || spec.n_noise_b < 0) {
        throw ConfigError("synthetic spec: document counts must be non-negative");
    }
    if (spec.zipf_exponent < 0.0) {
        throw ConfigError("synthetic spec: zipf_exponent must be non-negative");
    }
    if (spec.doc_len_min < kTopicBlock || spec.doc_len_max < spec.doc_len_min) {
        throw ConfigError("synthetic spec: document length range must be ordered and at least " +
                          std::to_string(kTopicBlock) + " words");
    }
    std::int64_t stories = spec.n_pairs + spec.n_noise_a + spec.n_noise_b;
    std::int64_t needed = stories * kTopicsPerDoc + kTopicsPerDoc;
    if (spec.vocab_size < needed) {
        throw ConfigError("synthetic spec: vocab_size " + std::to_string(spec.vocab_size) +
                          " too small for " + std::to_string(stories) + " documents, need at least " +
                          std::to_string(needed));
    }
}

SyntheticOutput generate_synthetic(const SyntheticSpec& spec) {
    validate_spec(spec);

    std::int64_t stories = spec.n_pairs + spec.n_noise_a + spec.n_noise_b;
    std::int64_t topic_total = stories * kTopicsPerDoc;
    std::int64_t pool_size = spec.vocab_size - topic_total;
    int width = std::max<int>(4, static_cast<int>(std::to_string(spec.vocab_size - 1).size()));

    SyntheticOutput out;
    out.morph_a = MorphDictionary(spec.lang_a);
    out.morph_b = MorphDictionary(spec.lang_b);
    out.table_ab.src_lang = spec.lang_a;
    out.table_ab.dst_lang = spec.lang_b;
    out.table_ba.src_lang = spec.lang_b;
    out.table_ba.dst_lang = spec.lang_a;

    std::vector<std::string> forms_a, forms_b;
    forms_a.reserve(static_cast<std::size_t>(spec.vocab_size));
    forms_b.reserve(static_cast<std::size_t>(spec.vocab_size));
    for (std::int64_t c = 0; c < spec.vocab_size; ++c) {
        forms_a.push_back(lemma_form(kConsonantsA, 'a', c, width));
        forms_b.push_back(lemma_form(kConsonantsB, 'o', c, width));
        out.morph_a.add(forms_a.back(), {forms_a.back(), Pos::noun});
        out.morph_b.add(forms_b.back(), {forms_b.back(), Pos::noun});
        out.table_ab.rows[forms_a.back()] = {forms_b.back()};
        out.table_ba.rows[forms_b.back()] = {forms_a.back()};
    }

    Rng rng(spec.seed);
    ZipfSampler zipf(pool_size, spec.zipf_exponent);
    auto background = [&]() { return topic_total + zipf.sample(rng); };

    auto make_concepts = [&](std::int64_t story) {
        std::int64_t len = rng.uniform_int(spec.doc_len_min, spec.doc_len_max);
        std::vector<std::int64_t> concepts;
        concepts.reserve(static_cast<std::size_t>(len));
        for (std::int64_t t = 0; t < kTopicsPerDoc; ++t) {
            for (std::int64_t k = 0; k < kTopicFreq; ++k) {
                concepts.push_back(story * kTopicsPerDoc + t);
            }
        }
        for (std::int64_t i = kTopicBlock; i < len; ++i) concepts.push_back(background());
        rng.shuffle(concepts);
        return concepts;
    };

    auto draw_numbers = [&]() {
        std::vector<std::int64_t> values(kNumbersPerDoc);
        for (auto& v : values) v = rng.uniform_int(100, 99999);
        return values;
    };

    auto build_tokens = [&](const std::vector<std::int64_t>& concepts,
                            const std::vector<std::string>& forms,
                            const std::vector<std::int64_t>& numbers) {
        std::vector<std::string> tokens;
        tokens.reserve(concepts.size() + numbers.size());
        for (std::int64_t c : concepts) tokens.push_back(forms[static_cast<std::size_t>(c)]);
        for (std::int64_t n : numbers) {
            std::int64_t pos = rng.uniform_int(0, static_cast<std::int64_t>(tokens.size()));
            tokens.insert(tokens.begin() + pos, std::to_string(n));
        }
        return tokens;
    };

    std::int64_t story = 0;
    for (std::int64_t p = 0; p < spec.n_pairs; ++p, ++story) {
        auto concepts = make_concepts(story);
        auto numbers = draw_numbers();
        std::string text_a = render_text(build_tokens(concepts, forms_a, numbers));

        auto concepts_b = concepts;
        for (std::int64_t t = 0; t < kTopicsPerDoc; ++t) {
            if (rng.bernoulli(spec.noise_ops.keyword_drop_rate)) {
                std::replace(concepts_b.begin(), concepts_b.end(), story * kTopicsPerDoc + t,
                             background());
            }
        }
        auto inserted = static_cast<std::int64_t>(spec.noise_ops.word_insertion_rate *
                                                  static_cast<double>(concepts_b.size()));
        for (std::int64_t i = 0; i < inserted; ++i) {
            std::int64_t c = background();
            std::int64_t pos = rng.uniform_int(0, static_cast<std::int64_t>(concepts_b.size()));
            concepts_b.insert(concepts_b.begin() + pos, c);
        }
        std::vector<std::int64_t> numbers_b;
        numbers_b.reserve(numbers.size());
        for (std::int64_t x : numbers) {
            double u = rng.uniform_real() * 2.0 - 1.0;
            auto y = std::llround(static_cast<double>(x) *
                                  (1.0 + spec.noise_ops.number_jitter * u));
            numbers_b.push_back(std::max<std::int64_t>(y, 0));
        }
        std::string text_b = render_text(build_tokens(concepts_b, forms_b, numbers_b));

        std::string id_a = "a-p" + padded(p + 1);
        std::string id_b = "b-p" + padded(p + 1);
        out.docs_a.push_back({id_a, spec.lang_a, std::move(text_a), "synthetic", ""});
        out.docs_b.push_back({id_b, spec.lang_b, std::move(text_b), "synthetic", ""});
        out.gold.emplace_back(id_a, id_b);
    }

    for (std::int64_t i = 0; i < spec.n_noise_a; ++i, ++story) {
        auto concepts = make_concepts(story);
        auto numbers = draw_numbers();
        out.docs_a.push_back({"a-n" + padded(i + 1), spec.lang_a,
                              render_text(build_tokens(concepts, forms_a, numbers)), "synthetic",
                              ""});
    }
    for (std::int64_t i = 0; i < spec.n_noise_b; ++i, ++story) {
        auto concepts = make_concepts(story);
        auto numbers = draw_numbers();
        out.docs_b.push_back({"b-n" + padded(i + 1), spec.lang_b,
                              render_text(build_tokens(concepts, forms_b, numbers)), "synthetic",
                              ""});
    }
    return out;
}

SyntheticSpec load_synthetic_spec(const std::string& path) {
    Config cfg = Config::load(path);
    SyntheticSpec spec;
    spec.n_pairs = cfg.get_int("n_pairs");
    spec.n_noise_a = cfg.get_int("n_noise_a", 0);
    spec.n_noise_b = cfg.get_int("n_noise_b", 0);
    spec.vocab_size = cfg.get_int("vocab_size");
    spec.doc_len_min = cfg.get_int("doc_len_min");
    spec.doc_len_max = cfg.get_int("doc_len_max");
    spec.noise_ops.keyword_drop_rate = cfg.get_real("keyword_drop_rate", 0.0);
    spec.noise_ops.word_insertion_rate = cfg.get_real("word_insertion_rate", 0.0);
    spec.noise_ops.number_jitter = cfg.get_real("number_jitter", 0.0);
    spec.zipf_exponent = cfg.get_real("zipf_exponent", 1.0);
    spec.seed = static_cast<std::uint64_t>(cfg.get_int("seed", 0));
    spec.lang_a = cfg.get_string("lang_a", "aa");
    spec.lang_b = cfg.get_string("lang_b", "bb");
    cfg.ensure_consumed();
    validate_spec(spec);
    return spec;
}

EvalReport evaluate(const std::vector<CandidatePair>& output,
                    const std::vector<std::pair<std::string, std::string>>& gold,
                    const std::vector<CandidatePair>& rejected) {
    std::set<std::pair<std::string, std::string>> out_set, gold_set;
    for (const auto& pair : output) out_set.insert(unordered_key(pair.doc_a, pair.doc_b));
    for (const auto& [a, b] : gold) gold_set.insert(unordered_key(a, b));

    EvalReport report;
    for (const auto& key : out_set) {
        if (gold_set.count(key)) {
            ++report.true_pos;
        } else {
            ++report.false_pos;
        }
    }
    report.false_neg = static_cast<std::int64_t>(gold_set.size()) - report.true_pos;

    std::int64_t found = report.true_pos + report.false_pos;
    std::int64_t wanted = report.true_pos + report.false_neg;
    report.precision = found ? static_cast<double>(report.true_pos) / found : 1.0;
    report.recall = wanted ? static_cast<double>(report.true_pos) / wanted : 1.0;
    double pr = report.precision + report.recall;
    report.f1 = pr > 0.0 ? 2.0 * report.precision * report.recall / pr : 0.0;

    for (FilterKind kind :
         {FilterKind::word_count_ratio, FilterKind::capitalized_midline, FilterKind::number_count,
          FilterKind::number_values}) {
        report.filter_rejections[filter_name(kind)] = 0;
    }
    for (const auto& pair : rejected) {
        for (const auto& verdict : pair.filter_verdicts) {
            if (!verdict.passed) ++report.filter_rejections[filter_name(verdict.kind)];
        }
    }
    return report;
}

void save_gold_pairs(const std::vector<std::pair<std::string, std::string>>& gold,
                     const std::string& path) {
    AtomicFile file(path);
    for (const auto& [a, b] : gold) file.stream() << a << '\t' << b << '\n';
    file.commit();
}

std::vector<std::pair<std::string, std::string>> load_gold_pairs(const std::string& path) {
    LineReader reader(path);
    std::vector<std::pair<std::string, std::string>> gold;
    std::string line;
    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 2 || cols[0].empty() || cols[1].empty()) {
            throw reader.error("expected two tab-separated document ids");
        }
        gold.emplace_back(cols[0], cols[1]);
    }
    return gold;
}

void save_report(const EvalReport& report, const std::string& path) {
    nlohmann::ordered_json doc;
    doc["precision"] = report.precision;
    doc["recall"] = report.recall;
    doc["f1"] = report.f1;
    doc["true_pos"] = report.true_pos;
    doc["false_pos"] = report.false_pos;
    doc["false_neg"] = report.false_neg;
    auto& rejections = doc["filter_rejections"] = nlohmann::ordered_json::object();
    for (const auto& [name, count] : report.filter_rejections) rejections[name] = count;
    AtomicFile file(path);
    file.stream() << doc.dump(2) << '\n';
    file.commit();
}

std::string format_report(const EvalReport& report) {
    std::string text;
    text += "precision: " + format_double(report.precision) + '\n';
    text += "recall:    " + format_double(report.recall) + '\n';
    text += "f1:        " + format_double(report.f1) + '\n';
    text += "true_pos:  " + std::to_string(report.true_pos) + '\n';
    text += "false_pos: " + std::to_string(report.false_pos) + '\n';
    text += "false_neg: " + std::to_string(report.false_neg) + '\n';
    text += "rejected by filter:\n";
    for (const auto& [name, count] : report.filter_rejections) {
        text += "  " + name + ": " + std::to_string(count) + '\n';
    }
    return text;
}

}  // namespace parmine
