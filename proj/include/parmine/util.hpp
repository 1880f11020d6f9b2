#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parmine {

// Error in the content of an input file; carries path and 1-based line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& path, std::size_t line, const std::string& msg);
    ParseError(const std::string& path, const std::string& msg);
};

// Usage-level problem: missing file, bad flag combination, bad config value.
// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Line-oriented reader that tracks line numbers for error reporting.
class LineReader {
public:
    explicit LineReader(const std::string& path);

    bool next(std::string& line);
    std::size_t line_number() const { return line_no_; }
    const std::string& path() const { return path_; }

    ParseError error(const std::string& msg) const {
        return ParseError(path_, line_no_, msg);
    }

private:
    std::string path_;
    std::ifstream in_;
    std::size_t line_no_ = 0;
};

// Writes to <path>.tmp and renames into place on commit; the temporary is
// removed if the writer is destroyed without commit, so failed stages do
// not leave partial outputs behind.
class AtomicFile {
public:
    explicit AtomicFile(const std::string& path);
    ~AtomicFile();

    AtomicFile(const AtomicFile&) = delete;
    AtomicFile& operator=(const AtomicFile&) = delete;

    std::ofstream& stream() { return out_; }
    void commit();

private:
    std::string path_;
    std::string tmp_path_;
    std::ofstream out_;
    bool committed_ = false;
};

std::vector<std::string> split(std::string_view line, char sep);

// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);
double parse_double(std::string_view s, bool& ok);
std::int64_t parse_int(std::string_view s, bool& ok);

// Fixed-algorithm helpers over mt19937_64 so generated corpora are
// byte-identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [lo, hi] inclusive
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
    // uniform in [0, 1)
    double uniform_real();
    bool bernoulli(double p) { return uniform_real() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

// Runs fn(begin, end) over [0, n) split into contiguous chunks, one per
// worker. fn must not touch shared mutable state outside its range.
void parallel_chunks(std::size_t n, unsigned workers,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace parmine
