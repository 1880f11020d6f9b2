#include "parmine/util.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <thread>

namespace parmine {

namespace {

std::string located(const std::string& path, std::size_t line, const std::string& msg) {
    return path + ":" + std::to_string(line) + ": " + msg;
}

}  // namespace

ParseError::ParseError(const std::string& path, std::size_t line, const std::string& msg)
    : std::runtime_error(located(path, line, msg)) {}

ParseError::ParseError(const std::string& path, const std::string& msg)
    : std::runtime_error(path + ": " + msg) {}

LineReader::LineReader(const std::string& path) : path_(path), in_(path) {
    if (!in_) {
        throw ConfigError("cannot open " + path);
    }
}

bool LineReader::next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++line_no_;
    return true;
}

AtomicFile::AtomicFile(const std::string& path)
    : path_(path), tmp_path_(path + ".tmp"), out_(tmp_path_, std::ios::binary | std::ios::trunc) {
    if (!out_) {
        throw ConfigError("cannot write " + tmp_path_);
    }
}

AtomicFile::~AtomicFile() {
    if (!committed_) {
        out_.close();
        std::error_code ec;
        std::filesystem::remove(tmp_path_, ec);
    }
}

void AtomicFile::commit() {
    out_.flush();
    if (!out_) {
        throw std::runtime_error("write failed: " + tmp_path_);
    }
    out_.close();
    std::error_code ec;
    std::filesystem::rename(tmp_path_, path_, ec);
    if (ec) {
        throw std::runtime_error("cannot rename " + tmp_path_ + " to " + path_ + ": " + ec.message());
    }
    committed_ = true;
}

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(line.substr(start));
            return out;
        }
        out.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view s, bool& ok) {
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    ok = res.ec == std::errc() && res.ptr == s.data() + s.size();
    return v;
}

std::int64_t parse_int(std::string_view s, bool& ok) {
    std::int64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    ok = res.ec == std::errc() && res.ptr == s.data() + s.size();
    return v;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u64() % span);
}

double Rng::uniform_real() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

void parallel_chunks(std::size_t n, unsigned workers,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
    if (workers == 0) workers = 1;
    if (n == 0) return;
    if (workers == 1 || n < 2 * workers) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t begin = static_cast<std::size_t>(w) * chunk;
        if (begin >= n) break;
        std::size_t end = std::min(n, begin + chunk);
        threads.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace parmine
