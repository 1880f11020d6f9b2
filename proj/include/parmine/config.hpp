#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

namespace parmine {

// `key = value` file with '#' comments. Typed getters record which keys were
// read so leftover (misspelled) keys can be reported as errors.
class Config {
public:
    Config() = default;

    static Config load(const std::string& path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::int64_t get_int(const std::string& key) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    double get_real(const std::string& key) const;
    double get_real(const std::string& key, double fallback) const;
    bool get_bool(const std::string& key) const;
    bool get_bool(const std::string& key, bool fallback) const;

    // Throws naming every key that no getter consumed.
    void ensure_consumed() const;

    const std::string& path() const { return path_; }

private:
    std::string require(const std::string& key) const;

    std::string path_;
    std::map<std::string, std::string> values_;
    mutable std::set<std::string> consumed_;
};

}  // namespace parmine
