#include "parmine/config.hpp"

#include "parmine/util.hpp"

namespace parmine {

namespace {

std::string trim(std::string_view sv) {
    std::size_t begin = sv.find_first_not_of(" \t");
    if (begin == std::string_view::npos) return {};
    std::size_t end = sv.find_last_not_of(" \t");
    return std::string(sv.substr(begin, end - begin + 1));
}

}  // namespace

Config Config::load(const std::string& path) {
    LineReader reader(path);
    Config cfg;
    cfg.path_ = path;
    std::string line;
    while (reader.next(line)) {
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(reader.line_number()) +
                              ": expected key = value");
        }
        std::string key = trim(std::string_view(stripped).substr(0, eq));
        std::string value = trim(std::string_view(stripped).substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(path + ":" + std::to_string(reader.line_number()) + ": empty key");
        }
        if (!cfg.values_.emplace(key, value).second) {
            throw ConfigError(path + ":" + std::to_string(reader.line_number()) +
                              ": duplicate key '" + key + "'");
        }
    }
    return cfg;
}

std::string Config::require(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) {
        throw ConfigError(path_ + ": missing required key '" + key + "'");
    }
    consumed_.insert(key);
    return it->second;
}

std::string Config::get_string(const std::string& key) const { return require(key); }

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    return has(key) ? require(key) : fallback;
}

std::int64_t Config::get_int(const std::string& key) const {
    std::string raw = require(key);
    bool ok = false;
    std::int64_t value = parse_int(raw, ok);
    if (!ok) throw ConfigError(path_ + ": key '" + key + "': not an integer: '" + raw + "'");
    return value;
}

std::int64_t Config::get_int(const std::string& key, std::int64_t fallback) const {
    return has(key) ? get_int(key) : fallback;
}

double Config::get_real(const std::string& key) const {
    std::string raw = require(key);
    bool ok = false;
    double value = parse_double(raw, ok);
    if (!ok) throw ConfigError(path_ + ": key '" + key + "': not a number: '" + raw + "'");
    return value;
}

double Config::get_real(const std::string& key, double fallback) const {
    return has(key) ? get_real(key) : fallback;
}

bool Config::get_bool(const std::string& key) const {
    std::string raw = require(key);
    if (raw == "true" || raw == "1" || raw == "yes") return true;
    if (raw == "false" || raw == "0" || raw == "no") return false;
    throw ConfigError(path_ + ": key '" + key + "': not a boolean: '" + raw + "'");
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    return has(key) ? get_bool(key) : fallback;
}

void Config::ensure_consumed() const {
    std::string unknown;
    for (const auto& [key, value] : values_) {
        if (consumed_.count(key)) continue;
        if (!unknown.empty()) unknown += ", ";
        unknown += "'" + key + "'";
    }
    if (!unknown.empty()) {
        throw ConfigError(path_ + ": unknown key(s): " + unknown);
    }
}

}  // namespace parmine
