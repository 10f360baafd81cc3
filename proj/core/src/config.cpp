#include "divcor/config.hpp"

#include <fstream>
#include <sstream>

#include "divcor/errors.hpp"

namespace divcor {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

KeyValueConfig KeyValueConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_string(buf.str());
}

KeyValueConfig KeyValueConfig::from_string(const std::string& text) {
    KeyValueConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
        cfg.values_[key] = value;
    }
    return cfg;
}

bool KeyValueConfig::has(const std::string& key) const { return values_.count(key) != 0; }

void KeyValueConfig::set(const std::string& key, const std::string& value) {
    values_[key] = value;
}

std::string KeyValueConfig::get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("missing config key: " + key);
    return it->second;
}

std::string KeyValueConfig::get(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

std::int64_t KeyValueConfig::get_int(const std::string& key, std::int64_t fallback) const {
    if (!has(key)) return fallback;
    try {
        std::size_t pos = 0;
        const std::int64_t v = std::stoll(get(key), &pos);
        if (pos != get(key).size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key " + key + ": expected integer, got '" + get(key) + "'");
    }
}

std::uint64_t KeyValueConfig::get_uint(const std::string& key, std::uint64_t fallback) const {
    const std::int64_t v = get_int(key, static_cast<std::int64_t>(fallback));
    if (v < 0) throw ConfigError("config key " + key + ": expected nonnegative integer");
    return static_cast<std::uint64_t>(v);
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
    if (!has(key)) return fallback;
    try {
        std::size_t pos = 0;
        const double v = std::stod(get(key), &pos);
        if (pos != get(key).size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key " + key + ": expected number, got '" + get(key) + "'");
    }
}

std::vector<std::string> KeyValueConfig::get_strings(const std::string& key) const {
    std::vector<std::string> out;
    if (!has(key)) return out;
    std::istringstream in(get(key));
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<double> KeyValueConfig::get_list(const std::string& key) const {
    std::vector<double> out;
    for (const auto& s : get_strings(key)) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(s, &pos));
            if (pos != s.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ConfigError("config key " + key + ": expected numeric list entry, got '" + s +
                              "'");
        }
    }
    return out;
}

}  // namespace divcor
