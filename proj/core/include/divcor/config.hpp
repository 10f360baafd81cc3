#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace divcor {

// Flat key=value configuration: one concept per key, '#' comments, list
// values comma-separated.  All accessors throw ConfigError on malformed or
// missing (when no default is given) values.
class KeyValueConfig {
public:
    KeyValueConfig() = default;
    static KeyValueConfig from_file(const std::string& path);
    static KeyValueConfig from_string(const std::string& text);

    bool has(const std::string& key) const;
    void set(const std::string& key, const std::string& value);

    std::string get(const std::string& key) const;
    std::string get(const std::string& key, const std::string& fallback) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const;
    double get_double(const std::string& key, double fallback) const;
    std::vector<double> get_list(const std::string& key) const;   // empty if absent
    std::vector<std::string> get_strings(const std::string& key) const;

    const std::map<std::string, std::string>& values() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

}  // namespace divcor
