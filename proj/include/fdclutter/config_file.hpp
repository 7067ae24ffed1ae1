#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fdclutter {

/// Sectioned key/value text format:
///
///   # comment
///   [section]
///   key = value
///
/// Keys keep insertion order within a section so serialization round-trips.
class ConfigFile {
  public:
    static ConfigFile parse_file(const std::string& path);
    static ConfigFile parse_string(const std::string& text);

    bool has(const std::string& section, const std::string& key) const;
    std::vector<std::string> sections() const;
    std::vector<std::string> keys(const std::string& section) const;

    std::string get_string(const std::string& section, const std::string& key) const;
    std::string get_string_or(const std::string& section, const std::string& key,
                              const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double_or(const std::string& section, const std::string& key,
                         double fallback) const;
    std::int64_t get_int(const std::string& section, const std::string& key) const;
    std::int64_t get_int_or(const std::string& section, const std::string& key,
                            std::int64_t fallback) const;
    bool get_bool_or(const std::string& section, const std::string& key, bool fallback) const;

    void set(const std::string& section, const std::string& key, const std::string& value);
    void set_double(const std::string& section, const std::string& key, double value);
    void set_int(const std::string& section, const std::string& key, std::int64_t value);
    void set_bool(const std::string& section, const std::string& key, bool value);

    std::string serialize() const;
    void write_file(const std::string& path) const;

  private:
    struct Section {
        std::string name;
        std::vector<std::pair<std::string, std::string>> entries;
    };
    const std::string* find(const std::string& section, const std::string& key) const;
    Section* find_section(const std::string& name);
    const Section* find_section(const std::string& name) const;

    std::vector<Section> sections_;
};

}  // namespace fdclutter
