#include "fdclutter/config_file.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fdclutter {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

ConfigFile ConfigFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_string(buffer.str());
}

ConfigFile ConfigFile::parse_string(const std::string& text) {
    ConfigFile cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw std::runtime_error("config line " + std::to_string(line_no) +
                                         ": unterminated section header");
            section = trim(t.substr(1, t.size() - 2));
            if (!cfg.find_section(section)) cfg.sections_.push_back({section, {}});
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected key = value");
        cfg.set(section, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return cfg;
}

const ConfigFile::Section* ConfigFile::find_section(const std::string& name) const {
    for (const auto& s : sections_)
        if (s.name == name) return &s;
    return nullptr;
}

ConfigFile::Section* ConfigFile::find_section(const std::string& name) {
    for (auto& s : sections_)
        if (s.name == name) return &s;
    return nullptr;
}

const std::string* ConfigFile::find(const std::string& section, const std::string& key) const {
    const Section* s = find_section(section);
    if (!s) return nullptr;
    for (const auto& [k, v] : s->entries)
        if (k == key) return &v;
    return nullptr;
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
    return find(section, key) != nullptr;
}

std::vector<std::string> ConfigFile::sections() const {
    std::vector<std::string> out;
    for (const auto& s : sections_) out.push_back(s.name);
    return out;
}

std::vector<std::string> ConfigFile::keys(const std::string& section) const {
    std::vector<std::string> out;
    if (const Section* s = find_section(section))
        for (const auto& [k, v] : s->entries) out.push_back(k);
    return out;
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key) const {
    const std::string* v = find(section, key);
    if (!v) throw std::runtime_error("missing config key [" + section + "] " + key);
    return *v;
}

std::string ConfigFile::get_string_or(const std::string& section, const std::string& key,
                                      const std::string& fallback) const {
    const std::string* v = find(section, key);
    return v ? *v : fallback;
}

double ConfigFile::get_double(const std::string& section, const std::string& key) const {
    const std::string text = get_string(section, key);
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw std::runtime_error("config key [" + section + "] " + key +
                                 " is not a number: " + text);
    }
}

double ConfigFile::get_double_or(const std::string& section, const std::string& key,
                                 double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
}

std::int64_t ConfigFile::get_int(const std::string& section, const std::string& key) const {
    const std::string text = get_string(section, key);
    try {
        std::size_t used = 0;
        const long long value = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw std::runtime_error("config key [" + section + "] " + key +
                                 " is not an integer: " + text);
    }
}

std::int64_t ConfigFile::get_int_or(const std::string& section, const std::string& key,
                                    std::int64_t fallback) const {
    return has(section, key) ? get_int(section, key) : fallback;
}

bool ConfigFile::get_bool_or(const std::string& section, const std::string& key,
                             bool fallback) const {
    if (!has(section, key)) return fallback;
    std::string v = get_string(section, key);
    std::transform(v.begin(), v.end(), v.begin(), ::tolower);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw std::runtime_error("config key [" + section + "] " + key + " is not a boolean: " + v);
}

void ConfigFile::set(const std::string& section, const std::string& key,
                     const std::string& value) {
    Section* s = find_section(section);
    if (!s) {
        sections_.push_back({section, {}});
        s = &sections_.back();
    }
    for (auto& [k, v] : s->entries) {
        if (k == key) {
            v = value;
            return;
        }
    }
    s->entries.emplace_back(key, value);
}

void ConfigFile::set_double(const std::string& section, const std::string& key, double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    set(section, key, buffer);
}

void ConfigFile::set_int(const std::string& section, const std::string& key,
                         std::int64_t value) {
    set(section, key, std::to_string(value));
}

void ConfigFile::set_bool(const std::string& section, const std::string& key, bool value) {
    set(section, key, value ? "true" : "false");
}

std::string ConfigFile::serialize() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& s : sections_) {
        if (!first) out << "\n";
        first = false;
        out << "[" << s.name << "]\n";
        for (const auto& [k, v] : s.entries) out << k << " = " << v << "\n";
    }
    return out.str();
}

void ConfigFile::write_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << serialize();
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace fdclutter
