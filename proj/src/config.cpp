#include "nslab/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nslab {

namespace {
std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}
}  // namespace

KeyValueFile KeyValueFile::parse(const std::string& text) {
    KeyValueFile kv;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::runtime_error("config parse error at line " + std::to_string(lineno) +
                                         ": unterminated section");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config parse error at line " + std::to_string(lineno) +
                                     ": expected key = value");
        kv.entries_.push_back({section, trim(line.substr(0, eq)), trim(line.substr(eq + 1))});
    }
    return kv;
}

KeyValueFile KeyValueFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string KeyValueFile::serialize() const {
    std::ostringstream out;
    std::string section;
    bool first = true;
    for (const auto& e : entries_) {
        if (e.section != section || first) {
            if (!e.section.empty()) {
                if (!first) out << "\n";
                out << "[" << e.section << "]\n";
            }
            section = e.section;
        }
        out << e.key << " = " << e.value << "\n";
        first = false;
    }
    return out.str();
}

void KeyValueFile::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write config file: " + path);
    out << serialize();
}

bool KeyValueFile::has(const std::string& section, const std::string& key) const {
    for (const auto& e : entries_)
        if (e.section == section && e.key == key) return true;
    return false;
}

std::string KeyValueFile::get(const std::string& section, const std::string& key,
                              const std::string& def) const {
    std::string v = def;
    for (const auto& e : entries_)
        if (e.section == section && e.key == key) v = e.value;
    return v;
}

std::vector<std::string> KeyValueFile::get_all(const std::string& section,
                                               const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& e : entries_)
        if (e.section == section && e.key == key) out.push_back(e.value);
    return out;
}

void KeyValueFile::set(const std::string& section, const std::string& key,
                       const std::string& value) {
    bool replaced = false;
    for (auto it = entries_.begin(); it != entries_.end();) {
        if (it->section == section && it->key == key) {
            if (!replaced) {
                it->value = value;
                replaced = true;
                ++it;
            } else {
                it = entries_.erase(it);
            }
        } else {
            ++it;
        }
    }
    if (!replaced) entries_.push_back({section, key, value});
}

void KeyValueFile::append(const std::string& section, const std::string& key,
                          const std::string& value) {
    entries_.push_back({section, key, value});
}

void KeyValueFile::apply_override(const std::string& spec) {
    std::size_t eq = spec.find('=');
    if (eq == std::string::npos)
        throw std::runtime_error("override must look like section.key=value: " + spec);
    std::string path = trim(spec.substr(0, eq));
    std::string value = trim(spec.substr(eq + 1));
    std::size_t dot = path.find('.');
    if (dot == std::string::npos)
        throw std::runtime_error("override must look like section.key=value: " + spec);
    set(path.substr(0, dot), path.substr(dot + 1), value);
}

double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::runtime_error("bad numeric value for " + what + ": '" + s + "'");
    }
}

long parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::runtime_error("bad integer value for " + what + ": '" + s + "'");
    }
}

bool parse_bool(const std::string& s, const std::string& what) {
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw std::runtime_error("bad boolean value for " + what + ": '" + s + "'");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace nslab
