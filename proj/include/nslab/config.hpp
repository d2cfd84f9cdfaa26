#pragma once

#include <string>
#include <vector>

namespace nslab {

/// Ordered key-value file with [section] headers; repeated keys accumulate.
/// Lines starting with '#' are comments. Encoded as "key = value".
class KeyValueFile {
  public:
    struct Entry {
        std::string section, key, value;
    };

    static KeyValueFile parse(const std::string& text);
    static KeyValueFile parse_file(const std::string& path);
    std::string serialize() const;
    void save(const std::string& path) const;

    bool has(const std::string& section, const std::string& key) const;
    /// Last occurrence wins; def returned when absent.
    std::string get(const std::string& section, const std::string& key,
                    const std::string& def = "") const;
    std::vector<std::string> get_all(const std::string& section, const std::string& key) const;

    void set(const std::string& section, const std::string& key, const std::string& value);
    void append(const std::string& section, const std::string& key, const std::string& value);

    /// "section.key=value" override; replaces existing occurrences.
    void apply_override(const std::string& spec);

    const std::vector<Entry>& entries() const { return entries_; }

  private:
    std::vector<Entry> entries_;
};

double parse_double(const std::string& s, const std::string& what);
long parse_int(const std::string& s, const std::string& what);
bool parse_bool(const std::string& s, const std::string& what);
std::string format_double(double v);  // 17 significant digits

}  // namespace nslab
