#pragma once

#include <map>
#include <optional>
#include <string>

namespace polariton {

// Flat `name = value` parameter set. Lines starting with '#' are comments.
class KeyValueParams {
public:
    static KeyValueParams parse(const std::string& text);
    static KeyValueParams load(const std::string& path);

    void set(const std::string& key, const std::string& value);
    // Accepts "key=value".
    void set_assignment(const std::string& assignment);

    bool has(const std::string& key) const;
    std::optional<std::string> get(const std::string& key) const;
    double number(const std::string& key) const;
    double number(const std::string& key, double fallback) const;
    long integer(const std::string& key, long fallback) const;

    const std::map<std::string, std::string>& entries() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

double parse_double(const std::string& text, const std::string& what);

}  // namespace polariton
