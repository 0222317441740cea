#include "polariton/kv_params.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "polariton/errors.hpp"

namespace polariton {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

double parse_double(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    if (t.empty()) throw ValidationError(what + ": empty value");
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || errno == ERANGE)
        throw ValidationError(what + ": not a number: '" + t + "'");
    return v;
}

KeyValueParams KeyValueParams::parse(const std::string& text) {
    KeyValueParams kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("params line " + std::to_string(lineno) + ": expected name = value");
        const std::string key = trim(line.substr(0, eq));
        if (key.empty())
            throw ValidationError("params line " + std::to_string(lineno) + ": empty key");
        kv.values_[key] = trim(line.substr(eq + 1));
    }
    return kv;
}

KeyValueParams KeyValueParams::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ValidationError("cannot read params file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

void KeyValueParams::set(const std::string& key, const std::string& value) {
    values_[trim(key)] = trim(value);
}

void KeyValueParams::set_assignment(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || trim(assignment.substr(0, eq)).empty())
        throw ValidationError("override must be key=value: '" + assignment + "'");
    set(assignment.substr(0, eq), assignment.substr(eq + 1));
}

bool KeyValueParams::has(const std::string& key) const { return values_.count(key) != 0; }

std::optional<std::string> KeyValueParams::get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

double KeyValueParams::number(const std::string& key) const {
    auto v = get(key);
    if (!v) throw ValidationError("missing parameter: " + key);
    return parse_double(*v, key);
}

double KeyValueParams::number(const std::string& key, double fallback) const {
    auto v = get(key);
    return v ? parse_double(*v, key) : fallback;
}

long KeyValueParams::integer(const std::string& key, long fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    const double d = parse_double(*v, key);
    if (d != static_cast<double>(static_cast<long>(d)))
        throw ValidationError(key + ": expected an integer");
    return static_cast<long>(d);
}

}  // namespace polariton
