#include "params.hpp"

#include <fstream>
#include <sstream>

#include "layerstab/error.hpp"

namespace layerstab::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

ParamFile ParamFile::parse(const std::string& text) {
    ParamFile out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ValidationError("params line " + std::to_string(lineno) + ": expected key=value");
        }
        const auto key = trim(t.substr(0, eq));
        if (key.empty()) throw ValidationError("params line " + std::to_string(lineno) + ": empty key");
        if (out.values_.count(key)) {
            throw ValidationError("params line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        }
        out.values_[key] = trim(t.substr(eq + 1));
    }
    return out;
}

ParamFile ParamFile::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ValidationError("cannot read params file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

std::optional<std::string> ParamFile::get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

std::optional<double> ParamFile::number(const std::string& key) const {
    const auto v = get(key);
    if (!v) return std::nullopt;
    try {
        size_t used = 0;
        const double x = std::stod(*v, &used);
        if (used != v->size()) throw std::invalid_argument(key);
        return x;
    } catch (const std::exception&) {
        throw ValidationError("params: '" + key + "' is not a number: " + *v);
    }
}

std::optional<int> ParamFile::integer(const std::string& key) const {
    const auto v = get(key);
    if (!v) return std::nullopt;
    try {
        size_t used = 0;
        const int x = std::stoi(*v, &used);
        if (used != v->size()) throw std::invalid_argument(key);
        return x;
    } catch (const std::exception&) {
        throw ValidationError("params: '" + key + "' is not an integer: " + *v);
    }
}

}  // namespace layerstab::cli
