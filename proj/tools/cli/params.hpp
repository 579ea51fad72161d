#pragma once

#include <map>
#include <optional>
#include <string>

namespace layerstab::cli {

/// Flat key=value document. Blank lines and lines starting with '#' are
/// ignored; whitespace around keys and values is trimmed.
class ParamFile {
public:
    ParamFile() = default;
    static ParamFile parse(const std::string& text);
    static ParamFile load(const std::string& path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    std::optional<std::string> get(const std::string& key) const;
    std::optional<double> number(const std::string& key) const;
    std::optional<int> integer(const std::string& key) const;
    const std::map<std::string, std::string>& values() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

}  // namespace layerstab::cli
