#pragma once

#include <cstdio>
#include <string>

namespace layerstab::cli {

/// Fixed 17-significant-digit formatting used by every CSV writer.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

enum class OutputFormat { Csv, Json, Svg };

OutputFormat parse_format(const std::string& s);

/// Writes text to path, or to stdout when path is empty or "-". Throws
/// layerstab::Error on I/O failure.
void write_output(const std::string& path, const std::string& text);

}  // namespace layerstab::cli
