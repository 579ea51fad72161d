#include "format.hpp"

#include <fstream>
#include <iostream>

#include "layerstab/error.hpp"

namespace layerstab::cli {

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    if (s == "svg") return OutputFormat::Svg;
    throw ValidationError("unknown output format '" + s + "' (csv, json, svg)");
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw Error("write to '" + path + "' failed");
}

}  // namespace layerstab::cli
