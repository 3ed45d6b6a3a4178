#pragma once

// Serialization helpers: flat JSON parameter files and deterministic CSV
// output (UTF-8, '.' decimal separator, LF line endings, no timestamps).

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rindler/params.hpp"

namespace rindler::io {

using json = nlohmann::ordered_json;

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline json params_to_json(const PhysicalParams& p) {
    return json{{"m", p.m},     {"alpha", p.alpha}, {"c", p.c},        {"hbar", p.hbar},
                {"p_y", p.p_y}, {"p_z", p.p_z},     {"theta", p.theta}};
}

inline PhysicalParams params_from_json(const json& j) {
    PhysicalParams p;
    auto get = [&](const char* key, double& field) {
        if (j.contains(key)) {
            if (!j.at(key).is_number())
                throw std::invalid_argument(std::string("params: '") + key + "' must be a number");
            field = j.at(key).get<double>();
        }
    };
    get("m", p.m);
    get("alpha", p.alpha);
    get("c", p.c);
    get("hbar", p.hbar);
    get("p_y", p.p_y);
    get("p_z", p.p_z);
    get("theta", p.theta);
    p.validate();
    return p;
}

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot open output file: " + path);
    }

    void header(const std::vector<std::string>& cols) { write_row(cols); }

    void row(const std::vector<std::string>& cells) { write_row(cells); }

private:
    void write_row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

    std::ofstream out_;
};

inline void write_json_file(const std::string& path, const json& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << doc.dump(2) << '\n';
}

}  // namespace rindler::io
