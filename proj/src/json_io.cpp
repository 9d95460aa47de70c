#include "morseflow/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace morseflow {

using nlohmann::json;

namespace {

double checked_number(const json& j) {
    if (!j.is_number()) throw ParseError("matrix entry component is not a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError("matrix entry is not finite");
    return v;
}

Scalar parse_entry(const json& j, Field f) {
    switch (f) {
        case Field::R:
            return Scalar(checked_number(j));
        case Field::C: {
            if (!j.is_array() || j.size() != 2)
                throw ParseError("complex entry must be [re, im]");
            return Scalar(checked_number(j[0]), checked_number(j[1]));
        }
        case Field::H: {
            if (!j.is_array() || j.size() != 4)
                throw ParseError("quaternion entry must be [a, b, c, d]");
            return Scalar(checked_number(j[0]), checked_number(j[1]),
                          checked_number(j[2]), checked_number(j[3]));
        }
    }
    throw ParseError("bad field");
}

json entry_to_json(const Scalar& s, Field f) {
    switch (f) {
        case Field::R: return s.w;
        case Field::C: return json::array({s.w, s.x});
        case Field::H: return json::array({s.w, s.x, s.y, s.z});
    }
    return nullptr;
}

}  // namespace

Mat mat_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("matrix JSON must be an object");
    for (const char* key : {"field", "rows", "cols", "data"})
        if (!j.contains(key)) throw ParseError(std::string("matrix JSON missing '") + key + "'");
    const Field f = parse_field(j["field"].get<std::string>());
    const int rows = j["rows"].get<int>();
    const int cols = j["cols"].get<int>();
    if (rows <= 0 || cols <= 0) throw ParseError("matrix dimensions must be positive");
    const json& data = j["data"];
    if (!data.is_array() || static_cast<int>(data.size()) != rows)
        throw ParseError("matrix data has the wrong number of rows");
    Mat m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = data[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError("matrix data row has the wrong length");
        for (int c = 0; c < cols; ++c) m.at(i, c) = parse_entry(row[c], f);
    }
    return m;
}

json mat_to_json(const Mat& m) {
    json data = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(entry_to_json(m.at(i, c), m.field()));
        data.push_back(std::move(row));
    }
    return json{{"field", field_name(m.field())},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"data", std::move(data)}};
}

Mat parse_matrix_arg(const std::string& arg, Field diag_field) {
    if (arg.rfind("diag:", 0) == 0) {
        std::vector<double> d;
        std::stringstream ss(arg.substr(5));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                size_t used = 0;
                const double v = std::stod(item, &used);
                if (used != item.size() || !std::isfinite(v))
                    throw ParseError("bad diagonal entry '" + item + "'");
                d.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("bad diagonal entry '" + item + "'");
            }
        }
        if (d.empty()) throw ParseError("empty diagonal shorthand");
        return Mat::diag(diag_field, d);
    }
    std::string text = arg;
    if (!arg.empty() && arg[0] != '{') {
        std::ifstream in(arg);
        if (!in) throw ParseError("cannot open matrix file '" + arg + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("matrix JSON parse error: ") + e.what());
    }
    return mat_from_json(j);
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace morseflow
