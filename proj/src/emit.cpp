#include "wdist/emit.hpp"

#include <cstdio>

namespace wdist {

std::string fmt_num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

void dump(const nlohmann::ordered_json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            std::size_t i = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++i) {
                out += pad_in;
                out += nlohmann::json(it.key()).dump();
                out += ": ";
                dump(it.value(), out, indent, depth + 1);
                if (i + 1 < j.size()) out += ',';
                out += '\n';
            }
            out += pad + "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                out += pad_in;
                dump(j[i], out, indent, depth + 1);
                if (i + 1 < j.size()) out += ',';
                out += '\n';
            }
            out += pad + "]";
            return;
        }
        case nlohmann::json::value_t::number_float:
            out += fmt_num(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

} // namespace

std::string dump_json(const nlohmann::ordered_json& j, int indent) {
    std::string out;
    dump(j, out, indent, 0);
    out += '\n';
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += "\"\"";
        else q += c;
    }
    q += '"';
    return q;
}

} // namespace wdist
