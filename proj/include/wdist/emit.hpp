#pragma once

#include <json.hpp>
#include <string>

namespace wdist {

// 12 significant digits, C locale.
std::string fmt_num(double v);

// JSON text with every float rendered by fmt_num, so emitted files are
// reproducible byte for byte.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

// One CSV field, quoted when needed.
std::string csv_field(const std::string& s);

} // namespace wdist
