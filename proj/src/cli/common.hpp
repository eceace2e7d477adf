#pragma once

#include "moduli/cli/cli.hpp"
#include "moduli/numeric/bigfloat.hpp"
#include "moduli/numeric/pi_value.hpp"

#include <json.hpp>

#include <string>

namespace moduli::cli {

using numeric::Rational;

using Json = nlohmann::ordered_json;

// Fixed significant digits so output does not depend on the float backend.
std::string format_float(const numeric::BigFloat& x, int digits = 20);

Json pi_json(const numeric::PiValue& value);

IntRange parse_range(const std::string& text);
std::vector<int> parse_list(const std::string& text);

}  // namespace moduli::cli
