#pragma once

#include "mixchrom/polynomial.hpp"

#include <json.hpp>

namespace mixchrom::detail {

nlohmann::ordered_json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::ordered_json& j);

} // namespace mixchrom::detail
