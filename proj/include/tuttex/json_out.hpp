#ifndef TUTTEX_JSON_OUT_HPP
#define TUTTEX_JSON_OUT_HPP

#include "tuttex/extremes.hpp"
#include "tuttex/plane.hpp"
#include "tuttex/poly.hpp"
#include "tuttex/specialize.hpp"
#include "tuttex/structure.hpp"
#include "tuttex/verify.hpp"

#include <json.hpp>

namespace tuttex {

// Coefficients are emitted as decimal strings: they can exceed 64 bits.
nlohmann::json to_json(const BiPoly& p);
nlohmann::json to_json(const UniPoly& p);
nlohmann::json to_json(const CoeffReport& report);
nlohmann::json to_json(const StructureSummary& summary, const SpecialClasses& classes);
nlohmann::json to_json(const JonesReport& report);
nlohmann::json to_json(const DualReport& report);
nlohmann::json to_json(const VerifyReport& report);

} // namespace tuttex

#endif
