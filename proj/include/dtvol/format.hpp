#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dtvol/errors.hpp"
#include "dtvol/volume.hpp"

namespace dtvol {

inline constexpr const char* kVersion = "1.0.0";

/// Decimal with 15 significant digits ("%.15g"); negative zero prints as 0.
std::string format_number(double v);

/// Output JSON keeps insertion order (k, n, alpha, ...).
using ojson = nlohmann::ordered_json;

/// JSON text with every floating value printed by format_number. indent < 0
/// gives a single line; otherwise objects are broken over lines while arrays
/// of scalars and of pairs stay inline.
std::string dump_json(const ojson& j, int indent = -1);

/// Complex number as a JSON [re, im] pair.
ojson complex_json(cplx z);

/// Parses "re,im" (or a bare real "re"). Throws InvalidArgument.
cplx parse_complex(std::string_view text);

ojson to_json(const SeedCandidate& c);
ojson to_json(const VolumeResult& r);

/// CSV text with header "alpha,volume,quad_error".
std::string curve_csv(const std::vector<VolumeResult>& curve);

/// CSV text with header "omega,re_z,im_z,re_L,im_L,logabsL", one row per
/// tracked point.
std::string branch_csv(const Branch& br);

}  // namespace dtvol
