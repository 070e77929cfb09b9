#pragma once

// JSON planar-diagram files:
//   {"strands": 4, "crossings": [[a, b, c, d, "+"], ...], "free_loops": 1}
// "strands" and "free_loops" are optional. A file with no crossings and no
// "free_loops" key is the crossingless unknot.

#include <string>
#include <string_view>

#include "turaev/diagram.hpp"

namespace turaev {

/// Throws MalformedPDCode.
Diagram import_pd(std::string_view json_text);
Diagram import_pd_file(const std::string& path);

/// One crossing per line; import_pd(export_pd(d)) == d.
std::string export_pd(const Diagram& d);

}  // namespace turaev
