#include "turaev/pd_code.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace turaev {

using nlohmann::json;

Diagram import_pd(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw MalformedPDCode(std::string("import_pd: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("crossings") || !doc["crossings"].is_array()) {
    throw MalformedPDCode("import_pd: expected an object with a \"crossings\" array");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "crossings" && key != "strands" && key != "free_loops") {
      throw MalformedPDCode("import_pd: unknown key \"" + key + "\"");
    }
  }
  std::vector<Crossing> crossings;
  for (const auto& entry : doc["crossings"]) {
    if (!entry.is_array() || entry.size() != 5) {
      throw MalformedPDCode("import_pd: crossing " + entry.dump() +
                            " is not [e1, e2, e3, e4, sign]");
    }
    Crossing x;
    for (std::size_t s = 0; s < 4; ++s) {
      if (!entry[s].is_number_integer()) {
        throw MalformedPDCode("import_pd: non-integer edge label in " + entry.dump());
      }
      x.edges[s] = entry[s].get<int>();
    }
    const json& sign = entry[4];
    if (sign == "+") {
      x.sign = 1;
    } else if (sign == "-") {
      x.sign = -1;
    } else {
      throw MalformedPDCode("import_pd: sign must be \"+\" or \"-\" in " + entry.dump());
    }
    crossings.push_back(x);
  }
  auto optional_count = [&](const char* key) -> std::optional<int> {
    if (!doc.contains(key)) return std::nullopt;
    if (!doc[key].is_number_integer() || doc[key].get<int>() < 0) {
      throw MalformedPDCode(std::string("import_pd: \"") + key +
                            "\" must be a non-negative integer");
    }
    return doc[key].get<int>();
  };
  const std::optional<int> strands = optional_count("strands");
  int free_loops = optional_count("free_loops").value_or(crossings.empty() ? 1 : 0);
  return Diagram(std::move(crossings), free_loops, strands);
}

Diagram import_pd_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedPDCode("import_pd: cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return import_pd(buffer.str());
}

std::string export_pd(const Diagram& d) {
  std::ostringstream out;
  out << "{\n";
  if (d.strands()) out << "  \"strands\": " << *d.strands() << ",\n";
  const bool implicit_loops = d.crossing_count() == 0 ? d.free_loops() == 1 : d.free_loops() == 0;
  out << "  \"crossings\": [";
  const auto& xs = d.crossings();
  for (std::size_t k = 0; k < xs.size(); ++k) {
    out << (k == 0 ? "\n" : ",\n") << "    [" << xs[k].edges[0] << ", " << xs[k].edges[1] << ", "
        << xs[k].edges[2] << ", " << xs[k].edges[3] << ", \"" << (xs[k].sign > 0 ? '+' : '-')
        << "\"]";
  }
  out << (xs.empty() ? "]" : "\n  ]");
  if (!implicit_loops) out << ",\n  \"free_loops\": " << d.free_loops();
  out << "\n}\n";
  return out.str();
}

}  // namespace turaev
