#include "mapref/io.hpp"

#include <fstream>
#include <sstream>

namespace mapref {

nlohmann::ordered_json to_json(const FlagMap& m) {
  nlohmann::ordered_json r = nlohmann::ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    const auto img = m.r(i).images();
    r.push_back(std::vector<Point>(img.begin(), img.end()));
  }
  nlohmann::ordered_json out;
  out["n_flags"] = m.n_flags();
  out["r"] = std::move(r);
  out["meta"] = m.meta().is_object() ? m.meta() : Meta::object();
  return out;
}

std::string write_json(const FlagMap& m) { return to_json(m).dump() + "\n"; }

FlagMap read_json(const std::string& text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("map file must hold a JSON object");
  if (!doc.contains("n_flags") || !doc["n_flags"].is_number_unsigned()) {
    throw InputError("missing or invalid \"n_flags\"");
  }
  const auto n = doc["n_flags"].get<std::size_t>();
  if (!doc.contains("r") || !doc["r"].is_array() || doc["r"].size() != 3) {
    throw InputError("\"r\" must be an array of three image arrays");
  }
  std::array<Perm, 3> r;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& row = doc["r"][i];
    if (!row.is_array()) throw InputError("r" + std::to_string(i) + " is not an array");
    if (row.size() != n) throw InputError("r" + std::to_string(i) + " has length " + std::to_string(row.size()) +
                                          ", expected " + std::to_string(n));
    std::vector<Point> img;
    img.reserve(n);
    std::vector<bool> hit(n, false);
    for (const auto& v : row) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() >= n) {
        throw InputError("r" + std::to_string(i) + " has an image outside 0.." + std::to_string(n ? n - 1 : 0));
      }
      const auto x = v.get<Point>();
      if (hit[x]) throw InputError("r" + std::to_string(i) + " is not a permutation");
      hit[x] = true;
      img.push_back(x);
    }
    r[i] = Perm(std::move(img));
  }
  Meta meta = Meta::object();
  if (doc.contains("meta")) {
    if (!doc["meta"].is_object()) throw InputError("\"meta\" must be an object");
    meta = doc["meta"];
  }
  return FlagMap::validate(std::move(r[0]), std::move(r[1]), std::move(r[2]), std::move(meta));
}

std::string to_text(const FlagMap& m) {
  std::string out;
  for (int i = 0; i < 3; ++i) out += "r" + std::to_string(i) + ": " + m.r(i).to_cycle_string() + "\n";
  return out;
}

FlagMap read_map_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_json(buf.str());
}

void write_map_file(const FlagMap& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << write_json(m);
  if (!out) throw InputError("write failed: " + path);
}

}  // namespace mapref
