#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mapref/flagmap.hpp"

namespace mapref {

/// Malformed input that never reached the map axioms.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n_flags": N, "r": [[..],[..],[..]], "meta": {..}} with 0-based images.
nlohmann::ordered_json to_json(const FlagMap& m);
/// Compact JSON followed by a newline.
std::string write_json(const FlagMap& m);
/// Throws InputError on malformed JSON, MapAxiomError on a bad map.
FlagMap read_json(const std::string& text);

/// Three lines "r0: ..", "r1: ..", "r2: .." in cycle notation.
std::string to_text(const FlagMap& m);

FlagMap read_map_file(const std::string& path);
void write_map_file(const FlagMap& m, const std::string& path);

}  // namespace mapref
