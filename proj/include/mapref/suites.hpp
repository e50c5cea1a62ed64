#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mapref/flagmap.hpp"
#include "mapref/verification.hpp"

namespace mapref {

/// Catalog maps, tori, their duals and Petrie duals, jet maps, the two
/// example maps, Cayley tubes, necklaces and their covers, each with at most
/// max_flags flags and meta "name" set.
std::vector<FlagMap> generate_corpus(std::size_t max_flags = 2000);

/// Duality, Cor 4.2, cr bound, relabelling invariance and JSON round trip
/// over a corpus.
VerificationRecord property_suite(const std::vector<FlagMap>& corpus);

/// cr <= 4, cr = 4 only for type 3, and type bounds over the closed
/// edge-transitive maps of a corpus.
VerificationRecord thm13_suite(const std::vector<FlagMap>& corpus);

/// thm11, cor12, thm42, cor43, thm13, thm51, ex51, ex52, props.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
VerificationRecord run_suite(std::string_view name);

}  // namespace mapref
