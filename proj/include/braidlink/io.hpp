#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "braidlink/braid.hpp"
#include "braidlink/invariants.hpp"
#include "braidlink/mobius.hpp"

namespace braidlink {

using Json = nlohmann::ordered_json;

inline constexpr int kDocumentVersion = 1;

/// Rounds to 12 significant digits so that reports print identically.
double round_significant(double value, int digits = 12);

/// {"version":1, "strands":[[s,...] x 4]}, s = [re, im] or "inf".
Json braid_to_json(const SphericalBraid& b);

/// Payload of a braid document. Exactly one of the variants is set.
struct BraidDocument {
  int version = kDocumentVersion;
  std::optional<std::string> loop;
  std::optional<std::string> artin;
  std::optional<SphericalBraid> strands;
  std::optional<std::string> name;
  std::optional<long long> seed;
};

/// Accepts braid documents ("strands", "loop" or "artin" payload) and
/// normalized path documents ("kind":"normalized_path"), which decode to
/// the braid (0, 1, inf, gamma).
BraidDocument parse_document(const Json& j);

/// Realizes the payload with the given samples per letter/generator.
SphericalBraid realize(const BraidDocument& doc, int samples);

Json report_to_json(const InvariantReport& r);
Json path_to_json(const NormalizedPath& p);

}  // namespace braidlink
