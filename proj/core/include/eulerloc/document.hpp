#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eulerloc/bundle.hpp"
#include "eulerloc/cochain.hpp"

namespace eulerloc {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Throws InvalidInput on malformed JSON or schema errors.
BundleData parse_bundle(std::string_view text);
/// Deterministic pretty-printed JSON.
std::string dump_bundle(const BundleData& data);

/// FNV-1a 64 of the canonical (compact, sorted-key) form, as 16 hex digits.
std::string bundle_digest(const BundleData& data);
/// Digest of the base part only (vertices, simplices, orientations).
std::string base_digest(const BundleData& data);

struct CochainDocument {
    std::string formula;
    std::string tool_version;
    std::string input_digest;
    std::string base_digest;
    int n = 0;
    /// Sorted by increasing simplex; simplices listed in their stored orientation.
    std::vector<std::pair<std::vector<Vertex>, Rational>> values;
};

CochainDocument make_cochain_document(const TriangulatedBundle& bundle, const EulerCochain& cochain);
EulerCochain cochain_from_document(const CochainDocument& doc);
std::string dump_cochain(const CochainDocument& doc);
CochainDocument parse_cochain(std::string_view text);

struct CycleDocument {
    std::string base_digest;
    BaseCycle cycle;
};

std::string dump_cycle(const CycleDocument& doc);
CycleDocument parse_cycle(std::string_view text);

}  // namespace eulerloc
