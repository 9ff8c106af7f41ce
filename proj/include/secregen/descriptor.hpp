#pragma once

#include <string>

#include "secregen/code.hpp"
#include "secregen/verify.hpp"

namespace secregen {

inline constexpr int kDescriptorSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "0.1.0";

/// Serialized form of a code: params, field, generator labels, column
/// layout, full repair plans, provenance. Byte-stable for fixed inputs.
std::string code_to_json(const LinearDssCode& code);

/// Parses a descriptor and re-runs the full verification gate, refusing
/// descriptors that fail their declared properties.
LinearDssCode code_from_json(const std::string& text);

/// Parse without the gate (used to report verdicts on failing descriptors).
LinearDssCode code_from_json_unverified(const std::string& text);

/// Verification report (per-check verdicts, witnesses, per-subset leakage)
/// as a JSON object string.
std::string verification_report_json(const LinearDssCode& code, Attack attack, std::uint32_t l,
                                     bool exhaustive_cross_check, std::uint64_t state_budget);

} // namespace secregen
