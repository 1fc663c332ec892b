#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "stanley/poset.hpp"

namespace stanley {

enum class PosetKind { ideal, quotient, pair };

const char* to_string(PosetKind kind);
PosetKind poset_kind_from_string(const std::string& s);

/// Which poset a certificate speaks about: P_I, P_{S/I} or P_{J/I}.
/// For pairs, ideal_file is J and ideal2_file is I.
struct PosetSource {
  PosetKind kind = PosetKind::quotient;
  std::string ideal_file;
  std::optional<std::string> ideal2_file;
};

struct CertificateDocument {
  PosetSource source;
  PartitionCertificate certificate;
};

// {"n": 7, "poset": {"kind": "quotient", "ideal_file": "J7.ideal"},
//  "claimed_sdepth": 2, "intervals": [{"F": [], "G": [1, 3]}, ...]}
//
// Subsets are strictly increasing 1-based lists. claimed_sdepth is the string
// "infinite" for the empty partition of the empty poset.

nlohmann::json certificate_to_json(const CertificateDocument& doc);

/// Throws InputError on any schema violation.
CertificateDocument certificate_from_json(const nlohmann::json& j);

void write_certificate_file(const std::filesystem::path& path, const CertificateDocument& doc);
CertificateDocument read_certificate_file(const std::filesystem::path& path);

}  // namespace stanley
