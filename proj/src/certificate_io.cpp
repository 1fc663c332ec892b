#include "stanley/certificate_io.hpp"

#include <fstream>

#include "stanley/errors.hpp"

namespace stanley {

using nlohmann::json;

namespace {

json subset_to_json(SubsetMask mask) { return mask_elements(mask); }

SubsetMask subset_from_json(const json& j, int n) {
  if (!j.is_array()) throw InputError("subset must be an array of integers");
  std::vector<int> elems;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InputError("subset element must be an integer");
    const int v = e.get<int>();
    if (!elems.empty() && v <= elems.back()) throw InputError("subset must be strictly increasing");
    elems.push_back(v);
  }
  return mask_from_elements(elems, n);
}

}  // namespace

const char* to_string(PosetKind kind) {
  switch (kind) {
    case PosetKind::ideal: return "ideal";
    case PosetKind::quotient: return "quotient";
    case PosetKind::pair: return "pair";
  }
  return "unknown";
}

PosetKind poset_kind_from_string(const std::string& s) {
  if (s == "ideal") return PosetKind::ideal;
  if (s == "quotient") return PosetKind::quotient;
  if (s == "pair") return PosetKind::pair;
  throw InputError("unknown poset kind '" + s + "'");
}

json certificate_to_json(const CertificateDocument& doc) {
  const auto& cert = doc.certificate;
  json poset = {{"kind", to_string(doc.source.kind)}, {"ideal_file", doc.source.ideal_file}};
  if (doc.source.ideal2_file) poset["ideal2_file"] = *doc.source.ideal2_file;

  json intervals = json::array();
  for (const auto& iv : cert.intervals) {
    intervals.push_back({{"F", subset_to_json(iv.bottom)}, {"G", subset_to_json(iv.top)}});
  }
  json out;
  out["n"] = cert.n;
  out["poset"] = std::move(poset);
  out["claimed_sdepth"] = cert.claimed_sdepth ? json(*cert.claimed_sdepth) : json("infinite");
  out["intervals"] = std::move(intervals);
  return out;
}

CertificateDocument certificate_from_json(const json& j) {
  try {
    CertificateDocument doc;
    if (!j.is_object()) throw InputError("certificate must be a JSON object");
    const auto& n_field = j.at("n");
    if (!n_field.is_number_integer()) throw InputError("n must be an integer");
    const int n = n_field.get<int>();
    if (n < 0 || n > kMaxPosetVars) throw InputError("n out of range");
    doc.certificate.n = n;

    const auto& poset = j.at("poset");
    doc.source.kind = poset_kind_from_string(poset.at("kind").get<std::string>());
    doc.source.ideal_file = poset.at("ideal_file").get<std::string>();
    if (poset.contains("ideal2_file")) doc.source.ideal2_file = poset.at("ideal2_file").get<std::string>();
    if (doc.source.kind == PosetKind::pair && !doc.source.ideal2_file) {
      throw InputError("pair certificate needs ideal2_file");
    }

    const auto& claim = j.at("claimed_sdepth");
    if (claim.is_string() && claim.get<std::string>() == "infinite") {
      doc.certificate.claimed_sdepth = std::nullopt;
    } else if (claim.is_number_integer()) {
      doc.certificate.claimed_sdepth = claim.get<int>();
    } else {
      throw InputError("claimed_sdepth must be an integer or \"infinite\"");
    }

    const auto& intervals = j.at("intervals");
    if (!intervals.is_array()) throw InputError("intervals must be an array");
    for (const auto& iv : intervals) {
      doc.certificate.intervals.push_back(
          Interval{subset_from_json(iv.at("F"), n), subset_from_json(iv.at("G"), n)});
    }
    return doc;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

void write_certificate_file(const std::filesystem::path& path, const CertificateDocument& doc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << certificate_to_json(doc).dump(1) << '\n';
}

CertificateDocument read_certificate_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open certificate " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": malformed JSON: " + e.what());
  }
  return certificate_from_json(j);
}

}  // namespace stanley
