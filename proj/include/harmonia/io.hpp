#pragma once

// Deterministic text output: CSV with a header row, '.' decimal point,
// 12 significant digits for reals, exact num/den text for rationals; JSON
// scale serialization with a lossless round trip; atomic
// write-temp-then-rename file output; stable parameter hashing for output
// file names.

#include "harmonia/scale.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace harmonia {

inline std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i)
      row += ',';
    row += fields[i];
  }
  row += '\n';
  return row;
}

// FNV-1a, 64-bit; stable across runs and platforms.
inline std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string param_hash(const std::string& canonical_params) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(canonical_params)));
  return buf;
}

inline void atomic_write(const std::filesystem::path& path,
                         const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error("atomic_write: cannot open " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

inline nlohmann::json to_json(const Pitch& p) {
  nlohmann::json j;
  if (p.is_rational()) {
    j["num"] = p.ratio().num().str();
    j["den"] = p.ratio().den().str();
  } else {
    j["irrational"] = p.symbol();
    j["value"] = p.value();
  }
  j["cents"] = p.cents();
  return j;
}

inline Pitch pitch_from_json(const nlohmann::json& j) {
  if (j.contains("irrational"))
    return Pitch::irrational(j.at("irrational").get<std::string>(),
                             j.at("value").get<double>(),
                             j.at("cents").get<double>());
  return Pitch::rational(Ratio(BigInt(j.at("num").get<std::string>()),
                               BigInt(j.at("den").get<std::string>())));
}

inline nlohmann::json to_json(const Scale& s) {
  nlohmann::json j;
  j["label"] = s.label;
  j["notes"] = nlohmann::json::array();
  for (const Pitch& p : s.notes)
    j["notes"].push_back(to_json(p));
  return j;
}

// Round trip: notes and label are reconstructed exactly; the construction
// trace is not serialized.
inline Scale scale_from_json(const nlohmann::json& j) {
  Scale s;
  s.label = j.at("label").get<std::string>();
  for (const nlohmann::json& n : j.at("notes"))
    s.notes.push_back(pitch_from_json(n));
  return s;
}

inline std::string scale_to_csv(const Scale& s) {
  std::string out = csv_row({"index", "ratio_text", "cents"});
  for (std::size_t i = 0; i < s.notes.size(); ++i)
    out += csv_row({std::to_string(i), s.notes[i].str(),
                    format_real(s.notes[i].cents())});
  return out;
}

}  // namespace harmonia
