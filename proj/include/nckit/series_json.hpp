#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nckit/error.hpp"
#include "nckit/ncseries.hpp"
#include "nckit/rational.hpp"

namespace nckit {

enum class SeriesKind { moments, r_transform, eta };

inline const char* to_string(SeriesKind kind) {
  switch (kind) {
  case SeriesKind::moments: return "moments";
  case SeriesKind::r_transform: return "r_transform";
  case SeriesKind::eta: return "eta";
  }
  return "?";
}

inline SeriesKind parse_series_kind(std::string_view s) {
  if (s == "moments") return SeriesKind::moments;
  if (s == "r_transform") return SeriesKind::r_transform;
  if (s == "eta") return SeriesKind::eta;
  throw parse_error("unknown series kind '" + std::string(s) + "'");
}

/// The on-disk form of a series:
///   {"k": 2, "degree": 3, "kind": "moments", "coefficients": {"1,2": "3/4", ...}}
struct SeriesDocument {
  NCSeries series;
  SeriesKind kind = SeriesKind::moments;

  friend bool operator==(const SeriesDocument&, const SeriesDocument&) = default;
};

/// Canonical serialization: fixed top-level key order, words degree-then-lex,
/// rationals in lowest terms. Ends with a newline.
inline std::string to_json(const SeriesDocument& doc) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  for (const auto& [w, c] : doc.series.terms()) coeffs[word_key(w)] = to_string(c);
  nlohmann::ordered_json j;
  j["k"] = doc.series.k();
  j["degree"] = doc.series.degree();
  j["kind"] = to_string(doc.kind);
  j["coefficients"] = std::move(coeffs);
  return j.dump(2) + "\n";
}

namespace detail {

inline Word parse_word_key(const std::string& key) {
  Word w;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = key.find(',', pos);
    const std::string part = key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (part.empty() || part.size() > 6 || part[0] == '0' ||
        part.find_first_not_of("0123456789") != std::string::npos) {
      throw parse_error("malformed word key '" + key + "'");
    }
    w.push_back(std::stoi(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return w;
}

inline int positive_int(const nlohmann::json& j, const char* field) {
  if (!j.is_number_integer() || j.get<long long>() < 1 || j.get<long long>() > 1000000) {
    throw parse_error(std::string("field '") + field + "' must be a positive integer");
  }
  return j.get<int>();
}

} // namespace detail

inline SeriesDocument parse_series_document(std::string_view text) {
  // one key set per open object, to reject duplicate keys
  std::vector<std::set<std::string>> open;
  std::string duplicate;
  nlohmann::json::parser_callback_t guard = [&](int, nlohmann::json::parse_event_t event, nlohmann::json& parsed) {
    using E = nlohmann::json::parse_event_t;
    if (event == E::object_start) open.emplace_back();
    else if (event == E::object_end && !open.empty()) open.pop_back();
    else if (event == E::key && !open.empty()) {
      const auto key = parsed.get<std::string>();
      if (!open.back().insert(key).second && duplicate.empty()) duplicate = key;
    }
    return true;
  };
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end(), guard);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!duplicate.empty()) throw parse_error("duplicate key '" + duplicate + "'");
  if (!j.is_object()) throw parse_error("series document must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "k" && key != "degree" && key != "kind" && key != "coefficients") {
      throw parse_error("unknown key '" + key + "'");
    }
  }
  for (const char* required : {"k", "degree", "kind", "coefficients"}) {
    if (!j.contains(required)) throw parse_error(std::string("missing key '") + required + "'");
  }
  const int k = detail::positive_int(j["k"], "k");
  const int degree = detail::positive_int(j["degree"], "degree");
  if (!j["kind"].is_string()) throw parse_error("field 'kind' must be a string");
  const SeriesKind kind = parse_series_kind(j["kind"].get<std::string>());
  if (!j["coefficients"].is_object()) throw parse_error("field 'coefficients' must be an object");

  NCSeries series(k, degree);
  for (const auto& [key, value] : j["coefficients"].items()) {
    const Word w = detail::parse_word_key(key);
    if (!value.is_string()) throw parse_error("coefficient of '" + key + "' must be a string");
    try {
      series.set(w, parse_rational(value.get<std::string>()));
    } catch (const domain_error& e) {
      throw parse_error("word '" + key + "': " + e.what());
    }
  }
  return SeriesDocument{std::move(series), kind};
}

inline SeriesDocument read_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_series_document(buf.str());
}

inline void write_series_file(const std::string& path, const SeriesDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << to_json(doc);
}

} // namespace nckit
