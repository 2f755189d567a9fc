#pragma once

// JSON forms:
//   partition: {"n": int, "boxes": [[int, ...], ...]}
//   weights:   {"n": int, "h": ["p/q", ...]}
//   ledger:    {"n": int, "entries": [{"l": [int, ...], "order": int}, ...]}  sorted by l

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chargelat/charge.hpp"
#include "chargelat/errors.hpp"
#include "chargelat/partition.hpp"
#include "chargelat/weights.hpp"

namespace chargelat {

using json = nlohmann::json;

namespace detail {

inline std::size_t read_dim(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw InputError("expected an object with integer field \"n\"");
  }
  const auto n = j["n"].get<long long>();
  if (n < 1 || n > static_cast<long long>(kMaxDim)) throw InputError("\"n\" must be in [1, 16]");
  return static_cast<std::size_t>(n);
}

}  // namespace detail

/// Parses the box list; melting-rule violations are reported, not thrown.
inline ValidationResult partition_from_json(const json& j) {
  const std::size_t n = detail::read_dim(j);
  if (!j.contains("boxes") || !j["boxes"].is_array()) throw InputError("expected array field \"boxes\"");
  std::vector<Box> boxes;
  for (const json& entry : j["boxes"]) {
    if (!entry.is_array()) throw InputError("each box must be an array of integers");
    std::vector<int> coords;
    for (const json& v : entry) {
      if (!v.is_number_integer()) throw InputError("box coordinates must be integers");
      const auto c = v.get<long long>();
      if (c < 0 || c > kMaxCoord) throw InputError("box coordinate out of range");
      coords.push_back(static_cast<int>(c));
    }
    if (coords.size() != n) throw InputError("box length does not match \"n\"");
    boxes.emplace_back(std::span<const int>(coords));
  }
  return validate_partition(n, boxes);
}

inline json to_json(const Box& b) {
  json arr = json::array();
  for (std::size_t i = 0; i < b.dim(); ++i) arr.push_back(b[i]);
  return arr;
}

inline json to_json(const Partition& p) {
  json boxes = json::array();
  for (const Box& b : p) boxes.push_back(to_json(b));
  return {{"n", p.dim()}, {"boxes", boxes}};
}

inline json to_json(const ProjectedPoint& q) {
  json arr = json::array();
  for (std::size_t i = 0; i < q.dim(); ++i) arr.push_back(q[i]);
  return arr;
}

inline json to_json(const PoleLedger& ledger) {
  json entries = json::array();
  for (const auto& [q, ord] : ledger.entries()) entries.push_back({{"l", to_json(q)}, {"order", ord}});
  return {{"n", ledger.dim()}, {"entries", entries}};
}

inline PoleLedger ledger_from_json(const json& j) {
  const std::size_t n = detail::read_dim(j);
  if (!j.contains("entries") || !j["entries"].is_array()) throw InputError("expected array field \"entries\"");
  PoleLedger ledger(n);
  for (const json& e : j["entries"]) {
    const auto l = e.at("l").get<std::vector<long long>>();
    if (l.size() != n) throw InputError("ledger entry length does not match \"n\"");
    ledger.add(ProjectedPoint::from_lattice(std::span<const long long>(l)), e.at("order").get<int>());
  }
  return ledger;
}

inline json to_json(const WeightAssignment& w) {
  json h = json::array();
  for (const Rational& r : w.values()) h.push_back(to_string(r));
  return {{"n", w.dim()}, {"h", h}};
}

inline WeightAssignment weights_from_json(const json& j) {
  const std::size_t n = detail::read_dim(j);
  if (!j.contains("h") || !j["h"].is_array() || j["h"].size() != n) throw InputError("expected \"h\" with n entries");
  std::vector<Rational> h;
  for (const json& v : j["h"]) {
    if (!v.is_string()) throw InputError("weights must be strings \"p/q\"");
    h.push_back(parse_rational(v.get<std::string>()));
  }
  return WeightAssignment::from_values(std::move(h));
}

inline json to_json(const PropertyReport& r) {
  json mismatches = json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"l", to_json(m.point)}, {"order", m.order}, {"addable_or_removable", m.in_addable_or_removable}});
  }
  return {{"simple_poles", r.simple_poles}, {"bijection", r.bijection}, {"mismatches", mismatches}};
}

/// Serialized form used for files: two-space indent, trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace chargelat
