#pragma once

// JSON encodings shared by the CLI and tests. Rationals are always strings
// ("p/q" or "p").
//
//   rational      "p/q"
//   point         ["x", "y"]
//   polygon       [point, ...]                 counterclockwise
//   profile       [[k, "a"], ...]
//   chop record   {"vertex": point, "size": "eps"}

#include <cstdint>
#include <limits>

#include "json.hpp"  // nlohmann/json, vendored

#include "toric/census.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const Integer& n) {
  if (n <= std::numeric_limits<std::int64_t>::max() && n >= std::numeric_limits<std::int64_t>::min()) {
    return n.convert_to<std::int64_t>();
  }
  return n.str();
}

inline Json to_json(const PlanePoint& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

inline Json to_json(const DelzantPolygon& p) {
  Json out = Json::array();
  for (const PlanePoint& v : p.vertices()) out.push_back(to_json(v));
  return out;
}

inline Json to_json(const std::vector<ProfileEntry>& entries) {
  Json out = Json::array();
  for (const ProfileEntry& e : entries) out.push_back(Json::array({e.k, to_string(e.size)}));
  return out;
}

inline Json to_json(const EdgeProfile& p) { return to_json(p.entries); }
inline Json to_json(const CanonicalProfile& p) { return to_json(p.entries); }

inline Json to_json(const ChopRecord& c) {
  Json out = Json::object();
  out["vertex"] = to_json(c.vertex);
  out["size"] = to_string(c.size);
  return out;
}

inline Json to_json(const Provenance& prov) {
  Json out = Json::object();
  out["ell"] = prov.ell;
  Json chops = Json::array();
  for (const ChopRecord& c : prov.chops) chops.push_back(to_json(c));
  out["chops"] = std::move(chops);
  return out;
}

inline Json to_json(const DerivedParams& p) {
  Json out = Json::object();
  out["delta"] = to_string(p.delta);
  out["a"] = to_string(p.a);
  out["b"] = to_string(p.b);
  return out;
}

inline Json to_json(const NonexistenceVerdict& v) {
  Json out = Json::object();
  out["verdict"] = to_string(v.verdict);
  out["reason"] = v.reason;
  return out;
}

inline Json to_json(const BoundReport& r) {
  Json out = Json::object();
  out["value"] = to_json(r.bound);
  out["conditions"] = Json::array({r.conditions[0], r.conditions[1], r.conditions[2], r.conditions[3]});
  out["attained"] = r.attained;
  return out;
}

inline Json to_json(const ActionClass& c) {
  Json out = Json::object();
  out["profile"] = to_json(c.canonical);
  out["vertices"] = to_json(c.representative);
  out["provenance"] = to_json(c.provenance);
  return out;
}

inline Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

inline PlanePoint point_from_json(const Json& j) {
  return {rational_from_json(j.at(0)), rational_from_json(j.at(1))};
}

inline DelzantPolygon polygon_from_json(const Json& j) {
  std::vector<PlanePoint> points;
  for (const Json& v : j) points.push_back(point_from_json(v));
  return polygon_from_vertices(std::move(points));
}

inline EdgeProfile profile_from_json(const Json& j) {
  EdgeProfile p;
  for (const Json& e : j) p.entries.push_back({e.at(0).get<std::int64_t>(), rational_from_json(e.at(1))});
  return p;
}

}  // namespace toric
