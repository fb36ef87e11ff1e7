#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tormap/torusmap.hpp"

namespace tormap::json_io {

using nlohmann::json;
using torusmap::ToroidalMap;

inline json lattice_to_json(const Mat2& m) {
  return json::array({m.a, m.c, m.b, m.d});  // row-major a,c,b,d
}

inline Mat2 lattice_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument("lattice must be [a,c,b,d]");
  return {j[0].get<long long>(), j[1].get<long long>(), j[2].get<long long>(),
          j[3].get<long long>()};
}

inline json map_to_json(const ToroidalMap& m) {
  json j;
  j["tiling"] = tilings::tag(m.tiling);
  j["lattice"] = lattice_to_json(m.lattice);
  if (m.from_dual) j["dual"] = true;
  json verts = json::array();
  for (const auto& v : m.vertices)
    verts.push_back(json::array({v.cell, json::array({v.residue.x, v.residue.y})}));
  j["vertices"] = verts;
  json edges = json::array();
  for (const auto& e : m.edges) edges.push_back(json::array({e.v1, e.v2}));
  j["edges"] = edges;
  json faces = json::array();
  for (const auto& walk : m.faces) {
    json w = json::array();
    for (const auto& s : walk) w.push_back(s.edge);
    faces.push_back(w);
  }
  j["faces"] = faces;
  j["polyhedral"] = m.polyhedral;
  return j;
}

// Maps are always (duals of) quotients, so loading rebuilds the complex from
// its provenance and cross-checks the stored arrays, which keeps face-walk
// orientations canonical without trusting free-form input.
inline ToroidalMap map_from_json(const json& j) {
  auto type = tilings::type_from_tag(j.at("tiling").get<std::string>());
  if (!type)
    throw std::invalid_argument("unknown tiling tag: " +
                                j.at("tiling").get<std::string>());
  Mat2 k = lattice_from_json(j.at("lattice"));
  ToroidalMap m = torusmap::quotient(*type, k);
  if (j.value("dual", false)) m = torusmap::dual_map(m);

  if (j.contains("edges") && j["edges"].size() != m.edges.size())
    throw std::invalid_argument("edge list does not match the quotient");
  if (j.contains("faces") && j["faces"].size() != m.faces.size())
    throw std::invalid_argument("face list does not match the quotient");
  if (j.contains("polyhedral") &&
      j["polyhedral"].get<bool>() != m.polyhedral)
    throw std::invalid_argument("polyhedral flag does not match the quotient");
  return m;
}

inline std::string dump(const ToroidalMap& m) { return map_to_json(m).dump(2); }

inline ToroidalMap parse(const std::string& text) {
  return map_from_json(json::parse(text));
}

}  // namespace tormap::json_io
