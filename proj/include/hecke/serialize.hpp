#pragma once

/**
 * @file serialize.hpp
 * @brief JSON and DOT output for dessins and Belyi verification reports.
 *
 * Dessin JSON:
 *
 *   { "level": N,
 *     "edges": [{"index": i, "c": c, "d": d, "lattice": {"M": "p/q", "b": "r/s"}}, ...],
 *     "x": [...], "y": [...],
 *     "faces": [[...]], "white": [[...]], "black": [[...]],
 *     "genus": g }
 *
 * Rationals are always written "p/q". Output is deterministic: keys are
 * emitted in the order above and cycles in vertex_sets() order.
 */

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "belyi.hpp"
#include "dessin.hpp"
#include "projline.hpp"

namespace hecke {

using ordered_json = nlohmann::ordered_json;

enum class DessinFormat { json, dot };

inline DessinFormat parse_dessin_format(const std::string& s) {
  if (s == "json") return DessinFormat::json;
  if (s == "dot") return DessinFormat::dot;
  throw std::invalid_argument("unknown dessin format '" + s + "' (expected json or dot)");
}

inline ordered_json dessin_to_json(const Dessin& d) {
  ordered_json j;
  j["level"] = d.level;
  ordered_json edges = ordered_json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const ProjPoint& p = d.edges[i];
    const LatticeLabel lab = to_lattice_label(p);
    edges.push_back({{"index", i}, {"c", p.c()}, {"d", p.d()}, {"lattice", {{"M", lab.M.str()}, {"b", lab.b.str()}}}});
  }
  j["edges"] = std::move(edges);
  j["x"] = d.x;
  j["y"] = d.y;
  const VertexSet v = vertex_sets(d);
  j["faces"] = v.faces;
  j["white"] = v.white;
  j["black"] = v.black;
  j["genus"] = genus_euler(d);
  return j;
}

/// Inverse of dessin_to_json. Validates the permutations and that the edge
/// list is exactly enumerate(level).
inline Dessin dessin_from_json(const nlohmann::json& j) {
  Dessin d;
  try {
    d.level = j.at("level").get<std::int64_t>();
    for (const auto& e : j.at("edges"))
      d.edges.push_back(ProjPoint::normalize(e.at("c").get<std::int64_t>(), e.at("d").get<std::int64_t>(), d.level));
    d.x = j.at("x").get<Permutation>();
    d.y = j.at("y").get<Permutation>();
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("dessin_from_json: ") + ex.what());
  }
  if (d.edges != enumerate(d.level)) throw std::invalid_argument("dessin_from_json: edge list is not P^1(Z/NZ) in order");
  if (d.x.size() != d.size() || d.y.size() != d.size())
    throw std::invalid_argument("dessin_from_json: permutation length mismatch");
  for (const auto* perm : {&d.x, &d.y}) {
    std::vector<bool> hit(d.size(), false);
    for (std::size_t v : *perm) {
      if (v >= d.size() || hit[v]) throw std::invalid_argument("dessin_from_json: not a permutation");
      hit[v] = true;
    }
  }
  return d;
}

/// Graphviz: white vertices w{i} (unfilled), black vertices b{j} (filled),
/// one edge per point labelled "c:d".
inline std::string dessin_to_dot(const Dessin& d) {
  const VertexSet v = vertex_sets(d);
  std::vector<std::size_t> white_of(d.size()), black_of(d.size());
  for (std::size_t i = 0; i < v.white.size(); ++i)
    for (std::size_t e : v.white[i]) white_of[e] = i;
  for (std::size_t j = 0; j < v.black.size(); ++j)
    for (std::size_t e : v.black[j]) black_of[e] = j;

  std::ostringstream os;
  os << "graph B0_" << d.level << " {\n";
  os << "  node [shape=circle, label=\"\", width=0.15];\n";
  for (std::size_t i = 0; i < v.white.size(); ++i) os << "  w" << i << " [style=solid, fillcolor=white];\n";
  for (std::size_t j = 0; j < v.black.size(); ++j) os << "  b" << j << " [style=filled, fillcolor=black];\n";
  for (std::size_t e = 0; e < d.size(); ++e)
    os << "  w" << white_of[e] << " -- b" << black_of[e] << " [label=\"" << d.edges[e].c() << ":" << d.edges[e].d()
       << "\"];\n";
  os << "}\n";
  return os.str();
}

inline std::string export_dessin(const Dessin& d, DessinFormat format) {
  switch (format) {
  case DessinFormat::json:
    return dessin_to_json(d).dump(2) + "\n";
  case DessinFormat::dot:
    return dessin_to_dot(d);
  }
  throw std::invalid_argument("export_dessin: unknown format");
}

inline std::string export_dessin(const Dessin& d, const std::string& format) {
  return export_dessin(d, parse_dessin_format(format));
}

inline ordered_json report_to_json(const VerificationReport& r) {
  ordered_json j;
  j["N"] = r.level;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"got", c.got}});
  j["checks"] = std::move(checks);
  return j;
}

} // namespace hecke
