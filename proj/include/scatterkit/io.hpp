#pragma once

// JSON forms of partitions, covers, and verification reports.

#include <string>
#include <vector>

#include <json.hpp>

#include "scatterkit/graph.hpp"
#include "scatterkit/partition.hpp"

namespace scatterkit {

using json = nlohmann::ordered_json;

inline json to_json(const Partition& p) {
  json j;
  j["delta"] = p.delta();
  j["clusters"] = p.clusters();
  if (p.centers()) j["centers"] = *p.centers();
  else j["centers"] = nullptr;
  return j;
}

inline Partition partition_from_json(const json& j, std::size_t n) {
  try {
    double delta = j.at("delta").get<double>();
    auto clusters = j.at("clusters").get<std::vector<VertexSet>>();
    std::optional<std::vector<Vertex>> centers;
    if (j.contains("centers") && !j["centers"].is_null()) {
      centers = j["centers"].get<std::vector<Vertex>>();
    }
    return Partition(n, std::move(clusters), delta, std::move(centers));
  } catch (const json::exception& e) {
    throw ParseError(std::string("partition JSON: ") + e.what());
  }
}

inline json to_json(const SparseCover& c) {
  json j;
  j["delta"] = c.delta;
  j["sigma"] = c.sigma;
  j["clusters"] = c.clusters;
  std::size_t overlap = 0;
  std::map<Vertex, std::size_t> count;
  for (const auto& cl : c.clusters) {
    for (Vertex v : cl) overlap = std::max(overlap, ++count[v]);
  }
  j["overlap"] = overlap;
  return j;
}

inline SparseCover cover_from_json(const json& j) {
  try {
    SparseCover c;
    c.delta = j.at("delta").get<double>();
    c.sigma = j.value("sigma", 1.0);
    c.clusters = j.at("clusters").get<std::vector<VertexSet>>();
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("cover JSON: ") + e.what());
  }
}

inline const char* witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::path: return "path";
    case WitnessKind::ball: return "ball";
    case WitnessKind::cluster: return "cluster";
    case WitnessKind::vertex: return "vertex";
    default: return "none";
  }
}

inline json to_json(const VerificationReport& r) {
  json j;
  j["ok"] = r.ok;
  j["sigma"] = r.sigma;
  j["worst_tau"] = r.worst_tau;
  j["worst_diameter"] = std::isinf(r.worst_diameter) ? json("inf") : json(r.worst_diameter);
  json w;
  w["kind"] = witness_kind_name(r.witness.kind);
  w["vertices"] = r.witness.vertices;
  if (r.witness.center != kNoVertex) w["center"] = r.witness.center;
  if (r.witness.kind == WitnessKind::ball) w["radius"] = r.witness.radius;
  if (r.witness.cluster != static_cast<std::size_t>(-1)) w["cluster"] = r.witness.cluster;
  j["witness"] = w;
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

}  // namespace scatterkit
