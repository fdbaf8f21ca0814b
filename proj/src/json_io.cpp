#include "cubepaths/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace cubepaths {

Json vertex_to_json(std::uint32_t mask, int dim) {
  Json elements = Json::array();
  for (int i = 1; i <= dim; ++i) {
    if (mask & (std::uint32_t{1} << (i - 1))) elements.push_back(i);
  }
  return elements;
}

std::uint32_t vertex_from_json(const Json& j, int dim) {
  if (j.is_string()) {
    const std::string& text = j.get_ref<const std::string&>();
    std::uint32_t mask = static_cast<std::uint32_t>(std::stoul(text, nullptr, 16));
    if (mask >= (std::uint64_t{1} << dim)) {
      throw std::invalid_argument("vertex mask " + text + " exceeds dimension " +
                                  std::to_string(dim));
    }
    return mask;
  }
  if (!j.is_array()) throw std::invalid_argument("vertex must be an element list or hex string");
  std::uint32_t mask = 0;
  for (const auto& el : j) {
    int i = el.get<int>();
    if (i < 1 || i > dim) {
      throw std::invalid_argument("element " + std::to_string(i) + " outside [1, " +
                                  std::to_string(dim) + "]");
    }
    mask |= std::uint32_t{1} << (i - 1);
  }
  return mask;
}

Json cube_set_to_json(const CubeSet& s) {
  Json j;
  j["n"] = s.dim();
  j["members"] = member_list_to_json(s);
  return j;
}

CubeSet cube_set_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  return member_list_from_json(j.at("members"), n);
}

Json member_list_to_json(const CubeSet& s) {
  Json members = Json::array();
  s.for_each([&](std::uint32_t m) { members.push_back(vertex_to_json(m, s.dim())); });
  return members;
}

CubeSet member_list_from_json(const Json& j, int dim) {
  CubeSet s(dim);
  for (const auto& el : j) s.insert(vertex_from_json(el, dim));
  return s;
}

Json edge_set_to_json(const EdgeSet& e) {
  Json edges = Json::array();
  for (const Edge& edge : e.edges) {
    Json one;
    one["u"] = vertex_to_json(edge.u, e.dim);
    one["v"] = vertex_to_json(edge.v, e.dim);
    edges.push_back(std::move(one));
  }
  return edges;
}

Json path_family_to_json(const PathFamily& family) {
  Json paths = Json::array();
  for (const auto& path : family.paths) {
    Json one = Json::array();
    for (std::uint32_t v : path) one.push_back(vertex_to_json(v, family.dim));
    paths.push_back(std::move(one));
  }
  return paths;
}

Json trace_to_json(const std::vector<CompressionStep>& trace) {
  Json steps = Json::array();
  for (const CompressionStep& step : trace) {
    Json one;
    one["i"] = step.i;
    one["choice"] = std::string(1, step.choice);
    one["before"] = step.boundary_before;
    one["after"] = step.boundary_after;
    steps.push_back(std::move(one));
  }
  return steps;
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

}  // namespace cubepaths
