#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "trop/cycle.hpp"

namespace trop {

namespace detail {

inline nlohmann::json vectorsToJson(const std::vector<IntVec>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (const IntVec& v : vs) {
    nlohmann::json row = nlohmann::json::array();
    for (const Integer& x : v)
      row.push_back(toInt64(x));
    out.push_back(std::move(row));
  }
  return out;
}

[[noreturn]] inline void schemaError(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::Schema, path + ": " + what);
}

inline const nlohmann::json& field(const nlohmann::json& j, const std::string& name) {
  auto it = j.find(name);
  if (it == j.end())
    schemaError(name, "missing field");
  return *it;
}

inline std::int64_t intAt(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number_integer())
    schemaError(path, "expected an integer");
  return j.get<std::int64_t>();
}

inline const nlohmann::json& arrayAt(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array())
    schemaError(path, "expected an array");
  return j;
}

inline std::vector<IntVec> vectorsFromJson(const nlohmann::json& j, const std::string& name,
                                           std::size_t ambient) {
  std::vector<IntVec> out;
  const nlohmann::json& arr = arrayAt(j, name);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = name + "[" + std::to_string(i) + "]";
    const nlohmann::json& row = arrayAt(arr[i], path);
    if (row.size() != ambient)
      schemaError(path, "expected " + std::to_string(ambient) + " entries, got " +
                            std::to_string(row.size()));
    IntVec v;
    for (std::size_t k = 0; k < row.size(); ++k)
      v.emplace_back(static_cast<long>(intAt(row[k], path + "[" + std::to_string(k) + "]")));
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace detail

inline nlohmann::json cycleToJson(const WeightedFan& w) {
  const Fan& f = w.fan();
  nlohmann::json j;
  j["convention"] = conventionName(w.convention());
  j["ambient_dim"] = w.ambientDim();
  j["rays"] = detail::vectorsToJson(f.rays());
  j["lineality"] = detail::vectorsToJson(f.lineality());
  j["maximal_cones"] = f.maxCones();
  j["multiplicities"] = w.multiplicities();
  j["dim"] = w.dim();
  j["pure"] = w.isPure();
  return j;
}

inline nlohmann::json cycleToJson(const TropicalCycle& c) { return cycleToJson(c.weighted()); }

/// Compact, key-sorted serialization followed by a newline.
inline std::string cycleToString(const WeightedFan& w) { return cycleToJson(w).dump() + "\n"; }
inline std::string cycleToString(const TropicalCycle& c) { return cycleToString(c.weighted()); }

inline WeightedFan cycleFromJson(const nlohmann::json& j) {
  if (!j.is_object())
    detail::schemaError("$", "expected an object");
  const nlohmann::json& convJ = detail::field(j, "convention");
  if (!convJ.is_string() || (convJ != "min" && convJ != "max"))
    detail::schemaError("convention", "expected \"min\" or \"max\"");
  const Convention conv = convJ == "min" ? Convention::Min : Convention::Max;
  const std::int64_t ambient = detail::intAt(detail::field(j, "ambient_dim"), "ambient_dim");
  if (ambient < 0)
    detail::schemaError("ambient_dim", "must be nonnegative");
  const std::size_t n = static_cast<std::size_t>(ambient);
  std::vector<IntVec> rays = detail::vectorsFromJson(detail::field(j, "rays"), "rays", n);
  std::vector<IntVec> lin = detail::vectorsFromJson(detail::field(j, "lineality"), "lineality", n);
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (isZero(rays[i]))
      detail::schemaError("rays[" + std::to_string(i) + "]", "zero ray");

  const nlohmann::json& conesJ = detail::arrayAt(detail::field(j, "maximal_cones"), "maximal_cones");
  const nlohmann::json& multsJ =
      detail::arrayAt(detail::field(j, "multiplicities"), "multiplicities");
  if (multsJ.size() != conesJ.size())
    detail::schemaError("multiplicities", std::to_string(multsJ.size()) + " entries for " +
                                              std::to_string(conesJ.size()) + " maximal cones");
  std::vector<std::pair<Cone, std::int64_t>> cones;
  for (std::size_t i = 0; i < conesJ.size(); ++i) {
    const std::string path = "maximal_cones[" + std::to_string(i) + "]";
    const nlohmann::json& idx = detail::arrayAt(conesJ[i], path);
    std::vector<IntVec> gens;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const std::int64_t r = detail::intAt(idx[k], path + "[" + std::to_string(k) + "]");
      if (r < 0 || static_cast<std::size_t>(r) >= rays.size())
        detail::schemaError(path + "[" + std::to_string(k) + "]",
                            "ray index " + std::to_string(r) + " out of range");
      gens.push_back(rays[static_cast<std::size_t>(r)]);
    }
    const std::string mpath = "multiplicities[" + std::to_string(i) + "]";
    const std::int64_t m = detail::intAt(multsJ[i], mpath);
    if (m <= 0)
      detail::schemaError(mpath, "multiplicity must be positive");
    cones.emplace_back(Cone::fromGenerators(gens, lin, n), m);
  }
  WeightedFan w;
  try {
    w = WeightedFan::fromWeightedCones(cones, n, conv);
  } catch (const Error& e) {
    detail::schemaError("maximal_cones", e.message());
  }
  if (detail::intAt(detail::field(j, "dim"), "dim") != w.dim())
    detail::schemaError("dim", "does not match the cones (expected " + std::to_string(w.dim()) + ")");
  const nlohmann::json& pureJ = detail::field(j, "pure");
  if (!pureJ.is_boolean())
    detail::schemaError("pure", "expected a boolean");
  if (pureJ.get<bool>() != w.isPure())
    detail::schemaError("pure", "does not match the cones");
  return w;
}

inline WeightedFan cycleFromString(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Schema, std::string("$: invalid JSON: ") + e.what());
  }
  return cycleFromJson(j);
}

inline void writeCycle(const WeightedFan& w, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorKind::Parse, "cannot open " + path + " for writing");
  out << cycleToString(w);
}

inline void writeCycle(const TropicalCycle& c, const std::string& path) {
  writeCycle(c.weighted(), path);
}

inline WeightedFan readCycle(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return cycleFromString(ss.str());
}

} // namespace trop
