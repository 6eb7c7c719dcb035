#pragma once

// JSON report documents for search runs.

#include <boost/archive/iterators/base64_from_binary.hpp>
#include <boost/archive/iterators/transform_width.hpp>

#include <cstdint>
#include <cstdio>
#include <string>

#include "json.hpp"
#include "nearplat/counting.hpp"
#include "nearplat/planar_code.hpp"
#include "nearplat/search.hpp"

namespace nearplat {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

inline std::string base64_encode(const Bytes& bytes) {
  using namespace boost::archive::iterators;
  using It = base64_from_binary<transform_width<Bytes::const_iterator, 6, 8>>;
  std::string out(It(bytes.begin()), It(bytes.end()));
  out.append((3 - bytes.size() % 3) % 3, '=');
  return out;
}

inline std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline Json degrees_json(const std::vector<int>& d1) {
  if (d1.empty()) return "any";
  return Json(d1);
}

inline Json task_json(const SearchTask& t) {
  Json j;
  j["k"] = t.k;
  j["policy"] = to_string(t.policy);
  if (t.policy == SearchPolicy::kFaceConstrained) {
    j["d2"] = t.d2;
    j["f1"] = t.f1;
    j["d1"] = degrees_json(t.d1);
  }
  j["v_min"] = t.v_min;
  j["v_max"] = t.v_max;
  return j;
}

inline Json witness_json(const Witness& w) {
  Json j;
  j["canonical_code"] = w.code.hex();
  j["planar_code"] = base64_encode(write_planar_code({w.map}));
  j["signature"] = format_signature(w.signature);
  return j;
}

inline Json cell_json(const CellReport& c, bool timing) {
  Json j;
  j["k"] = c.k;
  if (c.f1 > 0 || c.d2 > 0) {
    j["d2"] = c.d2;
    j["f1"] = c.f1;
    j["d1"] = degrees_json(c.d1);
  }
  if (c.v > 0) {
    j["v"] = c.v;
  } else {
    j["v"] = c.v_text;
  }
  j["status"] = to_string(c.status);
  j["class_count"] = c.class_count();
  if (c.status == CellStatus::kPruned) {
    j["pruned_by"] = {{"identity", c.pruned_identity}, {"detail", c.pruned_detail}};
  }
  Json ws = Json::array();
  for (const auto& w : c.witnesses) ws.push_back(witness_json(w));
  j["witnesses"] = ws;
  if (timing) j["timing"] = {{"seconds", c.seconds}, {"nodes", c.nodes}};
  return j;
}

/// Everything outside the "timing" objects is deterministic.
inline Json report_json(const SearchReport& r, bool timing = true) {
  Json config;
  config["kind"] = r.kind;
  Json tasks = Json::array();
  for (const auto& t : r.tasks) tasks.push_back(task_json(t));
  config["tasks"] = tasks;
  config["options"] = {{"budget_nodes", r.options.budget_nodes},
                       {"budget_secs", r.options.budget_secs},
                       {"lemma3_pruning", r.options.lemma3}};

  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = "nearplat";
  j["tool_version"] = kToolVersion;
  j["config_hash"] = fnv1a_hex(config.dump());
  for (auto& [key, value] : config.items()) j[key] = value;
  Json cells = Json::array();
  for (const auto& c : r.cells) cells.push_back(cell_json(c, timing));
  j["cells"] = cells;
  j["complete"] = r.complete();
  j["class_count"] = r.class_count();
  if (timing) j["timing"] = {{"seconds", r.seconds}};
  return j;
}

inline Json conjecture_json(const ConjectureReport& r, bool timing = true) {
  Json j = report_json(r.search, timing);
  Json unequal = Json::array();
  for (const auto& w : r.unequal) unequal.push_back(witness_json(w));
  Json unmatched = Json::array();
  for (const auto& w : r.unmatched) unmatched.push_back(witness_json(w));
  Json members = Json::array();
  for (const auto& m : r.members) {
    members.push_back(
        {{"family", m.family}, {"d", m.d}, {"v", m.v}, {"platonic", m.coincident}, {"found", m.found}});
  }
  j["conjecture"] = {{"unequal_degree_witnesses", unequal},
                     {"non_family_witnesses", unmatched},
                     {"family_members", members}};
  return j;
}

}  // namespace nearplat
