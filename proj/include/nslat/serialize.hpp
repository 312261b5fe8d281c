#pragma once

// JSON views of the library's value types.  Field order is fixed (ordered
// documents, no timestamps) so serialized output is byte-stable across runs.

#include <json.hpp>

#include "nslat/counting.hpp"
#include "nslat/verify.hpp"

namespace nslat {

using json = nlohmann::ordered_json;

inline json json_of(const QuadForm &f) { return json::array({f.a, f.b, f.c}); }

inline json json_of(const NSClass &L) {
  return json{{"m", L.m}, {"a", L.a}, {"b", L.b}, {"c", L.c}};
}

inline json json_of(const PsiImage &im) {
  return json{{"g", im.g}, {"form", json_of(im.form_class)}};
}

inline json json_of(const OrbitInfo &o) {
  json j{{"rep", json_of(o.rep)},
         {"q", json_of(q_of(o.rep))},
         {"min_intersection", o.min_intersection},
         {"tag", tag_name(o.tag)}};
  j["image"] = o.image ? json_of(*o.image) : json(nullptr);
  return j;
}

inline json json_of(const OrbitReport &r) {
  json orbits = json::array();
  for (const auto &o : r.orbits) orbits.push_back(json_of(o));
  return json{{"m", r.m},
              {"d", r.d},
              {"orbits", std::move(orbits)},
              {"total", r.total()},
              {"nonsmooth", r.nonsmooth_count()},
              {"smooth", r.smooth_count()},
              {"very_ample", r.very_ample_count()}};
}

inline json json_of(const CountReport &r) {
  json j{{"m", r.m},
         {"d", r.d},
         {"total", r.total},
         {"nonsmooth", r.nonsmooth},
         {"smooth", r.smooth}};
  j["very_ample"] = r.very_ample ? json(*r.very_ample) : json(nullptr);
  j["method"] = method_name(r.method);
  return j;
}

inline json json_of(const Verdict &v) {
  return json{{"answer", v.answer}, {"branch", v.branch}};
}

inline json json_of(const VerifyCell &c) {
  return json{{"m", c.m},       {"d", c.d},           {"check", c.check},
              {"formula", c.formula}, {"oracle", c.oracle}, {"pass", c.pass}};
}

inline json json_of(const VerifyReport &r) {
  json cells = json::array();
  for (const auto &c : r.cells) cells.push_back(json_of(c));
  return json{{"cells", std::move(cells)}, {"all_pass", r.all_pass}};
}

inline json json_of(const Picard2Counts &c) {
  return json{{"total", c.total}, {"smooth", c.smooth}, {"very_ample", c.very_ample}};
}

}  // namespace nslat
