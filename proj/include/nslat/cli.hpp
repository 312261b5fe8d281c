#pragma once

// Command-line front end.  Each subcommand prints either a human-readable
// block or, under --json, a single fixed-field-order JSON document; identical
// invocations produce byte-identical output.  Exit codes: 0 success, 1 usage,
// 2 verification failure, 3 overflow or guard.

#include <CLI11.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "nslat/serialize.hpp"

namespace nslat::cli {

inline const char *version_line() { return "nslat 1.0.0"; }

namespace detail {

inline std::string join(const std::vector<i64> &xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

inline json shell(const char *command, json parameters, const char *method) {
  return json{{"command", command}, {"parameters", std::move(parameters)}, {"method", method}};
}

}  // namespace detail

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  bool as_json = false, quiet = false, force_oracle = false;
  i64 D = 0, m = 1, d = 1, m_max = 1, d_max = 1, bound = -1;
  std::string property, which;

  CLI::App app{"polarization counts and embeddings for products of isogenous elliptic curves"};
  app.require_subcommand(1);
  app.add_flag("--json", as_json, "emit a JSON document instead of text");
  app.add_flag("--quiet", quiet, "suppress the version header line");

  CLI::App *cg = app.add_subcommand("classgroup", "reduced primitive classes of a discriminant");
  cg->add_option("D", D, "negative discriminant, 0 or 1 mod 4")->required();

  CLI::App *count = app.add_subcommand("count", "polarization counts by smoothness tier");
  count->add_option("--m", m, "isogeny degree")->required();
  count->add_option("--d", d, "polarization degree")->required();
  count->add_flag("--oracle", force_oracle, "enumerate orbits even when a closed form applies");

  CLI::App *exists = app.add_subcommand("exists", "existence of a smooth or very ample class");
  exists->add_option("--m", m, "isogeny degree")->required();
  exists->add_option("--d", d, "polarization degree")->required();
  exists->add_option("--property", property, "smooth | very-ample")
      ->required()
      ->check(CLI::IsMember({"smooth", "very-ample"}));

  CLI::App *classify = app.add_subcommand("classify", "orbit-by-orbit ampleness report");
  classify->add_option("--m", m, "isogeny degree")->required();
  classify->add_option("--d", d, "polarization degree")->required();

  CLI::App *lists = app.add_subcommand("lists", "reproduce the published exceptional lists");
  lists->add_option("--which", which, "star | idoneal | p4")
      ->required()
      ->check(CLI::IsMember({"star", "idoneal", "p4"}));
  lists->add_option("--bound", bound, "search bound (defaults: star 2000, idoneal 1848, p4 400)");

  CLI::App *verify_cmd = app.add_subcommand("verify", "run every formula-vs-enumeration check");
  verify_cmd->add_option("--m-max", m_max, "largest isogeny degree")->required();
  verify_cmd->add_option("--d-max", d_max, "largest polarization degree")->required();

  CLI::App *pr2 = app.add_subcommand("pr2", "counts for a product of non-isogenous curves");
  pr2->add_option("--d", d, "polarization degree")->required();

  for (CLI::App *sub : {cg, count, exists, classify, lists, verify_cmd, pr2}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    if (code == 0) return 0;
    std::vector<CLI::App *> chosen = app.get_subcommands();
    err << (chosen.empty() ? app.help() : chosen.front()->help());
    return 1;
  }

  auto emit = [&](const json &doc) { out << doc.dump(2) << '\n'; };
  if (!as_json && !quiet) out << version_line() << '\n';

  try {
    if (*cg) {
      std::vector<QuadForm> classes = reduced_forms(D);
      if (as_json) {
        json j = detail::shell("classgroup", json{{"D", D}}, "formula");
        j["h"] = class_number(D);
        j["h_plus"] = gl2_class_number(D);
        j["h2"] = two_torsion_count(D);
        json cl = json::array();
        for (const QuadForm &f : classes) cl.push_back(json_of(f));
        j["classes"] = std::move(cl);
        j["notes"] = json::array();
        emit(j);
      } else {
        out << "discriminant: " << D << '\n'
            << "h: " << class_number(D) << '\n'
            << "h+: " << gl2_class_number(D) << '\n'
            << "h2: " << two_torsion_count(D) << '\n'
            << "classes:\n";
        for (const QuadForm &f : classes)
          out << "  [" << f.a << ", " << f.b << ", " << f.c << "]\n";
      }
      return 0;
    }

    if (*count) {
      CountReport r = count_report(m, d, force_oracle);
      if (as_json) {
        json j = detail::shell("count", json{{"m", m}, {"d", d}, {"oracle", force_oracle}},
                               method_name(r.method));
        j["total"] = r.total;
        j["nonsmooth"] = r.nonsmooth;
        j["smooth"] = r.smooth;
        j["very_ample"] = r.very_ample ? json(*r.very_ample) : json(nullptr);
        j["notes"] = json::array();
        emit(j);
      } else {
        out << "m: " << m << "  d: " << d << "  method: " << method_name(r.method) << '\n'
            << "total: " << r.total << '\n'
            << "nonsmooth: " << r.nonsmooth << '\n'
            << "smooth: " << r.smooth << '\n'
            << "very_ample: "
            << (r.very_ample ? std::to_string(*r.very_ample) : std::string("n/a")) << '\n';
      }
      return 0;
    }

    if (*exists) {
      Verdict v = property == "smooth" ? exists_smooth(m, d) : exists_very_ample(m, d);
      if (as_json) {
        json j = detail::shell("exists", json{{"m", m}, {"d", d}, {"property", property}},
                               "formula");
        j["answer"] = v.answer;
        j["branch"] = v.branch;
        j["notes"] = json::array();
        emit(j);
      } else {
        out << "property: " << property << "  m: " << m << "  d: " << d << '\n'
            << "answer: " << (v.answer ? "yes" : "no") << '\n'
            << "branch: " << v.branch << '\n';
      }
      return 0;
    }

    if (*classify) {
      OrbitReport r = enumerate_orbits(m, d);
      if (as_json) {
        json j = detail::shell("classify", json{{"m", m}, {"d", d}}, "oracle");
        json orbits = json::array();
        for (const OrbitInfo &o : r.orbits) orbits.push_back(json_of(o));
        j["orbits"] = std::move(orbits);
        j["total"] = r.total();
        j["nonsmooth"] = r.nonsmooth_count();
        j["smooth"] = r.smooth_count();
        j["very_ample"] = r.very_ample_count();
        j["notes"] = json::array();
        emit(j);
      } else {
        out << "m: " << m << "  d: " << d << "  orbits: " << r.total() << '\n';
        for (const OrbitInfo &o : r.orbits) {
          QuadForm q = q_of(o.rep);
          out << "  (" << o.rep.m << ',' << o.rep.a << ',' << o.rep.b << ',' << o.rep.c
              << ")  q=[" << q.a << ',' << q.b << ',' << q.c << "]  min=" << o.min_intersection
              << "  " << tag_name(o.tag) << '\n';
        }
        out << "nonsmooth: " << r.nonsmooth_count() << "  smooth: " << r.smooth_count()
            << "  very_ample: " << r.very_ample_count() << '\n';
      }
      return 0;
    }

    if (*lists) {
      if (bound < 0) bound = which == "star" ? 2000 : which == "idoneal" ? 1848 : 400;
      std::vector<i64> values = which == "star"      ? star_list(bound)
                                : which == "idoneal" ? idoneal_list(bound)
                                                     : p4_exceptional_list(bound);
      if (as_json) {
        json j = detail::shell("lists", json{{"which", which}, {"bound", bound}}, "formula");
        j["values"] = values;
        j["notes"] = json::array({list_completeness_note()});
        emit(j);
      } else {
        out << detail::join(values) << '\n' << "note: " << list_completeness_note() << '\n';
      }
      return 0;
    }

    if (*verify_cmd) {
      VerifyReport r = verify(m_max, d_max);
      if (as_json) {
        json j = detail::shell("verify", json{{"m_max", m_max}, {"d_max", d_max}}, "oracle");
        json body = json_of(r);
        j["cells"] = std::move(body["cells"]);
        j["all_pass"] = r.all_pass;
        j["notes"] = json::array();
        emit(j);
      } else {
        i64 failures = 0;
        for (const VerifyCell &c : r.cells)
          if (!c.pass) ++failures;
        out << "checks: " << r.cells.size() << "  failures: " << failures << '\n';
        for (const VerifyCell &c : r.cells)
          if (!c.pass)
            out << "FAIL m=" << c.m << " d=" << c.d << " check=" << c.check
                << " formula=" << c.formula << " oracle=" << c.oracle << '\n';
        out << "all_pass: " << (r.all_pass ? "true" : "false") << '\n';
      }
      return r.all_pass ? 0 : 2;
    }

    Picard2Counts c = picard2_counts(d);
    if (as_json) {
      json j = detail::shell("pr2", json{{"d", d}}, "formula");
      j["total"] = c.total;
      j["smooth"] = c.smooth;
      j["very_ample"] = c.very_ample;
      j["notes"] = json::array();
      emit(j);
    } else {
      out << "d: " << d << '\n'
          << "N = " << c.total << '\n'
          << "N_sm = " << c.smooth << '\n'
          << "N_va = " << c.very_ample << '\n';
    }
    return 0;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::overflow_error &e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::length_error &e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace nslat::cli
