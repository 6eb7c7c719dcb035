#pragma once

// Command-line front end. Exit codes: 0 success, 1 usage, 2 I/O or format
// error, 3 a search cell ran out of budget.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nearplat/canonical.hpp"
#include "nearplat/counting.hpp"
#include "nearplat/dot.hpp"
#include "nearplat/families.hpp"
#include "nearplat/planar_code.hpp"
#include "nearplat/report.hpp"
#include "nearplat/search.hpp"

namespace nearplat {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitIo = 2, kExitBudget = 3 };

namespace detail {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Bytes read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

inline void write_output(const std::string& path, std::ostream& out, const std::string& data) {
  if (path.empty() || path == "-") {
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f.write(data.data(), static_cast<std::streamsize>(data.size()));
}

inline int default_threads() {
  if (const char* env = std::getenv("NEARPLAT_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

inline std::optional<PlatonicId> platonic_match(const PlanarMap& map) {
  const auto code = canonical_code(map);
  for (auto id : kAllPlatonic) {
    if (canonical_code(generate_platonic(id)) == code) return id;
  }
  return std::nullopt;
}

}  // namespace detail

inline int cli_dispatch(int argc, const char* const* argv, std::ostream& out = std::cout,
                        std::ostream& err = std::cerr, std::istream& in = std::cin) {
  CLI::App app{"Enumerate and classify nearly platonic plane maps", "nearplat"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a family member or Platonic map as planar_code");
  std::string family, platonic, gen_out;
  int gen_d = 0;
  auto* fam_opt = gen->add_option("--family", family, "family name");
  auto* plat_opt = gen->add_option("--platonic", platonic, "tetrahedron|cube|octahedron|dodecahedron|icosahedron");
  fam_opt->excludes(plat_opt);
  gen->add_option("--d", gen_d, "family parameter");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // classify
  auto* cls = app.add_subcommand("classify", "print the signature of each map in a planar_code file");
  std::string cls_in;
  cls->add_option("--in", cls_in, "input file (default stdin)");

  // feasible
  auto* fea = app.add_subcommand("feasible", "check the counting identities for a face signature");
  int fk = 0, fd2 = 0, ff1 = 0, fd1 = 0;
  fea->add_option("--k", fk)->required();
  fea->add_option("--d2", fd2)->required();
  fea->add_option("--f1", ff1)->required();
  fea->add_option("--d1", fd1)->required();

  // search-style commands share budget flags
  struct Common {
    long long budget_nodes = SearchOptions{}.budget_nodes;
    double budget_secs = SearchOptions{}.budget_secs;
    std::string lemma3 = "off";
    int threads = detail::default_threads();
    std::string out;
    bool no_timing = false;
  } common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget-nodes", common.budget_nodes, "search node cap per cell");
    sub->add_option("--budget-secs", common.budget_secs, "wall-clock cap per cell");
    sub->add_option("--lemma3-pruning", common.lemma3, "chord pruning for one disparate face")
        ->check(CLI::IsMember({"on", "off"}));
    sub->add_option("--threads", common.threads, "worker threads (default NEARPLAT_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", common.out, "report file (default stdout)");
    sub->add_flag("--no-timing", common.no_timing, "omit timing fields from the report");
  };

  auto* srch = app.add_subcommand("search", "enumerate maps with a prescribed face spectrum");
  SearchTask task;
  std::string policy = "constrained";
  srch->add_option("--k", task.k)->required();
  srch->add_option("--d2", task.d2);
  srch->add_option("--f1", task.f1);
  srch->add_option("--d1", task.d1, "allowed disparate degrees (default any)")->delimiter(',');
  srch->add_option("--vmin", task.v_min);
  srch->add_option("--vmax", task.v_max)->required();
  srch->add_option("--policy", policy)->check(CLI::IsMember({"constrained", "unconstrained"}));
  add_common(srch);

  auto* thm = app.add_subcommand("verify-theorem1", "search every one-disparate-face cell up to a bound");
  std::optional<int> thm_vmax;
  thm->add_option("--vmax", thm_vmax, "vertex bound for all pairs (default per-pair bounds)");
  add_common(thm);

  auto* conj = app.add_subcommand("check-conjecture1", "search two-disparate-face maps up to a bound");
  std::optional<int> ck, cd2;
  int c_vmax = 10;
  conj->add_option("--k", ck);
  conj->add_option("--d2", cd2);
  conj->add_option("--vmax", c_vmax);
  add_common(conj);

  auto* dot = app.add_subcommand("export-dot", "convert planar_code maps to DOT");
  std::string dot_in, dot_out;
  bool dot_plain = false;
  dot->add_option("--in", dot_in, "input file (default stdin)");
  dot->add_option("--out", dot_out, "output file (default stdout)");
  dot->add_flag("--no-faces", dot_plain, "omit face comments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  auto options = [&] {
    SearchOptions o;
    o.budget_nodes = common.budget_nodes;
    o.budget_secs = common.budget_secs;
    o.lemma3 = common.lemma3 == "on";
    o.threads = common.threads;
    return o;
  };

  try {
    if (*gen) {
      std::vector<PlanarMap> maps;
      if (!family.empty()) {
        const auto id = family_from_name(family);
        if (!id) {
          err << "unknown family: " << family << "\n";
          return kExitUsage;
        }
        maps.push_back(generate_family(*id, gen_d));
      } else if (!platonic.empty()) {
        const auto id = platonic_from_name(platonic);
        if (!id) {
          err << "unknown Platonic solid: " << platonic << "\n";
          return kExitUsage;
        }
        maps.push_back(generate_platonic(*id));
      } else {
        err << "generate needs --family or --platonic\n";
        return kExitUsage;
      }
      const auto bytes = write_planar_code(maps);
      detail::write_output(gen_out, out, std::string(bytes.begin(), bytes.end()));
      return kExitOk;
    }

    if (*cls) {
      for (const auto& map : read_planar_code(detail::read_input(cls_in, in))) {
        out << format_signature(signature_of(map));
        if (const auto p = detail::platonic_match(map)) out << "  # isomorphic to the " << platonic_info(*p).name;
        out << "\n";
      }
      return kExitOk;
    }

    if (*fea) {
      if (ff1 < 0) {
        err << "--f1 must be non-negative\n";
        return kExitUsage;
      }
      std::optional<Rational> vq;
      try {
        vq = ff1 == 1 ? vertices_for_one_disparate(fk, fd2, fd1) : vertices_from_face_identity(fk, fd2, ff1, fd1);
      } catch (const CountingError& e) {
        out << "INFEASIBLE: " << e.what() << "\n";
        return kExitOk;
      }
      if (!is_integral(*vq)) {
        const char* id = ff1 == 1 ? identity::kOneDisparateIntegral : identity::kFaceIdentity;
        out << Feasibility::fail(id, to_string(*vq)).describe() << "\n";
        out << "v = " << to_string(*vq) << "\n";
        return kExitOk;
      }
      const int v = static_cast<int>(*vq);
      const auto verdict = v > 0 ? feasibility_of_cell(fk, fd2, std::vector<int>(ff1, fd1), v)
                                 : Feasibility::fail(identity::kFaceIdentity, "v=" + std::to_string(v));
      out << verdict.describe() << "\n";
      out << "v = " << v << "\n";
      return kExitOk;
    }

    auto emit = [&](const Json& doc, bool complete) {
      detail::write_output(common.out, out, doc.dump(2) + "\n");
      return complete ? kExitOk : kExitBudget;
    };

    if (*srch) {
      task.policy = policy == "constrained" ? SearchPolicy::kFaceConstrained : SearchPolicy::kUnconstrained;
      SearchReport r;
      try {
        r = enumerate(task, options());
      } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kExitUsage;
      }
      return emit(report_json(r, !common.no_timing), r.complete());
    }

    if (*thm) {
      auto bounds = default_theorem_bounds();
      if (thm_vmax) {
        for (auto& b : bounds) b.v_max = *thm_vmax;
      }
      const auto r = verify_theorem_one_disparate(bounds, options());
      return emit(report_json(r, !common.no_timing), r.complete());
    }

    if (*conj) {
      std::vector<std::pair<int, int>> pairs;
      for (const auto& [k, d2] : admissible_pairs(2)) {
        if ((!ck || *ck == k) && (!cd2 || *cd2 == d2)) pairs.emplace_back(k, d2);
      }
      if (pairs.empty()) {
        err << "no admissible pair matches the given --k/--d2\n";
        return kExitUsage;
      }
      Json docs = Json::array();
      bool complete = true;
      for (const auto& [k, d2] : pairs) {
        const auto r = check_conjecture_equal_degrees(k, d2, c_vmax, options());
        docs.push_back(conjecture_json(r, !common.no_timing));
        complete = complete && r.complete();
      }
      return emit(docs.size() == 1 ? docs[0] : docs, complete);
    }

    if (*dot) {
      std::string text;
      int i = 0;
      for (const auto& map : read_planar_code(detail::read_input(dot_in, in))) {
        text += export_dot(map, !dot_plain, "G" + std::to_string(i++));
      }
      detail::write_output(dot_out, out, text);
      return kExitOk;
    }
  } catch (const ParameterTooSmall& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << e.what() << "\n";
    return kExitIo;
  } catch (const detail::IoError& e) {
    err << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace nearplat
