#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gext/fuzz.hpp"
#include "gext/gallery.hpp"
#include "gext/io.hpp"
#include "gext/report.hpp"

using namespace gext;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;

struct Shared {
  std::string format = "json";
  std::string out;
  bool timing = false;
  std::size_t cap = 0;
};

std::size_t cap_or_default(const Shared& s) { return s.cap ? s.cap : default_resolution_cap(); }

LoadedInstance load(const std::string& path) { return load_instance(parse_instance(read_json_file(path))); }

const GroupAction& need_action(const LoadedInstance& in) {
  if (!in.action) throw InvalidArgument("instance has no group action");
  return *in.action;
}

json algebra_summary(const GradedAlgebra& b) {
  return json{{"base", base_to_json(b.base())}, {"rank", b.rank()}, {"degrees", b.degrees()}};
}

json cmd_check_galois(const std::string& path) {
  const LoadedInstance in = load(path);
  const GaloisCertificate c = is_galois(need_action(in));
  return json{{"input", path}, {"algebra", algebra_summary(in.algebra)}, {"verdict", c.verdict}, {"certificate", to_json(c)}};
}

json cmd_dual_basis(const std::string& path) {
  const LoadedInstance in = load(path);
  const GroupAction& act = need_action(in);
  const GaloisCertificate c = is_galois(act);
  json body{{"input", path}, {"verdict", c.verdict}, {"galois", to_json(c)}};
  if (c.verdict) body["dual_basis"] = to_json(dual_basis(act));
  return body;
}

json cmd_check_separable(const std::string& path) {
  const LoadedInstance in = load(path);
  const auto cert = separability_idempotent(in.algebra);
  json body{{"input", path}, {"algebra", algebra_summary(in.algebra)}, {"verdict", cert.has_value()},
            {"regularity", to_json(degree_zero_regularity(in.algebra))}};
  body["certificate"] = cert ? to_json(*cert) : json(nullptr);
  return body;
}

json cmd_concentrate(const std::string& path) {
  const LoadedInstance in = load(path);
  const auto cert = separability_idempotent(in.algebra);
  json body{{"input", path}, {"separable", cert.has_value()}};
  if (!cert) return body;
  body["certificate"] = to_json(*cert);
  const ConcentrationResult r = concentrate_idempotent(in.algebra, cert->idempotent);
  body["verdict"] = outcome_name(r.outcome);
  body["concentration"] = to_json(r);
  return body;
}

json cmd_kaehler(const std::string& path) {
  const LoadedInstance in = load(path);
  const KaehlerModule k = kaehler_module(in.algebra);
  return json{{"input", path}, {"verdict", module_is_zero(k.omega) ? "zero" : "nonzero"}, {"kaehler", to_json(k)}};
}

json cmd_hh1(const std::string& path) {
  const LoadedInstance in = load(path);
  const auto w = hh1_nontrivial(in.algebra);
  return json{{"input", path}, {"verdict", w.has_value()}, {"witness", w ? to_json(*w) : json(nullptr)}};
}

json cmd_tor(const std::string& a, const std::string& b, std::size_t p, const Shared& s) {
  const PresentedModule m = parse_module(read_json_file(a));
  const PresentedModule n = parse_module(read_json_file(b));
  const std::size_t cap = cap_or_default(s);
  const PresentedModule t = tor(m, n, p, cap);
  return json{{"inputs", {a, b}}, {"p", p}, {"cap", cap},
              {"resolution", to_json(free_resolution(m, std::max<std::size_t>(p + 1, 1)))},
              {"tor", presented_to_json(t)}};
}

json cmd_graded_tor(const std::string& a, const std::string& b, std::size_t p, int q, const Shared& s) {
  const PresentedModule m = parse_module(read_json_file(a));
  const PresentedModule n = parse_module(read_json_file(b));
  const std::size_t cap = cap_or_default(s);
  const GradedTor t = graded_tor(split_by_degree(m), split_by_degree(n), p, q, cap);
  return json{{"inputs", {a, b}}, {"p", p}, {"q", q}, {"cap", cap}, {"graded_tor", to_json(t)}};
}

GModule load_gmodule(const std::string& path) {
  const json j = read_json_file(path);
  if (j.is_object() && j.value("format", "") == "gext-gmodule") return parse_gmodule(j);
  const LoadedInstance in = load_instance(parse_instance(j));
  return GModule::from_action(need_action(in));
}

json cmd_group_cohomology(const std::string& path, std::size_t degree, const Shared& s) {
  const GModule m = load_gmodule(path);
  const std::size_t cap = cap_or_default(s);
  json rows = json::array();
  for (std::size_t k = 0; k <= degree; ++k) rows.push_back(json{{"s", k}, {"module", presented_to_json(group_cohomology(m, k, cap))}});
  return json{{"input", path}, {"group_order", m.group().order()}, {"rank", m.rank()}, {"cap", cap}, {"cohomology", rows}};
}

json cmd_tensor_self(const std::string& path) {
  const PresentedModule m = parse_module(read_json_file(path));
  const TensorSelfResult r = tensor_self_nonzero(m);
  return json{{"input", path}, {"verdict", r.nonzero}, {"result", to_json(r)}};
}

void emit(const std::string& text, const Shared& s) {
  if (s.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(s.out);
  if (!f) throw InvalidArgument("cannot write '" + s.out + "'");
  f << text;
}

void emit_report(const std::string& command, json body, const Shared& s, double ms) {
  if (s.timing) body["timing_ms"] = ms;
  const json report = make_report(command, std::move(body));
  emit(s.format == "text" ? render_text(report) : report.dump(2) + "\n", s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for graded ring extensions"};
  app.require_subcommand(1);
  app.fallthrough();
  Shared shared;
  app.add_option("--format", shared.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", shared.out, "write the report here instead of stdout");
  app.add_flag("--timing", shared.timing, "add wall-clock time to the report");
  app.add_option("--cap", shared.cap, "resolution cap (default from GEXT_RESOLUTION_CAP or 6)");

  std::string path, path2, name;
  std::size_t p = 0, degree = 2;
  int q = 0;
  FuzzOptions fo;
  std::function<json()> run;
  std::string command;

  auto single = [&](const char* cmd, const char* help, json (*fn)(const std::string&)) {
    auto* sub = app.add_subcommand(cmd, help);
    sub->add_option("instance", path, "instance document")->required()->check(CLI::ExistingFile);
    sub->callback([&, fn, cmd] {
      command = cmd;
      run = [&, fn] { return fn(path); };
    });
  };
  single("check-galois", "decide whether the action is Galois", cmd_check_galois);
  single("dual-basis", "dual basis from the Galois inverse", cmd_dual_basis);
  single("check-separable", "search for a separability idempotent", cmd_check_separable);
  single("concentrate", "push a separability idempotent into bidegree (0,0)", cmd_concentrate);
  single("kaehler", "module of Kaehler differentials", cmd_kaehler);
  single("hh1", "nonzero class in the differentials", cmd_hh1);
  single("tensor-self", "decide whether M (x) M is nonzero", cmd_tensor_self);

  auto* tor_cmd = app.add_subcommand("tor", "Tor_p over the base ring of two modules");
  tor_cmd->add_option("m", path, "module document")->required()->check(CLI::ExistingFile);
  tor_cmd->add_option("n", path2, "module document")->required()->check(CLI::ExistingFile);
  tor_cmd->add_option("-p,--degree", p, "homological degree");
  tor_cmd->callback([&] {
    command = "tor";
    run = [&] { return cmd_tor(path, path2, p, shared); };
  });

  auto* gtor_cmd = app.add_subcommand("graded-tor", "bigraded Tor_{p,q} of two graded modules");
  gtor_cmd->add_option("b", path, "module document")->required()->check(CLI::ExistingFile);
  gtor_cmd->add_option("c", path2, "module document")->required()->check(CLI::ExistingFile);
  gtor_cmd->add_option("-p", p, "homological degree");
  gtor_cmd->add_option("-q", q, "internal degree");
  gtor_cmd->callback([&] {
    command = "graded-tor";
    run = [&] { return cmd_graded_tor(path, path2, p, q, shared); };
  });

  auto* coh_cmd = app.add_subcommand("group-cohomology", "H^s(G, M) for s up to the given degree");
  coh_cmd->add_option("module", path, "G-module or instance document with an action")->required()->check(CLI::ExistingFile);
  coh_cmd->add_option("-s,--degree", degree, "top cohomological degree");
  coh_cmd->callback([&] {
    command = "group-cohomology";
    run = [&] { return cmd_group_cohomology(path, degree, shared); };
  });

  auto* gal_cmd = app.add_subcommand("gallery", "print a named instance document");
  gal_cmd->add_option("name", name, "fixture name")->required()->check(CLI::IsMember(gallery_names()));
  gal_cmd->callback([&] { command = "gallery"; });

  auto* fuzz_cmd = app.add_subcommand("fuzz", "seeded search for counterexamples");
  fuzz_cmd->add_option("theorem", fo.theorem, "harness name")->required()->check(CLI::IsMember(fuzz_theorems()));
  fuzz_cmd->add_option("--trials", fo.trials, "number of trials");
  fuzz_cmd->add_option("--seed", fo.seed, "run seed");
  fuzz_cmd->add_option("--max-rank", fo.max_rank, "largest generated rank");
  fuzz_cmd->add_option("--degree-range", fo.degree_range, "largest generator degree");
  fuzz_cmd->add_option("--jobs", fo.jobs, "worker threads");
  fuzz_cmd->callback([&] {
    command = "fuzz";
    run = [&] { return to_json(run_fuzz(fo)); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (command == "gallery") {
      const AlgebraWithAction g = gallery_instance(name);
      emit(serialize_instance(document_from(g.algebra, g.action)), shared);
      return 0;
    }
    const auto t0 = std::chrono::steady_clock::now();
    json body = run();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    emit_report(command, std::move(body), shared, ms);
    return 0;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  } catch (const AxiomViolation& e) {
    std::cerr << "AxiomViolation: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
