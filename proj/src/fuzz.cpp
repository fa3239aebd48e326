#include "gext/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <thread>

#include "gext/differentials.hpp"
#include "gext/galois.hpp"
#include "gext/gallery.hpp"
#include "gext/homology.hpp"
#include "gext/io.hpp"
#include "gext/report.hpp"
#include "gext/separable.hpp"

namespace gext {

using nlohmann::json;

std::vector<std::string> fuzz_theorems() {
  return {"thm-3.2", "thm-4.2", "rem-4.3", "lem-5.3", "lem-5.8", "rem-5.5", "lem-3.4.1"};
}

PresentedModule random_module(std::uint64_t seed) {
  std::mt19937_64 g(seed);
  auto range = [&](long lo, long hi) { return lo + static_cast<long>(g() % static_cast<std::uint64_t>(hi - lo + 1)); };
  static const std::vector<int> menu = {0, 0, 2, 3, 4, 6, 8, 9, 12, 5};
  const int n = menu[static_cast<std::size_t>(range(0, menu.size() - 1))];
  const BaseRing base = n == 0 ? BaseRing::integers()
                        : is_prime(static_cast<std::uint64_t>(n)) ? BaseRing::prime_field(n)
                                                                   : BaseRing::integers_mod(n);
  const std::size_t gens = static_cast<std::size_t>(range(1, 4));
  const std::size_t rels = static_cast<std::size_t>(range(0, 4));
  ExactMatrix m(base, gens, rels);
  for (std::size_t i = 0; i < gens; ++i)
    for (std::size_t j = 0; j < rels; ++j) m.set(i, j, range(-8, 8));
  return PresentedModule(base, std::vector<int>(gens, 0), m);
}

namespace {

bool has_nonzero_degree(const GradedAlgebra& b) {
  const auto& ds = b.degrees();
  return std::any_of(ds.begin(), ds.end(), [](int d) { return d != 0; });
}

struct Harness {
  std::function<GeneratorParams(std::size_t trial)> params;
  std::function<void(const GeneratedInstance&, TrialRecord&)> judge;
};

GeneratorParams base_params(const FuzzOptions& o, std::size_t trial) {
  GeneratorParams p;
  p.seed = trial_seed(o.seed, trial);
  p.max_rank = o.max_rank;
  p.degree_range = o.degree_range;
  return p;
}

Harness harness_for(const FuzzOptions& o) {
  const std::string& t = o.theorem;
  if (t == "thm-3.2") {
    return {[&o](std::size_t i) {
              GeneratorParams p = base_params(o, i);
              p.with_action = true;
              p.lane = i % 2 ? Lane::Mixed : Lane::ForcedNonzero;
              if (i % 4 == 3) p.lane = Lane::Ungraded;
              return p;
            },
            [](const GeneratedInstance& g, TrialRecord& r) {
              const GaloisCertificate c = is_galois(*g.action);
              r.premise = c.verdict;
              r.counterexample = c.verdict && has_nonzero_degree(g.algebra);
              r.note = c.verdict ? "galois" : (c.fixed_ring_ok ? "h not invertible" : "fixed ring too large");
            }};
  }
  if (t == "thm-4.2" || t == "rem-4.3") {
    const bool connective = t == "rem-4.3";
    return {[&o, connective](std::size_t i) {
              GeneratorParams p = base_params(o, i);
              p.lane = connective ? (i % 2 ? Lane::Nonnegative : Lane::Connective) : (i % 3 == 2 ? Lane::Ungraded : i % 3 ? Lane::Mixed : Lane::ForcedNonzero);
              return p;
            },
            [connective](const GeneratedInstance& g, TrialRecord& r) {
              auto cert = separability_idempotent(g.algebra);
              if (!cert) {
                r.note = "not separable";
                return;
              }
              if (connective) {
                r.premise = true;
                r.note = "separable";
              } else {
                const RegularityReport reg = degree_zero_regularity(g.algebra, r.seed);
                r.premise = reg.regular_in_b;
                r.note = reg.regular_in_b ? "separable, B0 regular" : "separable, B0 has zero divisors";
              }
              r.counterexample = r.premise && has_nonzero_degree(g.algebra);
            }};
  }
  if (t == "lem-5.3" || t == "lem-5.8" || t == "rem-5.5") {
    return {[&o, t](std::size_t i) {
              GeneratorParams p = base_params(o, i);
              p.lane = t == "lem-5.8" ? Lane::NegativeBounded : Lane::Connective;
              p.degree_zero = t == "rem-5.5" ? DegreeZeroPart::Larger : DegreeZeroPart::BaseOnly;
              return p;
            },
            [t](const GeneratedInstance& g, TrialRecord& r) {
              const auto& ds = g.algebra.degrees();
              r.premise = t == "lem-5.8" ? std::any_of(ds.begin(), ds.end(), [](int d) { return d < 0; })
                                         : std::any_of(ds.begin(), ds.end(), [](int d) { return d > 0; });
              auto w = hh1_nontrivial(g.algebra);
              r.counterexample = r.premise && !w;
              r.note = w ? "witness in degree " + std::to_string(w->degree) : "omega is zero";
            }};
  }
  throw InvalidArgument("unknown theorem '" + t + "'");
}

json sensitivity_for(const FuzzOptions& o, bool& ok) {
  const std::string& t = o.theorem;
  if (t == "thm-3.2") {
    GeneratorParams p = base_params(o, o.trials);
    p.with_action = true;
    p.plant_galois = true;
    p.lane = Lane::Mixed;
    const GeneratedInstance g = random_graded_algebra(p);
    const GaloisCertificate c = is_galois(*g.action);
    ok = c.verdict && !has_nonzero_degree(g.algebra);
    return json{{"kind", "planted"}, {"recipe", g.recipe}, {"seed", p.seed}, {"base", g.algebra.base().name()},
                {"galois", c.verdict}};
  }
  if (t == "thm-4.2") {
    const GradedAlgebra m = make_matrix_example(BaseRing::prime_field(2));
    auto cert = separability_idempotent(m);
    const RegularityReport reg = degree_zero_regularity(m);
    ok = cert.has_value() && has_nonzero_degree(m) && !reg.regular_in_b && !m.commutative();
    json j{{"kind", "exhibit"}, {"name", "matrix-4.6"}, {"separable", cert.has_value()},
           {"nonzero_degree", has_nonzero_degree(m)}, {"regularity", to_json(reg)}};
    if (cert) j["certificate"] = to_json(*cert);
    return j;
  }
  if (t == "rem-4.3") {
    GeneratorParams p = base_params(o, o.trials);
    p.plant_galois = true;
    p.lane = Lane::Ungraded;
    const GeneratedInstance g = random_graded_algebra(p);
    ok = separability_idempotent(g.algebra).has_value();
    return json{{"kind", "planted"}, {"recipe", g.recipe}, {"seed", p.seed}, {"separable", ok}};
  }
  if (t == "lem-5.3" || t == "lem-5.8" || t == "rem-5.5") {
    GeneratorParams p = base_params(o, o.trials);
    p.plant_galois = true;
    p.lane = Lane::Ungraded;
    const GeneratedInstance g = random_graded_algebra(p);
    const bool omega_zero = module_is_zero(kaehler_module(g.algebra).omega);
    ok = omega_zero;
    return json{{"kind", "planted"}, {"recipe", g.recipe}, {"seed", p.seed}, {"omega_zero", omega_zero}};
  }
  if (t == "lem-3.4.1") {
    const TensorSelfResult z = tensor_self_nonzero(PresentedModule::zero(BaseRing::integers()));
    ok = !z.nonzero;
    return json{{"kind", "zero-module"}, {"nonzero", z.nonzero}};
  }
  return json(nullptr);
}

void add_stats(GenerationStats& a, const GenerationStats& b) {
  a.attempts += b.attempts;
  a.lane_rejections += b.lane_rejections;
  a.rank_rejections += b.rank_rejections;
  a.action_rejections += b.action_rejections;
  a.perturbations_tried += b.perturbations_tried;
  a.perturbations_kept += b.perturbations_kept;
  a.perturbations_reverted += b.perturbations_reverted;
}

}  // namespace

FuzzReport run_fuzz(const FuzzOptions& options) {
  const auto known = fuzz_theorems();
  if (std::find(known.begin(), known.end(), options.theorem) == known.end())
    throw InvalidArgument("unknown theorem '" + options.theorem + "'");

  FuzzReport report;
  report.options = options;
  report.trials.resize(options.trials);
  std::vector<GenerationStats> stats(options.trials);

  std::function<void(std::size_t)> run_trial;
  std::optional<Harness> harness;
  if (options.theorem == "lem-3.4.1") {
    run_trial = [&](std::size_t i) {
      TrialRecord& r = report.trials[i];
      r.index = i;
      r.seed = trial_seed(options.seed, i);
      const PresentedModule m = random_module(r.seed);
      r.base = m.base().name();
      r.recipe = "module " + std::to_string(m.generator_count()) + "x" + std::to_string(m.relations().cols());
      r.premise = !module_is_zero(m);
      const TensorSelfResult t = tensor_self_nonzero(m);
      r.counterexample = r.premise && !t.nonzero;
      r.note = module_structure(m).to_string(m.base());
    };
  } else {
    harness = harness_for(options);
    run_trial = [&](std::size_t i) {
      TrialRecord& r = report.trials[i];
      r.index = i;
      const GeneratorParams p = harness->params(i);
      r.seed = p.seed;
      const GeneratedInstance g = random_graded_algebra(p);
      stats[i] = g.stats;
      r.base = g.algebra.base().name();
      r.recipe = g.recipe;
      r.degrees = g.algebra.degrees();
      harness->judge(g, r);
    };
  }

  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, options.trials));
  if (jobs == 1) {
    for (std::size_t i = 0; i < options.trials; ++i) run_trial(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i; (i = next.fetch_add(1)) < options.trials;) run_trial(i);
        } catch (...) {
          errors[w] = std::current_exception();
          next = options.trials;
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (std::size_t i = 0; i < options.trials; ++i) {
    add_stats(report.generation, stats[i]);
    if (report.trials[i].premise) ++report.premise_count;
    if (report.trials[i].counterexample) ++report.counterexamples;
  }
  report.sensitivity = sensitivity_for(options, report.sensitivity_ok);
  return report;
}

json to_json(const FuzzReport& r) {
  json trials = json::array();
  for (const auto& t : r.trials)
    trials.push_back(json{{"index", t.index},
                          {"seed", t.seed},
                          {"base", t.base},
                          {"recipe", t.recipe},
                          {"degrees", t.degrees},
                          {"premise", t.premise},
                          {"counterexample", t.counterexample},
                          {"note", t.note}});
  const GenerationStats& s = r.generation;
  return json{{"theorem", r.options.theorem},
              {"trials_requested", r.options.trials},
              {"seed", r.options.seed},
              {"max_rank", r.options.max_rank},
              {"degree_range", r.options.degree_range},
              {"premise_held", r.premise_count},
              {"counterexamples", r.counterexamples},
              {"sensitivity", r.sensitivity},
              {"sensitivity_ok", r.sensitivity_ok},
              {"generation",
               {{"attempts", s.attempts},
                {"lane_rejections", s.lane_rejections},
                {"rank_rejections", s.rank_rejections},
                {"action_rejections", s.action_rejections},
                {"perturbations_tried", s.perturbations_tried},
                {"perturbations_kept", s.perturbations_kept},
                {"perturbations_reverted", s.perturbations_reverted}}},
              {"trials", trials}};
}

}  // namespace gext
