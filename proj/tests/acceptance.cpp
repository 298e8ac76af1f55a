// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "matrixx/oracle.hpp"
#include "matrixx/random_af.hpp"
#include "matrixx/render.hpp"
#include "matrixx/solver.hpp"
#include "test_support.hpp"

using namespace matrixx;

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

struct CorpusEntry {
  RandomAfParams params;
  ArgumentationFramework af;
  SolveResult st_run;
  SolveResult co_run;
  std::vector<Extension> st_oracle;
  std::vector<Extension> co_oracle;
};

// 4 probabilities × n ∈ [1,12] × 11 repetitions = 528 seeded instances,
// every node additionally self-attacking with probability 0.2.
std::vector<CorpusEntry>& corpus() {
  static std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    const double probabilities[] = {0.05, 0.15, 0.3, 0.5};
    for (std::uint32_t pi = 0; pi < 4; ++pi) {
      for (std::uint32_t n = 1; n <= 12; ++n) {
        for (std::uint32_t rep = 0; rep < 11; ++rep) {
          CorpusEntry entry;
          entry.params.n = n;
          entry.params.attack_probability = probabilities[pi];
          entry.params.self_attack_probability = 0.2;
          entry.params.seed = 10000 + pi * 2000 + n * 100 + rep;
          entry.af = random_framework(entry.params);
          entry.st_run = enumerate(entry.af, Semantics::Stable);
          entry.co_run = enumerate(entry.af, Semantics::Complete);
          entry.st_oracle =
              oracle::enumerate_brute(entry.af, oracle::SemanticsKind::Stable);
          entry.co_oracle = oracle::enumerate_brute(
              entry.af, oracle::SemanticsKind::Complete);
          out.push_back(std::move(entry));
        }
      }
    }
    return out;
  }();
  return entries;
}

std::string describe(const RandomAfParams& p) {
  std::ostringstream out;
  out << "n=" << p.n << " p=" << p.attack_probability << " seed=" << p.seed;
  return out.str();
}

bool criterion_worked_example(std::string& detail) {
  auto start = Clock::now();
  auto af = testutil::four_cycle();
  auto stable = testutil::as_set(enumerate(af, Semantics::Stable).extensions);
  auto complete =
      testutil::as_set(enumerate(af, Semantics::Complete).extensions);
  auto elapsed = ms_since(start);

  std::set<Extension> want_stable = {testutil::ext(af, {"a", "c"}),
                                     testutil::ext(af, {"b", "d"})};
  std::set<Extension> want_complete = {testutil::ext(af, {}),
                                       testutil::ext(af, {"a", "c"}),
                                       testutil::ext(af, {"b", "d"})};
  if (stable != want_stable) {
    detail = "EE-ST mismatch on the 4-cycle";
    return false;
  }
  if (complete != want_complete) {
    detail = "EE-CO mismatch on the 4-cycle";
    return false;
  }
  if (elapsed >= 1000) {
    detail = "took " + std::to_string(elapsed) + " ms (budget 1000 ms)";
    return false;
  }
  detail = "st={{a,c},{b,d}} co={{},{a,c},{b,d}} in " +
           std::to_string(elapsed) + " ms";
  return true;
}

bool criterion_transition_golden(std::string& detail) {
  auto af = testutil::four_cycle();
  auto initial = MatrixState::initial(af, Semantics::Stable);
  ArgId d = testutil::id(af, "d");

  const std::string chosen = initial.node_chosen(d).dump();
  const std::string want_chosen = "mode=ST off={b} def={b,c} att={b} ext={d}";
  if (chosen != want_chosen) {
    detail = "node_chosen(d) dump '" + chosen + "' != '" + want_chosen + "'";
    return false;
  }

  const std::string excluded = initial.node_not_chosen(d).dump();
  const std::string want_excluded =
      "mode=ST off={a,b,c} def={a,b,c,d} att={a,b,c} ext={}";
  if (excluded != want_excluded) {
    detail = "node_not_chosen(d) dump '" + excluded + "' != '" +
             want_excluded + "'";
    return false;
  }
  detail = "both dumps bit-identical to the expected tables";
  return true;
}

bool criterion_oracle_equivalence(std::string& detail) {
  std::size_t mismatches = 0;
  std::string first_bad;
  for (const auto& entry : corpus()) {
    bool st_ok = testutil::as_set(entry.st_run.extensions) ==
                 testutil::as_set(entry.st_oracle);
    bool co_ok = testutil::as_set(entry.co_run.extensions) ==
                 testutil::as_set(entry.co_oracle);
    if (!st_ok || !co_ok) {
      ++mismatches;
      if (first_bad.empty()) {
        first_bad = describe(entry.params) + (st_ok ? " (CO)" : " (ST)");
      }
    }
  }
  std::ostringstream out;
  out << corpus().size() << " instances, " << mismatches << " mismatches";
  if (!first_bad.empty()) out << ", first: " << first_bad;
  detail = out.str();
  return mismatches == 0 && corpus().size() >= 500;
}

bool criterion_lattice_invariants(std::string& detail) {
  for (const auto& entry : corpus()) {
    auto complete_set = testutil::as_set(entry.co_run.extensions);
    for (const auto& st : entry.st_run.extensions) {
      if (!complete_set.contains(st)) {
        detail = "stable extension missing from EE-CO on " +
                 describe(entry.params);
        return false;
      }
    }

    Extension g = grounded_extension(entry.af);
    if (g != oracle::grounded(entry.af)) {
      detail = "fixpoint grounded != oracle grounded on " +
               describe(entry.params);
      return false;
    }
    std::vector<ArgId> intersection =
        entry.co_run.extensions.front().members();
    for (const auto& co : entry.co_run.extensions) {
      if (!g.subset_of(co)) {
        detail = "grounded not contained in a complete extension on " +
                 describe(entry.params);
        return false;
      }
      std::vector<ArgId> next;
      for (ArgId a : intersection) {
        if (co.contains(a)) next.push_back(a);
      }
      intersection = std::move(next);
    }
    if (Extension(intersection) != g) {
      detail = "grounded != intersection of complete extensions on " +
               describe(entry.params);
      return false;
    }
  }
  detail = "st ⊆ co, grounded = ⋂co = oracle least complete, on all " +
           std::to_string(corpus().size()) + " instances";
  return true;
}

bool criterion_decision_consistency(std::string& detail) {
  std::size_t queries = 0;
  for (const auto& entry : corpus()) {
    for (Semantics sem : {Semantics::Stable, Semantics::Complete}) {
      const auto& all = sem == Semantics::Stable ? entry.st_run.extensions
                                                 : entry.co_run.extensions;
      const char* code = sem == Semantics::Stable ? "ST" : "CO";
      for (ArgId q = 0; q < entry.af.size(); ++q) {
        bool in_union =
            std::any_of(all.begin(), all.end(),
                        [&](const Extension& e) { return e.contains(q); });
        bool in_meet =
            std::all_of(all.begin(), all.end(),
                        [&](const Extension& e) { return e.contains(q); });
        auto dc = solve(entry.af, TaskSpec::parse(std::string("DC-") + code,
                                                  entry.af.name(q)));
        auto ds = solve(entry.af, TaskSpec::parse(std::string("DS-") + code,
                                                  entry.af.name(q)));
        queries += 2;
        if (dc.decision != in_union) {
          detail = std::string("DC-") + code + "(" + entry.af.name(q) +
                   ") disagrees with EE on " + describe(entry.params);
          return false;
        }
        if (ds.decision != in_meet) {
          detail = std::string("DS-") + code + "(" + entry.af.name(q) +
                   ") disagrees with EE on " + describe(entry.params);
          return false;
        }
      }
    }
  }
  detail = std::to_string(queries) + " decision queries consistent with EE";
  return true;
}

bool criterion_determinism(std::string& detail) {
  for (const auto& entry : corpus()) {
    auto st_again = enumerate(entry.af, Semantics::Stable);
    auto co_again = enumerate(entry.af, Semantics::Complete);
    if (st_again.extensions != entry.st_run.extensions ||
        co_again.extensions != entry.co_run.extensions) {
      detail = "extension order differs between runs on " +
               describe(entry.params);
      return false;
    }
    auto render = [&](const SolveResult& r) {
      return render_extension_list(entry.af, r.extensions,
                                   NameOrder::Lexicographic);
    };
    if (render(st_again) != render(entry.st_run) ||
        render(co_again) != render(entry.co_run)) {
      detail = "rendered output differs between runs on " +
               describe(entry.params);
      return false;
    }
  }
  detail = "two runs byte-identical on all " +
           std::to_string(corpus().size()) + " instances";
  return true;
}

bool criterion_performance_smoke(std::string& detail) {
  RandomAfParams params;
  params.n = 100;
  params.attack_probability = 0.05;
  params.self_attack_probability = 0.0;
  params.seed = 7;
  auto af = random_framework(params);

  auto start = Clock::now();
  auto result = enumerate(af, Semantics::Stable);
  auto elapsed = ms_since(start);

  std::ostringstream out;
  out << describe(params) << " extensions=" << result.extensions.size()
      << " elapsed_ms=" << elapsed
      << " states_expanded=" << result.stats.states_expanded
      << " states_abandoned=" << result.stats.states_abandoned
      << " duplicates_suppressed=" << result.stats.duplicates_suppressed
      << " peak_frontier=" << result.stats.peak_frontier;
  detail = out.str();
  return elapsed < 60000;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "worked-example fidelity (EE-ST/EE-CO on the 4-cycle, < 1 s)",
       criterion_worked_example},
      {2, "transition golden dumps (node_chosen(d) / node_not_chosen(d))",
       criterion_transition_golden},
      {3, "oracle equivalence on the seeded corpus",
       criterion_oracle_equivalence},
      {4, "lattice invariants (st ⊆ co, grounded = least complete = ⋂co)",
       criterion_lattice_invariants},
      {5, "decision-task consistency (DC/DS vs EE, DS vacuous on empty)",
       criterion_decision_consistency},
      {6, "determinism (byte-identical repeated runs)", criterion_determinism},
      {7, "performance smoke (EE-ST, n=100, p=0.05, < 60 s)",
       criterion_performance_smoke},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    bool passed = false;
    auto start = Clock::now();
    try {
      passed = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    auto elapsed = ms_since(start);
    std::cout << (passed ? "[PASS]" : "[FAIL]") << " criterion "
              << criterion.id << ": " << criterion.name;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << " (" << elapsed << " ms)\n";
    if (!passed) ++failures;
  }
  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED")
            << " (" << criteria.size() - failures << "/" << criteria.size()
            << " criteria)\n";
  return failures;
}
