#include "matrixx/solver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace matrixx {

TaskSpec TaskSpec::parse(std::string_view problem,
                         std::optional<std::string> query) {
  TaskSpec spec;
  spec.query = std::move(query);
  if (problem.size() != 5 || problem[2] != '-') {
    throw std::invalid_argument("unknown problem '" + std::string(problem) +
                                "'");
  }
  std::string_view task = problem.substr(0, 2);
  std::string_view sem = problem.substr(3, 2);
  if (task == "SE") {
    spec.task = Task::SE;
  } else if (task == "EE") {
    spec.task = Task::EE;
  } else if (task == "DC") {
    spec.task = Task::DC;
  } else if (task == "DS") {
    spec.task = Task::DS;
  } else {
    throw std::invalid_argument("unknown task '" + std::string(task) + "'");
  }
  if (sem == "ST") {
    spec.semantics = Semantics::Stable;
  } else if (sem == "CO") {
    spec.semantics = Semantics::Complete;
  } else {
    throw std::invalid_argument("unknown semantics '" + std::string(sem) +
                                "'");
  }
  return spec;
}

std::string problem_code(const TaskSpec& task) {
  std::string code;
  switch (task.task) {
    case Task::SE: code = "SE"; break;
    case Task::EE: code = "EE"; break;
    case Task::DC: code = "DC"; break;
    case Task::DS: code = "DS"; break;
  }
  code += "-";
  code += semantics_code(task.semantics);
  return code;
}

Extension grounded_extension(const ArgumentationFramework& af) {
  std::vector<char> in(af.size(), 0);
  std::vector<char> defeated(af.size(), 0);
  std::vector<ArgId> members;

  bool changed = true;
  while (changed) {
    changed = false;
    for (ArgId a = 0; a < af.size(); ++a) {
      if (in[a]) continue;
      bool defended = true;
      for (ArgId b : af.attackers(a)) {
        if (!defeated[b]) {
          defended = false;
          break;
        }
      }
      if (!defended) continue;
      in[a] = 1;
      members.push_back(a);
      for (ArgId t : af.targets(a)) defeated[t] = 1;
      changed = true;
    }
  }
  return Extension(std::move(members));
}

BranchOutcome expand(const MatrixState& s) {
  const auto& af = s.framework();
  bool found = false;
  ArgId best = 0;
  std::size_t best_count = 0;
  for (ArgId i : s.off()) {
    if (!s.def().contains(i)) continue;
    std::size_t count = 0;
    for (ArgId b : af.attackers(i)) {
      if (s.att().contains(b)) ++count;
    }
    if (!found || count < best_count ||
        (count == best_count && i < best)) {
      found = true;
      best = i;
      best_count = count;
    }
  }
  if (!found) throw PreconditionError("expand: op_range is empty");

  BranchOutcome out;
  out.chosen = best;
  if (af.is_self_attacker(best)) {
    // Never part of a conflict-free set; only the exclusion branch exists.
    out.successors.push_back(s.node_not_chosen(best));
  } else if (best_count == 0) {
    out.successors.push_back(s.node_chosen(best));
  } else {
    out.successors.push_back(s.node_chosen(best));
    out.successors.push_back(s.node_not_chosen(best));
  }
  return out;
}

bool is_stable_accept(const MatrixState& s) {
  if (s.mode() != Semantics::Stable) {
    throw PreconditionError("is_stable_accept: state is not in stable mode");
  }
  return s.off().empty() && s.def().empty();
}

bool is_abandoned(const MatrixState& s) {
  if (s.mode() != Semantics::Stable) {
    throw PreconditionError("is_abandoned: state is not in stable mode");
  }
  return s.off().empty() && !s.def().empty();
}

bool is_complete_accept(const MatrixState& s) {
  if (s.mode() != Semantics::Complete) {
    throw PreconditionError(
        "is_complete_accept: state is not in complete mode");
  }
  const auto& af = s.framework();
  // A still-considered node with no still-considered attacker is defended
  // by the extension without being in it, so the extension is not closed.
  for (ArgId x : s.att()) {
    bool attacked = false;
    for (ArgId b : af.attackers(x)) {
      if (s.att().contains(b)) {
        attacked = true;
        break;
      }
    }
    if (!attacked) return false;
  }
  for (ArgId e : s.ext()) {
    for (ArgId b : af.attackers(e)) {
      if (s.att().contains(b)) return false;
    }
  }
  return true;
}

MatrixState seed_with_grounded(const MatrixState& s0, const Extension& g) {
  MatrixState s = s0;
  for (ArgId a : g.members()) {
    if (s.off().contains(a) && s.def().contains(a)) {
      s = s.node_chosen(a);
    }
  }
  return s;
}

namespace {

bool has_op_range(const MatrixState& s) {
  for (ArgId i : s.off()) {
    if (s.def().contains(i)) return true;
  }
  return false;
}

// Complete-mode early abandonment: a node that is no longer a row can
// never join the extension, and once every one of its attackers has
// stopped counting it stays defended forever (none of those attackers can
// be chosen to defeat it), so no descendant passes the acceptance scan.
bool has_unchoosable_defended_node(const MatrixState& s) {
  const auto& af = s.framework();
  for (ArgId x : s.att()) {
    if (s.off().contains(x)) continue;
    bool attacked = false;
    for (ArgId b : af.attackers(x)) {
      if (s.att().contains(b)) {
        attacked = true;
        break;
      }
    }
    if (!attacked) return true;
  }
  return false;
}

// Stable-mode early abandonment: a live column is coverable only by
// choosing the node itself or one of its attackers, and only nodes that
// are still rows (and not self-attacking) can ever be chosen. Once a
// column has no such coverer left, no descendant empties def, so the
// whole subtree is barren. Subsumes the off = ∅ ∧ def ≠ ∅ rule.
bool has_uncoverable_column(const MatrixState& s) {
  const auto& af = s.framework();
  for (ArgId x : s.def()) {
    if (s.off().contains(x) && !af.is_self_attacker(x)) continue;
    bool coverable = false;
    for (ArgId b : af.attackers(x)) {
      if (s.off().contains(b) && !af.is_self_attacker(b)) {
        coverable = true;
        break;
      }
    }
    if (!coverable) return true;
  }
  return false;
}

// Depth-first worklist; emit returns false to stop the search.
SolverStats search(const ArgumentationFramework& af, Semantics mode,
                   const SearchOptions& opts,
                   const std::function<bool(const Extension&)>& emit) {
  SolverStats stats;
  std::vector<MatrixState> frontier;
  frontier.push_back(
      seed_with_grounded(MatrixState::initial(af, mode), grounded_extension(af)));
  std::set<Extension> seen;

  auto record = [&](const MatrixState& s) {
    Extension e(sorted_ids(s.ext()));
    if (!seen.insert(e).second) {
      ++stats.duplicates_suppressed;
      return true;
    }
    return emit(e);
  };

  while (!frontier.empty()) {
    stats.peak_frontier =
        std::max<std::uint64_t>(stats.peak_frontier, frontier.size());
    MatrixState s = std::move(frontier.back());
    frontier.pop_back();
    if (opts.trace) opts.trace(s);

    bool accepted = false;
    if (mode == Semantics::Stable) {
      if (is_stable_accept(s)) {
        if (!record(s)) return stats;
        continue;
      }
      if (is_abandoned(s) || has_uncoverable_column(s)) {
        ++stats.states_abandoned;
        continue;
      }
    } else {
      // Supersets of an accepted extension may be complete as well, so the
      // state is expanded regardless of acceptance.
      if (is_complete_accept(s)) {
        accepted = true;
        if (!record(s)) return stats;
      } else if (has_unchoosable_defended_node(s)) {
        ++stats.states_abandoned;
        continue;
      }
    }

    if (!has_op_range(s)) {
      if (!accepted) ++stats.states_abandoned;
      continue;
    }
    ++stats.states_expanded;
    BranchOutcome out = expand(s);
    // LIFO frontier: push in reverse so the chosen branch is visited first.
    for (auto it = out.successors.rbegin(); it != out.successors.rend();
         ++it) {
      frontier.push_back(std::move(*it));
    }
  }
  return stats;
}

ArgId resolve_query(const ArgumentationFramework& af, const TaskSpec& task) {
  if (!task.query) {
    throw std::invalid_argument("problem " + problem_code(task) +
                                " requires a query argument");
  }
  auto id = af.id_of(*task.query);
  if (!id) throw UnknownArgumentError(*task.query);
  return *id;
}

}  // namespace

SolveResult enumerate(const ArgumentationFramework& af, Semantics mode,
                      const SearchOptions& opts) {
  SolveResult result;
  if (opts.limit && *opts.limit == 0) return result;
  result.stats = search(af, mode, opts, [&](const Extension& e) {
    result.extensions.push_back(e);
    return !(opts.limit && result.extensions.size() >= *opts.limit);
  });
  return result;
}

SolveResult solve(const ArgumentationFramework& af, const TaskSpec& task,
                  const SearchOptions& opts) {
  switch (task.task) {
    case Task::SE: {
      SearchOptions one = opts;
      one.limit = 1;
      return enumerate(af, task.semantics, one);
    }
    case Task::EE:
      return enumerate(af, task.semantics, opts);
    case Task::DC: {
      ArgId q = resolve_query(af, task);
      SolveResult result;
      result.decision = false;
      result.stats =
          search(af, task.semantics, opts, [&](const Extension& e) {
            if (e.contains(q)) {
              result.decision = true;
              return false;
            }
            return true;
          });
      return result;
    }
    case Task::DS: {
      ArgId q = resolve_query(af, task);
      SolveResult result;
      result.decision = true;  // vacuously accepted when no extension exists
      result.stats =
          search(af, task.semantics, opts, [&](const Extension& e) {
            if (!e.contains(q)) {
              result.decision = false;
              return false;
            }
            return true;
          });
      return result;
    }
  }
  throw std::logic_error("solve: unreachable task");
}

}  // namespace matrixx
