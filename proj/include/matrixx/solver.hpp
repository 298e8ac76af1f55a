#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matrixx/matrix_state.hpp"

namespace matrixx {

enum class Task { SE, EE, DC, DS };

// Problem descriptor: reasoning task × semantics, plus the query argument
// for the decision tasks.
struct TaskSpec {
  Task task = Task::EE;
  Semantics semantics = Semantics::Stable;
  std::optional<std::string> query;

  // Parses "EE-ST", "DC-CO", ... Throws std::invalid_argument otherwise.
  static TaskSpec parse(std::string_view problem,
                        std::optional<std::string> query = std::nullopt);
};

std::string problem_code(const TaskSpec& task);  // "EE-ST", ...

struct SolverStats {
  std::uint64_t states_expanded = 0;
  std::uint64_t states_abandoned = 0;
  std::uint64_t duplicates_suppressed = 0;
  std::uint64_t peak_frontier = 0;
};

struct SolveResult {
  std::vector<Extension> extensions;  // discovery order, deduplicated
  std::optional<bool> decision;       // DC/DS verdict
  SolverStats stats;
};

struct SearchOptions {
  std::optional<std::size_t> limit;                // stop after k extensions
  std::function<void(const MatrixState&)> trace;   // called per visited state
};

// Result of one branching step: L = [C] or [C, N].
struct BranchOutcome {
  std::vector<MatrixState> successors;
  ArgId chosen = 0;
};

// Least fixpoint of the defense operator: repeatedly admit every argument
// whose attackers are all attacked by the set so far (unattacked arguments
// first). Equals the least complete extension.
Extension grounded_extension(const ArgumentationFramework& af);

// One iteration over op_range = off ∩ def. An unattacked node short-cuts
// to a single node_chosen successor; otherwise the node with the fewest
// relative attackers (ties: smallest id) branches two ways — except that
// a self-attacker only ever produces the node_not_chosen successor.
// Throws PreconditionError on an empty op_range.
BranchOutcome expand(const MatrixState& s);

bool is_stable_accept(const MatrixState& s);   // off = def = ∅
bool is_abandoned(const MatrixState& s);       // off = ∅, def ≠ ∅

// Complete-semantics acceptance: no still-considered node may be left
// undefended-against (every member of att must have an attacker within
// att), and every extension member must be unattacked within att.
bool is_complete_accept(const MatrixState& s);

// Applies node_chosen for each grounded member still in off ∩ def, in
// ascending id order. The result is the common root of the search.
MatrixState seed_with_grounded(const MatrixState& s0, const Extension& g);

// Depth-first enumeration of all extensions under `mode`, seeded with the
// grounded extension, deduplicated, in deterministic discovery order.
SolveResult enumerate(const ArgumentationFramework& af, Semantics mode,
                      const SearchOptions& opts = {});

// Task dispatch. SE stops at the first extension; DC/DS stop at the first
// witness/counterexample. Throws UnknownArgumentError for a query naming
// no argument of the instance.
SolveResult solve(const ArgumentationFramework& af, const TaskSpec& task,
                  const SearchOptions& opts = {});

}  // namespace matrixx
