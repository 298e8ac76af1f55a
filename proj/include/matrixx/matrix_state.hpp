#pragma once

#include <string>
#include <string_view>

#include "matrixx/af.hpp"

namespace matrixx {

enum class Semantics { Stable, Complete };

std::string_view semantics_code(Semantics mode);  // "ST" / "CO"

// One node of the search tree: the shrunken matrix. `off` holds the live
// rows (still-choosable attackers), `def` the live columns (arguments that
// still need to be covered), `ext` the extension under construction.
//
// `att` holds the nodes whose attacks still count when defensive
// properties are evaluated. Under stable semantics it always equals `off`.
// Under complete semantics a node excluded via node_not_chosen stays in
// `att`, and only nodes defeated by the extension (or absorbed into it)
// drop out, so `off` is a subset of `att`.
//
// States are values: copies are deep and independent, only the framework
// itself is shared (read-only).
class MatrixState {
 public:
  static MatrixState initial(const ArgumentationFramework& af, Semantics mode);

  const ArgumentationFramework& framework() const noexcept { return *af_; }
  Semantics mode() const noexcept { return mode_; }
  const IdSet& off() const noexcept { return off_; }
  const IdSet& def() const noexcept { return def_; }
  const IdSet& att() const noexcept { return att_; }
  const IdSet& ext() const noexcept { return ext_; }

  // Offensive properties of `a` relative to the live columns: {a}+ ∩ def.
  IdSet rel_targets(ArgId a) const;

  // Defensive properties of `a` relative to the still-considered
  // attackers: {a}- ∩ att.
  IdSet rel_attackers(ArgId a) const;

  // Commits node `i` into the extension and erases it together with its
  // offensive and (off-filtered) defensive properties from the rows, and
  // itself plus its offensive properties from the columns. Requires
  // i ∈ off ∩ def, i not self-attacking, i not attacked by the extension.
  MatrixState node_chosen(ArgId i) const;

  // Excludes node `i`: erases its row only. Under complete semantics the
  // node remains visible to later defensive evaluations.
  MatrixState node_not_chosen(ArgId i) const;

  // Canonical one-line state dump (members in id order).
  std::string dump() const;

  // Full matrix with struck rows/columns marked, in the style of the
  // trace tables. First line is dump().
  std::string render_matrix() const;

 private:
  MatrixState(const ArgumentationFramework& af, Semantics mode);

  const ArgumentationFramework* af_ = nullptr;
  Semantics mode_ = Semantics::Stable;
  IdSet off_;
  IdSet def_;
  IdSet att_;
  IdSet ext_;
};

}  // namespace matrixx
