#include "matrixx/matrix_state.hpp"

#include <algorithm>

namespace matrixx {

std::string_view semantics_code(Semantics mode) {
  return mode == Semantics::Stable ? "ST" : "CO";
}

MatrixState::MatrixState(const ArgumentationFramework& af, Semantics mode)
    : af_(&af), mode_(mode) {}

MatrixState MatrixState::initial(const ArgumentationFramework& af,
                                 Semantics mode) {
  MatrixState s(af, mode);
  s.off_.reserve(af.size());
  for (ArgId a = 0; a < af.size(); ++a) s.off_.insert(a);
  s.def_ = s.off_;
  s.att_ = s.off_;
  return s;
}

IdSet MatrixState::rel_targets(ArgId a) const {
  IdSet out;
  for (ArgId b : af_->targets(a)) {
    if (def_.contains(b)) out.insert(b);
  }
  return out;
}

IdSet MatrixState::rel_attackers(ArgId a) const {
  IdSet out;
  for (ArgId b : af_->attackers(a)) {
    if (att_.contains(b)) out.insert(b);
  }
  return out;
}

MatrixState MatrixState::node_chosen(ArgId i) const {
  if (!off_.contains(i) || !def_.contains(i)) {
    throw PreconditionError("node_chosen: node '" + af_->name(i) +
                            "' is not in off ∩ def");
  }
  if (af_->is_self_attacker(i)) {
    throw PreconditionError("node_chosen: node '" + af_->name(i) +
                            "' attacks itself");
  }
  for (ArgId e : ext_) {
    if (af_->has_attack(e, i)) {
      throw PreconditionError("node_chosen: node '" + af_->name(i) +
                              "' is attacked by the current extension");
    }
  }

  MatrixState next(*this);
  IdSet struck_targets = rel_targets(i);

  next.ext_.insert(i);
  next.off_.erase(i);
  next.def_.erase(i);
  for (ArgId t : struck_targets) {
    next.off_.erase(t);
    next.def_.erase(t);
  }
  // Removal from the rows concerns choosability, so the attacker set is
  // filtered by off in both modes.
  for (ArgId b : af_->attackers(i)) next.off_.erase(b);

  if (mode_ == Semantics::Stable) {
    next.att_ = next.off_;
  } else {
    // Only the chosen node and the nodes it defeats stop counting as
    // attackers; an undefeated attacker of i must stay visible until some
    // extension member strikes it.
    next.att_.erase(i);
    for (ArgId t : struck_targets) next.att_.erase(t);
  }
  return next;
}

MatrixState MatrixState::node_not_chosen(ArgId i) const {
  if (!off_.contains(i)) {
    throw PreconditionError("node_not_chosen: node '" + af_->name(i) +
                            "' is not in off");
  }
  MatrixState next(*this);
  next.off_.erase(i);
  if (mode_ == Semantics::Stable) next.att_.erase(i);
  return next;
}

namespace {

std::string format_set(const ArgumentationFramework& af, const IdSet& set) {
  std::string out = "{";
  bool first = true;
  for (ArgId a : sorted_ids(set)) {
    if (!first) out += ",";
    out += af.name(a);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace

std::string MatrixState::dump() const {
  std::string out = "mode=";
  out += semantics_code(mode_);
  out += " off=" + format_set(*af_, off_);
  out += " def=" + format_set(*af_, def_);
  out += " att=" + format_set(*af_, att_);
  out += " ext=" + format_set(*af_, ext_);
  return out;
}

std::string MatrixState::render_matrix() const {
  const auto& af = *af_;
  std::size_t width = 1;
  for (const auto& name : af.arguments()) width = std::max(width, name.size());
  width += 2;  // room for the strike marker

  auto cell = [&](const std::string& text) {
    std::string padded = text;
    while (padded.size() < width) padded += ' ';
    return padded;
  };
  auto label = [&](ArgId a, bool struck) {
    return cell(struck ? af.name(a) + "*" : af.name(a));
  };

  std::string out = dump();
  out += "\n";
  out += cell("");
  for (ArgId col = 0; col < af.size(); ++col) {
    out += label(col, !def_.contains(col));
  }
  out += "\n";
  for (ArgId row = 0; row < af.size(); ++row) {
    out += label(row, !off_.contains(row));
    for (ArgId col = 0; col < af.size(); ++col) {
      out += cell(af.has_attack(row, col) ? "1" : "0");
    }
    out += "\n";
  }
  return out;
}

}  // namespace matrixx
