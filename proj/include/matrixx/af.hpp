#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace matrixx {

// Dense argument index in [0, n). Names exist only at the I/O edges.
using ArgId = std::uint32_t;
using IdSet = std::unordered_set<ArgId>;

std::vector<ArgId> sorted_ids(const IdSet& set);

// Malformed instance text; line() is the 1-based input line.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t line);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An attack or a query mentions a name that was never declared.
class UnknownArgumentError : public std::runtime_error {
 public:
  explicit UnknownArgumentError(const std::string& name, std::size_t line = 0);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// A state-transition or solver call violated its contract.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Instance too big for exhaustive enumeration.
class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical set of argument ids: strictly ascending, duplicate-free.
class Extension {
 public:
  Extension() = default;
  explicit Extension(std::vector<ArgId> ids);

  const std::vector<ArgId>& members() const noexcept { return members_; }
  bool contains(ArgId a) const;
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool subset_of(const Extension& other) const;

  friend bool operator==(const Extension&, const Extension&) = default;
  friend bool operator<(const Extension& a, const Extension& b) {
    return a.members_ < b.members_;
  }

 private:
  std::vector<ArgId> members_;
};

// Immutable directed graph of arguments and attacks. Adjacency is kept
// sparsely as per-node sets; absent attacks are never materialized.
class ArgumentationFramework {
 public:
  ArgumentationFramework() = default;
  ArgumentationFramework(std::vector<std::string> names,
                         const std::vector<std::pair<ArgId, ArgId>>& attacks);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& arguments() const noexcept { return names_; }
  const std::string& name(ArgId a) const;
  std::optional<ArgId> id_of(std::string_view name) const;

  // Static {a}- and {a}+ over the full framework.
  const IdSet& attackers(ArgId a) const;
  const IdSet& targets(ArgId a) const;

  bool has_attack(ArgId attacker, ArgId target) const;
  bool is_self_attacker(ArgId a) const;
  const IdSet& self_attackers() const noexcept { return self_attackers_; }

  std::size_t attack_count() const noexcept { return attack_count_; }
  std::vector<std::pair<ArgId, ArgId>> attacks() const;  // sorted pairs

 private:
  void check_id(ArgId a) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, ArgId> ids_;
  std::vector<IdSet> attackers_;
  std::vector<IdSet> targets_;
  IdSet self_attackers_;
  std::size_t attack_count_ = 0;
};

enum class InstanceFormat { Apx, Iccma };

ArgumentationFramework parse_apx(std::string_view text);
ArgumentationFramework parse_iccma(std::string_view text);
ArgumentationFramework parse_af(std::string_view text, InstanceFormat format);

// Instances whose first significant line is a `p af` header (or a `#`
// comment) are treated as iccma; everything else as apx.
InstanceFormat detect_format(std::string_view text);

std::string to_apx(const ArgumentationFramework& af);

}  // namespace matrixx
