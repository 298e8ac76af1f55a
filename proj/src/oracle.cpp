#include "matrixx/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace matrixx::oracle {

namespace {

constexpr std::size_t kMaxBruteSize = 20;

struct SetView {
  std::vector<char> in;        // membership of the candidate set
  std::vector<char> attacked;  // attacked by some member
};

SetView build_view(const ArgumentationFramework& af,
                   const std::vector<ArgId>& members) {
  SetView v;
  v.in.assign(af.size(), 0);
  v.attacked.assign(af.size(), 0);
  for (ArgId a : members) {
    if (a >= af.size()) {
      throw std::out_of_range("oracle: argument id " + std::to_string(a) +
                              " out of range");
    }
    v.in[a] = 1;
    for (ArgId t : af.targets(a)) v.attacked[t] = 1;
  }
  return v;
}

bool conflict_free(const ArgumentationFramework& af, const SetView& v) {
  for (ArgId a = 0; a < af.size(); ++a) {
    if (v.in[a] && v.attacked[a]) return false;
  }
  return true;
}

bool defends(const ArgumentationFramework& af, const SetView& v, ArgId a) {
  for (ArgId b : af.attackers(a)) {
    if (!v.attacked[b]) return false;
  }
  return true;
}

bool admissible(const ArgumentationFramework& af, const SetView& v) {
  if (!conflict_free(af, v)) return false;
  for (ArgId a = 0; a < af.size(); ++a) {
    if (v.in[a] && !defends(af, v, a)) return false;
  }
  return true;
}

}  // namespace

bool check(const ArgumentationFramework& af, const std::vector<ArgId>& members,
           SemanticsKind kind) {
  if (kind == SemanticsKind::Grounded) {
    return Extension(members) == grounded(af);
  }
  SetView v = build_view(af, members);
  switch (kind) {
    case SemanticsKind::ConflictFree:
      return conflict_free(af, v);
    case SemanticsKind::Admissible:
      return admissible(af, v);
    case SemanticsKind::Complete: {
      if (!admissible(af, v)) return false;
      for (ArgId a = 0; a < af.size(); ++a) {
        if (!v.in[a] && defends(af, v, a)) return false;
      }
      return true;
    }
    case SemanticsKind::Stable: {
      if (!conflict_free(af, v)) return false;
      for (ArgId a = 0; a < af.size(); ++a) {
        if (!v.in[a] && !v.attacked[a]) return false;
      }
      return true;
    }
    case SemanticsKind::Grounded:
      break;
  }
  return false;
}

std::vector<Extension> enumerate_brute(const ArgumentationFramework& af,
                                       SemanticsKind kind) {
  if (af.size() > kMaxBruteSize) {
    throw TooLargeError("oracle: instance has " + std::to_string(af.size()) +
                        " arguments, brute force is capped at " +
                        std::to_string(kMaxBruteSize));
  }
  if (kind == SemanticsKind::Grounded) return {grounded(af)};

  std::vector<Extension> out;
  const std::uint32_t n = static_cast<std::uint32_t>(af.size());
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<ArgId> members;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    members.clear();
    for (std::uint32_t bit = 0; bit < n; ++bit) {
      if (mask & (std::uint64_t{1} << bit)) members.push_back(bit);
    }
    if (check(af, members, kind)) out.emplace_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Extension grounded(const ArgumentationFramework& af) {
  auto complete = enumerate_brute(af, SemanticsKind::Complete);
  for (const auto& candidate : complete) {
    bool least = true;
    for (const auto& other : complete) {
      if (!candidate.subset_of(other)) {
        least = false;
        break;
      }
    }
    if (least) return candidate;
  }
  throw std::logic_error("oracle: no least complete extension found");
}

}  // namespace matrixx::oracle
