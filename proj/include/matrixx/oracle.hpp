#pragma once

#include <vector>

#include "matrixx/af.hpp"

// Brute-force reference semantics. Everything here evaluates the textbook
// definitions literally by subset enumeration; it exists so the solver can
// be checked against an independent implementation.
namespace matrixx::oracle {

enum class SemanticsKind { ConflictFree, Admissible, Complete, Stable, Grounded };

// Literal definition check for one candidate set. Grounded compares
// against the least complete extension and therefore enumerates (n ≤ 20).
bool check(const ArgumentationFramework& af, const std::vector<ArgId>& members,
           SemanticsKind kind);

// All subsets of A passing check, canonicalized and sorted. Grounded
// yields exactly one element. Throws TooLargeError when n > 20.
std::vector<Extension> enumerate_brute(const ArgumentationFramework& af,
                                       SemanticsKind kind);

// Least complete extension, found by enumeration (not by fixpoint — the
// solver has its own fixpoint construction, and the two cross-validate).
Extension grounded(const ArgumentationFramework& af);

}  // namespace matrixx::oracle
