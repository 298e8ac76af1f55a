#pragma once

#include <string>
#include <vector>

#include "matrixx/af.hpp"

namespace matrixx {

// How argument names are ordered inside a rendered extension:
// lexicographic for apx names, numeric for iccma indices.
enum class NameOrder { Lexicographic, Numeric };

// "[a,c]" — members sorted by name.
std::string render_extension(const ArgumentationFramework& af,
                             const Extension& ext, NameOrder order);

// "[[a,c],[b,d]]" — extensions sorted lexicographically by rendered form.
std::string render_extension_list(const ArgumentationFramework& af,
                                  const std::vector<Extension>& extensions,
                                  NameOrder order);

std::string render_decision(bool accepted);  // "YES" / "NO"

}  // namespace matrixx
