#include "matrixx/render.hpp"

#include <algorithm>

namespace matrixx {

namespace {

// Numeric names carry no leading zeros, so shorter means smaller.
bool numeric_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::string render_extension(const ArgumentationFramework& af,
                             const Extension& ext, NameOrder order) {
  std::vector<std::string> names;
  names.reserve(ext.size());
  for (ArgId a : ext.members()) names.push_back(af.name(a));
  if (order == NameOrder::Numeric) {
    std::sort(names.begin(), names.end(), numeric_less);
  } else {
    std::sort(names.begin(), names.end());
  }
  std::string out = "[";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ",";
    out += names[i];
  }
  out += "]";
  return out;
}

std::string render_extension_list(const ArgumentationFramework& af,
                                  const std::vector<Extension>& extensions,
                                  NameOrder order) {
  std::vector<std::string> rendered;
  rendered.reserve(extensions.size());
  for (const auto& ext : extensions) {
    rendered.push_back(render_extension(af, ext, order));
  }
  std::sort(rendered.begin(), rendered.end());
  std::string out = "[";
  for (std::size_t i = 0; i < rendered.size(); ++i) {
    if (i > 0) out += ",";
    out += rendered[i];
  }
  out += "]";
  return out;
}

std::string render_decision(bool accepted) { return accepted ? "YES" : "NO"; }

}  // namespace matrixx
