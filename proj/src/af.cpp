#include "matrixx/af.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace matrixx {

std::vector<ArgId> sorted_ids(const IdSet& set) {
  std::vector<ArgId> ids(set.begin(), set.end());
  std::sort(ids.begin(), ids.end());
  return ids;
}

SyntaxError::SyntaxError(const std::string& message, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

UnknownArgumentError::UnknownArgumentError(const std::string& name,
                                           std::size_t line)
    : std::runtime_error(line == 0 ? "unknown argument '" + name + "'"
                                   : "line " + std::to_string(line) +
                                         ": unknown argument '" + name + "'"),
      name_(name) {}

Extension::Extension(std::vector<ArgId> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool Extension::contains(ArgId a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

bool Extension::subset_of(const Extension& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

ArgumentationFramework::ArgumentationFramework(
    std::vector<std::string> names,
    const std::vector<std::pair<ArgId, ArgId>>& attacks)
    : names_(std::move(names)),
      attackers_(names_.size()),
      targets_(names_.size()) {
  ids_.reserve(names_.size());
  for (ArgId i = 0; i < names_.size(); ++i) {
    if (!ids_.emplace(names_[i], i).second) {
      throw std::invalid_argument("duplicate argument name '" + names_[i] +
                                  "'");
    }
  }
  for (const auto& [attacker, target] : attacks) {
    check_id(attacker);
    check_id(target);
    if (targets_[attacker].insert(target).second) {
      attackers_[target].insert(attacker);
      ++attack_count_;
      if (attacker == target) self_attackers_.insert(attacker);
    }
  }
}

void ArgumentationFramework::check_id(ArgId a) const {
  if (a >= names_.size()) {
    throw std::out_of_range("argument id " + std::to_string(a) +
                            " out of range (n=" + std::to_string(size()) +
                            ")");
  }
}

const std::string& ArgumentationFramework::name(ArgId a) const {
  check_id(a);
  return names_[a];
}

std::optional<ArgId> ArgumentationFramework::id_of(
    std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const IdSet& ArgumentationFramework::attackers(ArgId a) const {
  check_id(a);
  return attackers_[a];
}

const IdSet& ArgumentationFramework::targets(ArgId a) const {
  check_id(a);
  return targets_[a];
}

bool ArgumentationFramework::has_attack(ArgId attacker, ArgId target) const {
  check_id(attacker);
  check_id(target);
  return targets_[attacker].contains(target);
}

bool ArgumentationFramework::is_self_attacker(ArgId a) const {
  check_id(a);
  return self_attackers_.contains(a);
}

std::vector<std::pair<ArgId, ArgId>> ArgumentationFramework::attacks() const {
  std::vector<std::pair<ArgId, ArgId>> pairs;
  pairs.reserve(attack_count_);
  for (ArgId a = 0; a < names_.size(); ++a) {
    for (ArgId b : sorted_ids(targets_[a])) pairs.emplace_back(a, b);
  }
  return pairs;
}

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// Fact-oriented apx scanner. Facts are `arg(<name>).` and
// `att(<name>,<name>).`; whitespace (including newlines) may appear
// between tokens, `//` and `%` comment to end of line.
class ApxScanner {
 public:
  explicit ApxScanner(std::string_view text) : text_(text) {}

  void skip_blanks() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f' ||
                 c == '\v') {
        ++pos_;
      } else if (c == '%' || (c == '/' && pos_ + 1 < text_.size() &&
                              text_[pos_ + 1] == '/')) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_blanks();
    return pos_ >= text_.size();
  }

  void expect(char c) {
    skip_blanks();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw SyntaxError(std::string("expected '") + c + "'", line_);
    }
    ++pos_;
  }

  std::string name() {
    skip_blanks();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (pos_ == start) throw SyntaxError("expected argument name", line_);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t line() const noexcept { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

struct PendingAttack {
  std::string attacker;
  std::string target;
  std::size_t line;
};

}  // namespace

ArgumentationFramework parse_apx(std::string_view text) {
  ApxScanner scan(text);
  std::vector<std::string> names;
  std::unordered_map<std::string, ArgId> ids;
  std::vector<PendingAttack> pending;

  while (!scan.at_end()) {
    std::string keyword = scan.name();
    if (keyword == "arg") {
      scan.expect('(');
      std::string name = scan.name();
      scan.expect(')');
      scan.expect('.');
      if (ids.emplace(name, static_cast<ArgId>(names.size())).second) {
        names.push_back(std::move(name));
      }
    } else if (keyword == "att") {
      scan.expect('(');
      std::string attacker = scan.name();
      scan.expect(',');
      std::string target = scan.name();
      scan.expect(')');
      std::size_t line = scan.line();
      scan.expect('.');
      pending.push_back({std::move(attacker), std::move(target), line});
    } else {
      throw SyntaxError("unknown fact '" + keyword + "'", scan.line());
    }
  }

  std::vector<std::pair<ArgId, ArgId>> attacks;
  attacks.reserve(pending.size());
  for (const auto& att : pending) {
    auto a = ids.find(att.attacker);
    if (a == ids.end()) throw UnknownArgumentError(att.attacker, att.line);
    auto b = ids.find(att.target);
    if (b == ids.end()) throw UnknownArgumentError(att.target, att.line);
    attacks.emplace_back(a->second, b->second);
  }
  return ArgumentationFramework(std::move(names), attacks);
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw SyntaxError("expected a number, got '" + std::string(token) + "'",
                      line);
  }
  return value;
}

}  // namespace

ArgumentationFramework parse_iccma(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<std::pair<ArgId, ArgId>> attacks;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 3 || tokens[0] != "p" || tokens[1] != "af") {
        throw SyntaxError("expected header 'p af <n>'", line_no);
      }
      n = parse_uint(tokens[2], line_no);
      have_header = true;
      continue;
    }
    if (tokens.size() != 2) {
      throw SyntaxError("expected attack '<i> <j>'", line_no);
    }
    std::uint64_t i = parse_uint(tokens[0], line_no);
    std::uint64_t j = parse_uint(tokens[1], line_no);
    if (i < 1 || i > n) {
      throw UnknownArgumentError(std::string(tokens[0]), line_no);
    }
    if (j < 1 || j > n) {
      throw UnknownArgumentError(std::string(tokens[1]), line_no);
    }
    attacks.emplace_back(static_cast<ArgId>(i - 1), static_cast<ArgId>(j - 1));
  }
  if (!have_header && n == 0) {
    // A completely blank document still needs its header.
    bool blank = true;
    for (char c : text) {
      if (c != ' ' && c != '\t' && c != '\r' && c != '\n') {
        blank = false;
        break;
      }
    }
    if (!blank) throw SyntaxError("expected header 'p af <n>'", 1);
  }

  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return ArgumentationFramework(std::move(names), attacks);
}

ArgumentationFramework parse_af(std::string_view text, InstanceFormat format) {
  return format == InstanceFormat::Apx ? parse_apx(text) : parse_iccma(text);
}

InstanceFormat detect_format(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;

    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string_view::npos) continue;
    line.remove_prefix(start);
    if (line.front() == '#') return InstanceFormat::Iccma;
    if (line.substr(0, 2) == "p " || line == "p") return InstanceFormat::Iccma;
    return InstanceFormat::Apx;
  }
  return InstanceFormat::Apx;
}

std::string to_apx(const ArgumentationFramework& af) {
  std::string out;
  for (const auto& name : af.arguments()) {
    out += "arg(" + name + ").\n";
  }
  for (const auto& [a, b] : af.attacks()) {
    out += "att(" + af.name(a) + "," + af.name(b) + ").\n";
  }
  return out;
}

}  // namespace matrixx
