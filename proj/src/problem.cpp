#include "frobnorm/problem.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "frobnorm/error.hpp"

namespace frobnorm {

namespace {

[[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& msg) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text, std::size_t line, std::size_t col0)
      : ring_(ring), text_(text), line_(line), col0_(col0) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail(line_, column(), "expected a polynomial");
    Polynomial acc = ring_->zero();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    while (true) {
      Polynomial t = term();
      acc = negative ? acc - t : acc + t;
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail(line_, column(), std::string("unexpected '") + c + "'");
      negative = c == '-';
      ++pos_;
    }
    return acc;
  }

 private:
  Polynomial term() {
    skip_ws();
    if (at_end()) fail(line_, column(), "expected a term");
    Monomial m(ring_->nvars());
    Coeff coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number_mod_p();
    } else {
      factor(m);
    }
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      factor(m);
    }
    return ring_->monomial(m, coeff);
  }

  void factor(Monomial& m) {
    skip_ws();
    std::size_t start = pos_;
    if (at_end() || !std::isalpha(static_cast<unsigned char>(peek())))
      fail(line_, column(), "expected a variable");
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    auto idx = ring_->index_of(name);
    if (!idx) fail(line_, col0_ + start, "unknown variable '" + name + "'");
    std::uint64_t e = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      e = natural();
    }
    std::uint64_t total = std::uint64_t(m[*idx]) + e;
    if (total > std::numeric_limits<std::int32_t>::max())
      fail(line_, column(), "exponent overflow");
    m[*idx] = static_cast<Exponent>(total);
  }

  std::uint64_t natural() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail(line_, column(), "expected a natural number");
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > std::numeric_limits<std::int32_t>::max()) fail(line_, column(), "exponent overflow");
      ++pos_;
    }
    return v;
  }

  Coeff number_mod_p() {
    const auto& field = ring_->field();
    Coeff v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = field.add(field.mul(v, field.reduce(10)), field.reduce(peek() - '0'));
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t column() const { return col0_ + pos_; }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

struct Located {
  std::string text;
  std::size_t line;
  std::size_t column;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line,
                            std::size_t first_column) {
  return PolyParser(ring, text, line, first_column).parse();
}

ProblemFile parse_input(std::string_view text) {
  std::optional<Located> p_field, vars_field, conductor_field;
  std::vector<Located> rels;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) fail(line_no, 1, "expected 'key: value'");
    std::string key(trim(line.substr(0, colon)));
    std::string_view value = line.substr(colon + 1);
    std::size_t value_col = colon + 2;

    if (key == "p" || key == "vars" || key == "conductor") {
      auto& slot = key == "p" ? p_field : key == "vars" ? vars_field : conductor_field;
      if (slot) fail(line_no, 1, "duplicate key '" + key + "'");
      slot = Located{std::string(value), line_no, value_col};
    } else if (key == "rels") {
      // Split on commas, tracking the column of each piece.
      std::size_t piece_start = 0;
      while (true) {
        std::size_t comma = value.find(',', piece_start);
        std::size_t piece_end = comma == std::string_view::npos ? value.size() : comma;
        rels.push_back(Located{std::string(value.substr(piece_start, piece_end - piece_start)),
                               line_no, value_col + piece_start});
        if (comma == std::string_view::npos) break;
        piece_start = comma + 1;
      }
    } else {
      fail(line_no, 1, "unknown key '" + key + "'");
    }
    if (end == text.size()) break;
  }

  if (!p_field) fail(line_no, 1, "missing 'p:' line");
  if (!vars_field) fail(line_no, 1, "missing 'vars:' line");
  if (rels.empty()) fail(line_no, 1, "missing 'rels:' line");

  ProblemFile out;
  {
    std::string_view v = trim(p_field->text);
    std::uint64_t p = 0;
    if (v.empty()) fail(p_field->line, p_field->column, "expected a prime");
    for (char c : v) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(p_field->line, p_field->column, "characteristic must be a natural number");
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
      if (p >= PrimeField::kMaxCharacteristic)
        fail(p_field->line, p_field->column, "characteristic must be below 2^20");
    }
    if (!is_prime(p))
      fail(p_field->line, p_field->column, std::to_string(p) + " is not prime");
    out.p = static_cast<std::uint32_t>(p);
  }
  {
    std::istringstream in(vars_field->text);
    std::string name;
    while (in >> name) {
      if (!valid_name(name))
        fail(vars_field->line, vars_field->column, "invalid variable name '" + name + "'");
      for (const auto& seen : out.vars)
        if (seen == name)
          fail(vars_field->line, vars_field->column, "duplicate variable '" + name + "'");
      out.vars.push_back(name);
    }
    if (out.vars.empty()) fail(vars_field->line, vars_field->column, "no variables declared");
  }
  out.ring = PolyRing::make(out.p, out.vars);
  for (const auto& r : rels)
    out.relations.push_back(parse_polynomial(out.ring, r.text, r.line, r.column));
  if (conductor_field)
    out.conductor = parse_polynomial(out.ring, conductor_field->text, conductor_field->line,
                                     conductor_field->column);
  return out;
}

std::string format_problem(const ProblemFile& file) {
  std::ostringstream out;
  out << "p: " << file.p << "\nvars:";
  for (const auto& v : file.vars) out << ' ' << v;
  out << "\nrels: ";
  for (std::size_t i = 0; i < file.relations.size(); ++i)
    out << (i ? ", " : "") << to_string(file.relations[i]);
  out << '\n';
  if (file.conductor) out << "conductor: " << to_string(*file.conductor) << '\n';
  return out.str();
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  if (a.p != b.p || a.vars != b.vars || a.relations.size() != b.relations.size()) return false;
  for (std::size_t i = 0; i < a.relations.size(); ++i)
    if (!(a.relations[i] == b.relations[i])) return false;
  if (a.conductor.has_value() != b.conductor.has_value()) return false;
  return !a.conductor || *a.conductor == *b.conductor;
}

}  // namespace frobnorm
