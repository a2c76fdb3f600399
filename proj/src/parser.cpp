#include "fracdyn/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <set>

#include "fracdyn/errors.hpp"

namespace fracdyn {

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, Bar, End };

struct Token {
  Tok kind;
  std::string_view text;
  double value = 0.0;
  std::size_t column = 1;  // 1-based
};

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Length of the unsigned real literal starting at s[pos], 0 if none.
std::size_t scan_number(std::string_view s, std::size_t pos) {
  std::size_t i = pos;
  bool digits = false;
  while (i < s.size() && is_digit(s[i])) {
    ++i;
    digits = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && is_digit(s[i])) {
      ++i;
      digits = true;
    }
  }
  if (!digits) return 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
    if (j < s.size() && is_digit(s[j])) {
      while (j < s.size() && is_digit(s[j])) ++j;
      i = j;
    }
  }
  return i - pos;
}

std::optional<double> to_double(std::string_view s) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t col = i + 1;
    if (std::size_t n = scan_number(s, i); n > 0) {
      auto text = s.substr(i, n);
      auto v = to_double(text);
      if (!v) throw ParseError("malformed number '" + std::string(text) + "'", 0, col);
      out.push_back({Tok::Number, text, *v, col});
      i += n;
      continue;
    }
    if (is_name_start(c)) {
      std::size_t j = i + 1;
      while (j < s.size() && is_name_char(s[j])) ++j;
      out.push_back({Tok::Name, s.substr(i, j - i), 0.0, col});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '|': kind = Tok::Bar; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", 0, col);
    }
    out.push_back({kind, s.substr(i, 1), 0.0, col});
    ++i;
  }
  out.push_back({Tok::End, {}, 0.0, s.size() + 1});
  return out;
}

GenPoly raise(const GenPoly& base, double e, std::size_t col) {
  const std::size_t n = base.nvars();
  if (base.is_zero()) {
    if (e > 0.0) return base;
    throw ParseError("zero raised to a non-positive power", 0, col);
  }
  if (base.terms().size() == 1) {
    GenTerm t = base.terms().front();
    if (t.coeff < 0.0 && !is_integer_exponent(e)) {
      throw ParseError("negative constant raised to a fractional power", 0, col);
    }
    t.coeff = std::pow(t.coeff, e);
    for (auto& f : t.factors) f.exponent *= e;
    return GenPoly(n, {t});
  }
  if (e < 0.0 || !is_integer_exponent(e) || e > 64.0) {
    throw ParseError("a sum may only be raised to a non-negative integer power", 0, col);
  }
  GenPoly out = GenPoly::constant(n, 1.0);
  for (int k = 0; k < static_cast<int>(e); ++k) out *= base;
  return out;
}

class ExprParser {
 public:
  ExprParser(std::string_view text, std::span<const std::string> vars,
             const std::map<std::string, double>& params)
      : toks_(tokenize(text)), vars_(vars), params_(params) {}

  GenPoly parse() {
    GenPoly p = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + std::string(peek().text) + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 0, peek().column); }

  GenPoly expr() {
    GenPoly sum(vars_.size());
    double sign = 1.0;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      sign = next().kind == Tok::Minus ? -1.0 : 1.0;
    }
    sum += sign * term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      sign = next().kind == Tok::Minus ? -1.0 : 1.0;
      if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        if (next().kind == Tok::Minus) sign = -sign;
      }
      sum += sign * term();
    }
    return sum;
  }

  GenPoly term() {
    GenPoly prod = factor();
    for (;;) {
      if (peek().kind == Tok::Star) {
        next();
        prod *= factor();
      } else if (peek().kind == Tok::Slash) {
        fail("division is not supported");
      } else {
        return prod;
      }
    }
  }

  GenPoly factor() {
    GenPoly b = base();
    if (peek().kind != Tok::Caret) return b;
    const std::size_t col = next().column;
    double sign = 1.0;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      sign = next().kind == Tok::Minus ? -1.0 : 1.0;
    }
    if (peek().kind != Tok::Number) fail("exponent must be a numeric literal");
    return raise(b, sign * next().value, col);
  }

  GenPoly base() {
    const Token& t = peek();
    const std::size_t n = vars_.size();
    switch (t.kind) {
      case Tok::Number:
        next();
        return GenPoly::constant(n, t.value);
      case Tok::Name: {
        next();
        return lookup(t, false);
      }
      case Tok::Bar: {
        next();
        if (peek().kind != Tok::Name) fail("expected a name inside |...|");
        const Token& name = next();
        if (peek().kind != Tok::Bar) fail("expected closing '|'");
        next();
        return lookup(name, true);
      }
      case Tok::LParen: {
        next();
        GenPoly inner = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        next();
        return inner;
      }
      case Tok::End:
        fail("unexpected end of expression");
      default:
        fail("unexpected '" + std::string(t.text) + "'");
    }
  }

  GenPoly lookup(const Token& t, bool abs) const {
    const std::size_t n = vars_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (vars_[i] == t.text) {
        return GenPoly::monomial(n, 1.0, {Factor{static_cast<int>(i), 1.0, abs}});
      }
    }
    if (auto it = params_.find(std::string(t.text)); it != params_.end()) {
      return GenPoly::constant(n, abs ? std::fabs(it->second) : it->second);
    }
    throw ParseError("unknown identifier '" + std::string(t.text) + "'", 0, t.column);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::span<const std::string> vars_;
  const std::map<std::string, double>& params_;
};

// ---- system files ----

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t offset_in(std::string_view outer, std::string_view inner) {
  return static_cast<std::size_t>(inner.data() - outer.data());
}

bool valid_name(std::string_view s) {
  if (s.empty() || !is_name_start(s.front())) return false;
  for (char c : s) {
    if (!is_name_char(c)) return false;
  }
  return true;
}

struct RhsLine {
  std::string var;
  std::string text;
  std::size_t line;
  std::size_t column;
};

}  // namespace

GenPoly parse_expression(std::string_view text, std::span<const std::string> vars,
                         const std::map<std::string, double>& params) {
  return ExprParser(text, vars, params).parse();
}

SystemSpec parse_system(std::string_view text) {
  SystemSpec sys;
  std::vector<RhsLine> rhs_lines;
  bool have_vars = false;
  bool have_alpha = false;
  bool have_params = false;
  std::size_t vars_line = 0;
  std::size_t phase_line = 0;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    auto err = [&](const std::string& msg, std::string_view at) -> ParseError {
      return ParseError(msg, line_no, offset_in(raw, at) + 1);
    };

    if (line.starts_with("F[")) {
      const auto close = line.find(']');
      if (close == std::string_view::npos) throw err("expected ']'", line);
      std::string_view var = trim(line.substr(2, close - 2));
      std::string_view rest = trim(line.substr(close + 1));
      if (rest.empty() || rest.front() != '=') throw err("expected '=' after F[...]", line.substr(close));
      std::string_view expr = rest.substr(1);
      rhs_lines.push_back({std::string(var), std::string(expr), line_no, offset_in(raw, expr)});
      continue;
    }

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw err("expected 'key: value'", line);
    std::string_view key = trim(line.substr(0, colon));
    std::string_view value = trim(line.substr(colon + 1));

    if (key == "vars") {
      if (have_vars) throw err("duplicate 'vars' line", key);
      have_vars = true;
      vars_line = line_no;
      std::size_t i = 0;
      while (i < value.size()) {
        while (i < value.size() && std::isspace(static_cast<unsigned char>(value[i]))) ++i;
        std::size_t j = i;
        while (j < value.size() && !std::isspace(static_cast<unsigned char>(value[j]))) ++j;
        if (j == i) break;
        std::string_view name = value.substr(i, j - i);
        if (!valid_name(name)) throw err("invalid variable name '" + std::string(name) + "'", name);
        for (const auto& v : sys.var_names) {
          if (v == name) throw err("duplicate variable '" + std::string(name) + "'", name);
        }
        sys.var_names.emplace_back(name);
        i = j;
      }
      if (sys.var_names.empty()) throw err("no variables declared", line);
    } else if (key == "params") {
      if (have_params) throw err("duplicate 'params' line", key);
      have_params = true;
      std::size_t i = 0;
      while (i < value.size()) {
        while (i < value.size() && std::isspace(static_cast<unsigned char>(value[i]))) ++i;
        if (i >= value.size()) break;
        std::size_t j = i;
        while (j < value.size() && is_name_char(value[j])) ++j;
        std::string_view name = value.substr(i, j - i);
        if (!valid_name(name)) throw err("expected parameter name", value.substr(i));
        while (j < value.size() && value[j] == ' ') ++j;
        if (j >= value.size() || value[j] != '=') throw err("expected '=' after parameter name", value.substr(std::min(j, value.size())));
        ++j;
        while (j < value.size() && value[j] == ' ') ++j;
        std::size_t k = j;
        if (k < value.size() && (value[k] == '-' || value[k] == '+')) ++k;
        const std::size_t len = scan_number(value, k);
        if (len == 0) throw err("expected a real number", value.substr(j));
        auto v = to_double(value.substr(k, len));
        if (!v) throw err("malformed number", value.substr(j));
        if (value[j] == '-') *v = -*v;
        if (sys.params.count(std::string(name))) throw err("duplicate parameter '" + std::string(name) + "'", name);
        sys.params[std::string(name)] = *v;
        i = k + len;
        if (i < value.size() && !std::isspace(static_cast<unsigned char>(value[i]))) {
          throw err("unexpected text after parameter value", value.substr(i));
        }
      }
    } else if (key == "alpha") {
      if (have_alpha) throw err("duplicate 'alpha' line", key);
      have_alpha = true;
      auto v = to_double(value);
      if (!v || !(*v > 0.0)) throw err("alpha must be a positive real number", value.empty() ? line : value);
      sys.order = FracOrder(*v);
    } else if (key == "phase") {
      if (value != "qp") throw err("phase must be 'qp'", value.empty() ? line : value);
      sys.phase_split = true;
      phase_line = line_no;
    } else {
      throw err("unknown key '" + std::string(key) + "'", key);
    }
  }

  if (!have_vars) throw ParseError("missing 'vars' line", line_no, 1);
  for (const auto& v : sys.var_names) {
    if (sys.params.count(v)) throw ParseError("'" + v + "' is both a variable and a parameter", vars_line, 1);
  }

  sys.rhs.assign(sys.var_names.size(), GenPoly(sys.var_names.size()));
  sys.rhs_text.assign(sys.var_names.size(), std::string());
  std::vector<bool> seen(sys.var_names.size(), false);
  for (const auto& r : rhs_lines) {
    const int idx = sys.var_index(r.var);
    if (idx < 0) throw ParseError("F[" + r.var + "] names an undeclared variable", r.line, 1);
    if (seen[static_cast<std::size_t>(idx)]) throw ParseError("duplicate F[" + r.var + "]", r.line, 1);
    seen[static_cast<std::size_t>(idx)] = true;
    try {
      sys.rhs[static_cast<std::size_t>(idx)] = parse_expression(r.text, sys.var_names, sys.params);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), r.line, r.column + e.column());
    }
    sys.rhs_text[static_cast<std::size_t>(idx)] = std::string(trim(r.text));
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw ParseError("missing F[" + sys.var_names[i] + "]", vars_line, 1);
  }
  if (sys.phase_split && sys.var_names.size() % 2 != 0) {
    throw ParseError("phase: qp needs an even number of variables", phase_line, 1);
  }
  return sys;
}

}  // namespace fracdyn
