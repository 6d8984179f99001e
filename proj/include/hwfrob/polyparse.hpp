#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hwfrob/frobenius.hpp"

namespace hwfrob {

/// Expression text together with the declared variables and the modulus.
struct PolySource {
  std::string text;
  std::vector<std::string> variables;
  std::uint32_t p = 0;
};

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

namespace detail {

/// expr    = term { ("+" | "-") term }
/// term    = unary { ["*"] unary }
/// unary   = ("-" | "+") unary | power
/// power   = primary [ "^" integer ]
/// primary = integer | identifier | "(" expr ")"
class PolyParser {
 public:
  PolyParser(std::string_view text, const PolyRing& ring, const std::vector<std::string>& names)
      : s_(text), ring_(ring), names_(names) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    Polynomial f = expr();
    skip_space();
    if (!at_end()) {
      if (peek() == ')') throw ParseError("unbalanced ')'", pos_);
      throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    }
    return f;
  }

 private:
  static constexpr int kMaxDepth = 200;
  static constexpr std::uint64_t kMaxExponent = 65535;

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool starts_factor() const {
    if (at_end()) return false;
    const unsigned char c = static_cast<unsigned char>(peek());
    return std::isdigit(c) || std::isalpha(c) || c == '(';
  }

  Polynomial expr() {
    if (++depth_ > kMaxDepth) throw ParseError("expression nested too deeply", pos_);
    Polynomial f = term();
    while (true) {
      skip_space();
      if (at_end() || (peek() != '+' && peek() != '-')) break;
      const char op = peek();
      ++pos_;
      Polynomial g = term();
      f = op == '+' ? poly_add(f, g) : poly_sub(f, g);
    }
    --depth_;
    return f;
  }

  Polynomial term() {
    Polynomial f = unary();
    while (true) {
      skip_space();
      if (at_end()) break;
      if (peek() == '*') {
        ++pos_;
      } else if (!starts_factor()) {
        break;
      }
      Polynomial g = unary();
      check_degree(f.degree() + g.degree());
      f = poly_mul(f, g);
    }
    return f;
  }

  Polynomial unary() {
    skip_space();
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      const char op = peek();
      ++pos_;
      if (++depth_ > kMaxDepth) throw ParseError("expression nested too deeply", pos_);
      Polynomial f = unary();
      --depth_;
      return op == '-' ? poly_neg(f) : f;
    }
    return power();
  }

  Polynomial power() {
    Polynomial f = primary();
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("malformed exponent: expected a nonnegative integer", at);
      }
      std::uint64_t e = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + static_cast<std::uint64_t>(peek() - '0');
        if (e > kMaxExponent) throw ParseError("exponent too large", at);
        ++pos_;
      }
      if (f.degree() > 0) check_degree(static_cast<std::int64_t>(e) * f.degree(), at);
      f = poly_pow(f, e);
    }
    return f;
  }

  Polynomial primary() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of expression", pos_);
    const unsigned char c = static_cast<unsigned char>(peek());
    if (std::isdigit(c)) {
      const PrimeField& F = ring_.field;
      std::uint32_t v = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        v = F.add(F.mul(v, F.reduce(10)), F.reduce(peek() - '0'));
        ++pos_;
      }
      return Polynomial::constant(ring_, v);
    }
    if (std::isalpha(c)) {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return Polynomial::variable(ring_, static_cast<int>(i));
      }
      throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      Polynomial f = expr();
      skip_space();
      if (at_end() || peek() != ')') throw ParseError("unbalanced '(': missing ')'", open);
      ++pos_;
      return f;
    }
    if (c == ')') throw ParseError("unbalanced ')'", pos_);
    throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", pos_);
  }

  void check_degree(std::int64_t d, std::optional<std::size_t> at = std::nullopt) const {
    if (d > static_cast<std::int64_t>(kMaxExponent)) throw ParseError("degree too large", at.value_or(pos_));
  }

  std::string_view s_;
  const PolyRing& ring_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

inline void check_variables(const std::vector<std::string>& names) {
  if (names.empty()) throw InputError("no variables declared");
  if (static_cast<int>(names.size()) > kMaxVars) {
    throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw InputError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
  }
}

}  // namespace detail

inline Polynomial parse_poly(std::string_view text, const PolyRing& ring, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != ring.nvars) throw UsageError("parse_poly: variable count does not match the ring");
  detail::check_variables(names);
  return detail::PolyParser(text, ring, names).parse();
}

inline Polynomial parse_poly(const PolySource& src) {
  if (!is_prime(src.p)) throw InputError("p must be prime");
  detail::check_variables(src.variables);
  const PolyRing ring(PrimeField(src.p), static_cast<int>(src.variables.size()));
  return parse_poly(src.text, ring, src.variables);
}

/// Monomial as "X0^2*X1"; the empty product is "1".
inline std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const int e = m.exp[i];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

/// Canonical text with centered coefficients; parse_poly reads it back.
inline std::string format_poly(const Polynomial& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  const PrimeField& F = f.ring().field;
  std::string out;
  for (const auto& t : f.terms()) {
    const std::int64_t c = F.centered(t.coeff);
    const std::uint64_t mag = static_cast<std::uint64_t>(c < 0 ? -c : c);
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (t.mono.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += format_monomial(t.mono, names);
    }
  }
  return out;
}

/// Reads the problem file: `key = value` lines, `#` comments, keys p, vars,
/// q (integer or "auto"), algorithm, order, resolution and one `poly` line
/// per generator. A given `p_override` replaces the file's p.
inline ProblemSpec parse_problem(std::string_view text, std::optional<std::uint64_t> p_override = std::nullopt) {
  std::optional<std::string> p_text, vars_text, q_text, algorithm_text, order_text, resolution_text;
  std::vector<std::pair<int, std::string>> polys;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    auto set_once = [&](std::optional<std::string>& slot) {
      if (slot) throw InputError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
      slot = value;
    };
    if (key == "poly") polys.emplace_back(lineno, value);
    else if (key == "p") set_once(p_text);
    else if (key == "vars") set_once(vars_text);
    else if (key == "q") set_once(q_text);
    else if (key == "algorithm") set_once(algorithm_text);
    else if (key == "order") set_once(order_text);
    else if (key == "resolution") set_once(resolution_text);
    else throw InputError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  if (!p_text) throw InputError("missing key 'p'");
  if (!vars_text) throw InputError("missing key 'vars'");
  if (!q_text) throw InputError("missing key 'q'");
  if (polys.empty()) throw InputError("missing key 'poly'");

  std::uint64_t p = 0;
  if (p_text->empty() || p_text->size() > 12) throw InputError("p must be a positive integer");
  for (char c : *p_text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("p must be a positive integer");
    p = p * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (p_override) p = *p_override;
  if (!is_prime(p)) throw InputError("p must be prime");
  if (p > PrimeField::kMaxModulus) throw InputError("p exceeds the supported bound 2^31-1");

  std::vector<std::string> names;
  {
    std::string v = *vars_text;
    for (char& c : v) {
      if (c == ',') c = ' ';
    }
    std::istringstream vs(v);
    for (std::string n; vs >> n;) names.push_back(n);
  }
  detail::check_variables(names);
  if (names.size() < 3) throw InputError("at least three variables are required (r >= 2)");

  ProblemSpec spec;
  spec.ring = PolyRing(PrimeField(static_cast<std::uint32_t>(p)), static_cast<int>(names.size()));
  spec.var_names = names;
  spec.order = MonomialOrder::grevlex(spec.ring.nvars);
  if (order_text) {
    if (*order_text == "grevlex") spec.order = MonomialOrder::grevlex(spec.ring.nvars);
    else if (*order_text == "lex") spec.order = MonomialOrder::lex(spec.ring.nvars);
    else throw InputError("order must be grevlex or lex");
  }
  if (algorithm_text) {
    if (*algorithm_text == "auto") spec.algorithm = AlgorithmChoice::automatic;
    else if (*algorithm_text == "general") spec.algorithm = AlgorithmChoice::general;
    else if (*algorithm_text == "ci") spec.algorithm = AlgorithmChoice::complete_intersection;
    else throw InputError("algorithm must be auto, general or ci");
  }
  if (resolution_text) {
    if (*resolution_text == "frame") spec.shape = ResolutionShape::schreyer_frame;
    else if (*resolution_text == "minimal") spec.shape = ResolutionShape::minimal;
    else throw InputError("resolution must be frame or minimal");
  }

  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto& [ln, src] = polys[i];
    Polynomial f(spec.ring);
    try {
      f = parse_poly(src, spec.ring, names);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(ln) + ": " + e.message(), e.position());
    }
    if (f.is_zero()) throw InputError("line " + std::to_string(ln) + ": generator " + std::to_string(i + 1) + " is zero");
    const int d = f.degree();
    for (const auto& t : f.terms()) {
      if (t.mono.degree() != d) {
        throw InputError("line " + std::to_string(ln) + ": generator " + std::to_string(i + 1) +
                         " is not homogeneous: term '" + format_monomial(t.mono, names) + "' has degree " +
                         std::to_string(t.mono.degree()) + ", expected " + std::to_string(d));
      }
    }
    spec.generators.push_back(std::move(f));
  }

  if (*q_text == "auto") {
    const int k = krull_dimension(spec.generators);
    if (k <= 0) throw InputError("q = auto: the generators define the empty projective scheme");
    spec.q = k - 1;
  } else {
    const std::string& s = *q_text;
    if (s.empty() || s.size() > 3) throw InputError("q must be a positive integer or auto");
    int q = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("q must be a positive integer or auto");
      q = q * 10 + (c - '0');
    }
    spec.q = q;
  }
  validate_spec(spec);
  return spec;
}

}  // namespace hwfrob
