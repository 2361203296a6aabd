#include "polar/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "polar/errors.hpp"

namespace polar {
namespace {

class Parser {
public:
  Parser(std::string_view text, int nvars, PrimeField field, std::size_t line,
         std::size_t column_offset = 0)
      : text_(text), nvars_(nvars), field_(field), line_(line), offset_(column_offset) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    terms.push_back(term(negate));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return Polynomial::from_terms(field_, nvars_, std::move(terms));
  }

private:
  Term term(bool negate) {
    skip_ws();
    Fq coeff = field_.one();
    std::array<unsigned, kMaxVars> exps{};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = integer();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        factor(exps);
        star_factors(exps);
      }
    } else if (peek() == 'x') {
      factor(exps);
      star_factors(exps);
    } else {
      fail(at_end() ? "unexpected end of input, expected a term" : "expected a term");
    }
    if (negate) coeff = field_.neg(coeff);
    return Term{Monomial(std::span<const unsigned>(exps.data(), exps.size())), coeff};
  }

  void star_factors(std::array<unsigned, kMaxVars>& exps) {
    for (;;) {
      skip_ws();
      if (peek() != '*') return;
      ++pos_;
      factor(exps);
    }
  }

  void factor(std::array<unsigned, kMaxVars>& exps) {
    skip_ws();
    if (peek() != 'x') fail("expected variable 'x<index>'");
    std::size_t start = pos_;
    ++pos_;
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
    std::uint64_t index = natural(kMaxVars + 1);
    if (index < 1 || index > static_cast<std::uint64_t>(nvars_)) {
      fail_at(start, "variable index x" + std::to_string(index) + " outside 1.." +
                         std::to_string(nvars_));
    }
    std::uint64_t e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      std::size_t estart = pos_;
      e = natural(Monomial::kMaxExponent + 1);
      if (e > Monomial::kMaxExponent) fail_at(estart, "exponent overflow");
    }
    std::uint64_t total = exps[index - 1] + e;
    if (total > Monomial::kMaxExponent) fail_at(start, "exponent overflow");
    exps[index - 1] = static_cast<unsigned>(total);
  }

  // Reads digits, saturating at `cap`.
  std::uint64_t natural(std::uint64_t cap) {
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = std::min<std::uint64_t>(cap, v * 10 + static_cast<std::uint64_t>(peek() - '0'));
      ++pos_;
    }
    return v;
  }

  Fq integer() {
    const std::uint64_t q = field_.modulus();
    unsigned __int128 v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = (v * 10 + static_cast<unsigned>(peek() - '0')) % q;
      ++pos_;
    }
    return Fq{static_cast<std::uint64_t>(v)};
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw ParseError(msg, line_, offset_ + pos + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int nvars_;
  PrimeField field_;
  std::size_t line_;
  std::size_t offset_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, int nvars, PrimeField field,
                            std::size_t line) {
  if (nvars < 0 || nvars > kMaxVars) throw StructuralError("ambient variable count must be in [0, 16]");
  return Parser(text, nvars, field, line).parse();
}

PolynomialSystem parse_system(std::string_view text, PrimeField field) {
  struct Line {
    std::string_view body;
    std::size_t number;
    std::size_t offset;  // column offset of body within the raw line
  };
  std::vector<Line> lines;
  std::optional<int> declared;
  std::size_t number = 0;
  bool seen_content = false;
  while (!text.empty()) {
    ++number;
    std::size_t nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    std::string_view body = raw.substr(0, raw.find('#'));
    std::size_t lead = 0;
    while (lead < body.size() && std::isspace(static_cast<unsigned char>(body[lead]))) ++lead;
    body = trim(body);
    if (body.empty()) continue;
    if (!seen_content && body.substr(0, 5) == "vars:") {
      std::string_view count = trim(body.substr(5));
      int n = 0;
      if (count.empty() || count.size() > 2 ||
          !std::all_of(count.begin(), count.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("malformed 'vars:' declaration", number, lead + 1);
      }
      for (char c : count) n = n * 10 + (c - '0');
      if (n < 1 || n > kMaxVars) throw ParseError("'vars:' must be in 1..16", number, lead + 1);
      declared = n;
      seen_content = true;
      continue;
    }
    seen_content = true;
    lines.push_back({body, number, lead});
  }

  PolynomialSystem sys;
  const int parse_n = declared.value_or(kMaxVars);
  std::vector<Polynomial> parsed;
  int max_index = 0;
  for (const Line& l : lines) {
    Polynomial f = Parser(l.body, parse_n, field, l.number, l.offset).parse();
    for (const Term& t : f.terms()) max_index = std::max(max_index, t.mono.used_slots());
    parsed.push_back(std::move(f));
  }
  sys.nvars = declared.value_or(std::max(1, max_index));
  for (Polynomial& f : parsed) {
    // Re-home into the final ambient count.
    std::vector<Term> terms(f.terms().begin(), f.terms().end());
    sys.polys.push_back(Polynomial::adopt_canonical(field, sys.nvars, std::move(terms)));
  }
  return sys;
}

Point parse_point(std::string_view text, PrimeField field) {
  Point x;
  std::size_t col = 0;
  while (true) {
    std::size_t comma = text.find(',', col);
    std::string_view item = trim(text.substr(col, comma == std::string_view::npos ? text.npos : comma - col));
    if (item.empty()) throw ParseError("empty coordinate", 1, col + 1);
    bool neg = false;
    std::size_t k = 0;
    if (item[0] == '-' || item[0] == '+') {
      neg = item[0] == '-';
      k = 1;
    }
    if (k >= item.size()) throw ParseError("expected integer coordinate", 1, col + 1);
    unsigned __int128 v = 0;
    for (; k < item.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(item[k]))) {
        throw ParseError("expected integer coordinate", 1, col + 1);
      }
      v = (v * 10 + static_cast<unsigned>(item[k] - '0')) % field.modulus();
    }
    Fq c{static_cast<std::uint64_t>(v)};
    x.push_back(neg ? field.neg(c) : c);
    if (comma == std::string_view::npos) break;
    col = comma + 1;
  }
  return x;
}

}  // namespace polar
