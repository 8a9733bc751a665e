#include "g2/form_parser.hpp"

#include <cctype>
#include <optional>

namespace g2 {

FormParseError::FormParseError(std::size_t offset, std::string expected)
    : std::invalid_argument("form literal: expected " + expected + " at offset " + std::to_string(offset)),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Form<Rational> run() {
    skip_ws();
    if (at_end()) throw FormParseError(pos_, "term");
    std::optional<Form<Rational>> out;
    bool first = true;
    while (true) {
      int sign = 1;
      skip_ws();
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw FormParseError(pos_, "'+' or '-'");
      }
      const std::size_t term_start = pos_;
      auto [coeff, index] = term();
      if (!out) {
        out.emplace(index.degree());
      } else if (index.degree() != out->degree()) {
        throw FormParseError(term_start, "term of degree " + std::to_string(out->degree()));
      }
      out->add(index, sign > 0 ? coeff : Rational(-coeff));
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return *out;
  }

 private:
  std::pair<Rational, MultiIndex> term() {
    Rational coeff(1);
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'e') throw FormParseError(pos_, "basis form 'e<digits>'");
      }
    }
    if (!at_end() && peek() == 'e') return {coeff, basis()};
    if (have_coeff) return {coeff, MultiIndex{}};
    throw FormParseError(pos_, "coefficient or basis form 'e<digits>'");
  }

  Rational rational() {
    const std::size_t start = pos_;
    integer();
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw FormParseError(pos_, "denominator digits");
      integer();
      std::string_view lit = s_.substr(start, pos_ - start);
      if (lit.substr(lit.find('/') + 1).find_first_not_of('0') == std::string_view::npos)
        throw FormParseError(start, "nonzero denominator");
    }
    return parse_rational(s_.substr(start, pos_ - start));
  }

  void integer() {
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
  }

  MultiIndex basis() {
    ++pos_;  // 'e'
    const std::size_t start = pos_;
    std::uint8_t mask = 0;
    int prev = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const int l = peek() - '0';
      if (l < 1 || l > kDim) throw FormParseError(pos_, "frame label 1..7");
      if (l <= prev) throw FormParseError(pos_, "strictly increasing frame labels");
      mask |= static_cast<std::uint8_t>(1u << (l - 1));
      prev = l;
      ++pos_;
    }
    if (pos_ == start) throw FormParseError(pos_, "frame label 1..7");
    return MultiIndex::from_mask(mask);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Form<Rational> parse_form(std::string_view text) { return Parser(text).run(); }

Form<Rational> parse_form(std::string_view text, int degree) {
  Form<Rational> f = parse_form(text);
  if (f.degree() != degree) throw FormParseError(0, "form of degree " + std::to_string(degree));
  return f;
}

}  // namespace g2
