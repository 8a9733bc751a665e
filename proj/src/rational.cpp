#include "g2/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace g2 {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') ++i;
  const auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  std::size_t end = digits(i);
  if (end == i) throw bad();
  if (end < text.size()) {
    if (text[end] != '/') throw bad();
    const std::size_t den_end = digits(end + 1);
    if (den_end == end + 1 || den_end != text.size()) throw bad();
  }
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw bad();
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace g2
