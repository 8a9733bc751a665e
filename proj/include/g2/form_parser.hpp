#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "g2/form.hpp"

namespace g2 {

class FormParseError : public std::invalid_argument {
 public:
  FormParseError(std::size_t offset, std::string expected);
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Parses literals such as "e123 + e145 - 3/2 e167" or "2*e12 - e34".
/// A bare rational is a 0-form term. All terms must share one degree.
Form<Rational> parse_form(std::string_view text);

/// Same, but also requires the given degree.
Form<Rational> parse_form(std::string_view text, int degree);

}  // namespace g2
