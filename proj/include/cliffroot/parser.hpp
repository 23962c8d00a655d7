#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cliffroot/algebra.hpp"

namespace cliffroot {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Grammar: term (("+"|"-") term)*, term := [coef]["*"][blade],
// coef := decimal | int "/" int, blade := "e"[1-6]+ | "1".
// The Unicode minus sign is accepted; whitespace is ignored.
Multivector parse_mv(std::string_view text, Signature sig);

// Canonical blade order, zero terms omitted, "0" for the zero multivector.
std::string format_mv(const Multivector &a, int precision = 17);

} // namespace cliffroot
