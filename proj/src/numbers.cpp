#include "likepowers/numbers.hpp"

#include <cctype>
#include <stdexcept>

namespace likepowers {

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("not an integer: '" + text + "'");
    }
  }
  // GMP rejects a leading '+'.
  return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

}  // namespace likepowers
