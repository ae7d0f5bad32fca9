#ifndef FOLEX_PARSE_HPP
#define FOLEX_PARSE_HPP

#include <stdexcept>
#include <string>

#include "folex/forms.hpp"

namespace folex {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  size_t position() const { return pos_; }

 private:
  size_t pos_;
};

// Grammar shared by the CLI and serializations: rational coefficients like
// `3/2`, variables `x0`, differentials `dx0`, operators `+ - * ^`,
// parentheses. `^` is exponentiation after a polynomial atom and the wedge
// between form factors. n_vars < 0 infers the count from the largest index.
DiffForm parse_form(const std::string& text, int n_vars = -1);
Poly parse_poly(const std::string& text, int n_vars = -1);

// Throws when the coefficients are not homogeneous of one degree.
DiffForm parse_form_homogeneous(const std::string& text, int n_vars = -1);

}  // namespace folex

#endif
