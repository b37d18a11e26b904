#pragma once

#include <string>

#include "pcf/poly.hpp"

namespace pcf {

// Parses "x^3 - 6x + 6", "2x^3+1/2x-7", "x^3+x^2+2*x+1", ...
// Integer or rational coefficients, caret powers, optional '*'.
Poly parse_poly(const std::string& text);

} // namespace pcf
