#pragma once

#include <string>
#include <string_view>

#include "petit/skew_poly.hpp"

namespace petit {

/// Parse a polynomial expression in t over the extension's element grammar:
/// integers, rationals via '/', the finite generator 'g', the imaginary unit
/// 'i' (Gaussian base), 'sqrt(b)', and + - * / ^ ( ). Errors carry the
/// offending column.
SkewPoly parse_skew_poly(const GaloisExtension& ext, std::string_view text);

/// Parse an element literal (a degree-0 polynomial expression).
FieldElement parse_field_element(const GaloisExtension& ext, std::string_view text);

/// Parse a base-field literal for quadratic extensions ("-1/12", "1+2*i").
Gaussian parse_gaussian(std::string_view text, bool allow_imaginary = true);

}  // namespace petit
