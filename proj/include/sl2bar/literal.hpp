#pragma once

#include <string>
#include <string_view>

#include "sl2bar/closure.hpp"
#include "sl2bar/field.hpp"
#include "sl2bar/mat2.hpp"

namespace sl2bar {

// Element literal: 0x<hex>@<n>, e.g. 0x2@2 is g at level 2.
// Matrix literal: [[e,e],[e,e]] with e an element literal; whitespace allowed.
// Parse failures throw ParseError naming the offending token.

std::string to_string(FieldElt a);
std::string to_string(const ClosureElt& a);
std::string to_string(const Mat2& m);

FieldElt parse_field_elt(std::string_view text);
ClosureElt parse_closure_elt(std::string_view text);
Mat2 parse_mat2(std::string_view text);

}  // namespace sl2bar
