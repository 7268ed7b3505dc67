#pragma once

#include <string>
#include <string_view>

namespace ktrans {

/// Shortest decimal that round-trips to the same double (CSV/JSON fields).
std::string format_shortest(double v);

/// Fixed significant-digit formatting (OBJ uses 17).
std::string format_digits(double v, int digits);

/// Strict full-string parse; throws IoError on trailing characters or overflow.
double parse_double(std::string_view text);

} // namespace ktrans
