#pragma once

#include <string_view>
#include <vector>

#include "composita/series.hpp"

namespace composita {

/// Exact truncation of a named series, generated on demand:
///   x       x                          (exponential)
///   exp     e^x                        (exponential)
///   expm1   e^x - 1                    (exponential)
///   sin     sin x                      (exponential)
///   artanh  artanh x                   (exponential)
///   poly3   x + x^2/2 + x^3/6          (exponential)
///   geom    1/(1-x)                    (ordinary)
/// Throws std::invalid_argument for an unknown name or negative order.
Series builtin_series(std::string_view name, int order);

std::vector<std::string_view> builtin_series_names();

/// EGF coefficient of sin x: 0 for even n, (-1)^((n-1)/2) for odd n.
Integer sin_egf_coefficient(int n);

}  // namespace composita
