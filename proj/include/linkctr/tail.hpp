#pragma once

#include <span>
#include <utility>
#include <vector>

namespace linkctr {

// Complementary CDF over the distinct sample values, largest x first:
// (x, P(X >= x)). Probabilities are non-decreasing along the list.
std::vector<std::pair<double, double>> ccdf(std::span<const double> values);

// Continuous maximum-likelihood (Hill) tail exponent
//   alpha = 1 + n / sum(ln(x_i / xmin))  over samples >= xmin.
// Needs xmin > 0 and at least 10 tail samples.
double tail_exponent(std::span<const double> values, double xmin);

} // namespace linkctr
