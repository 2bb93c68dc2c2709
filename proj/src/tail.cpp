#include "linkctr/tail.hpp"

#include <algorithm>
#include <cmath>

#include "linkctr/errors.hpp"

namespace linkctr {

std::vector<std::pair<double, double>> ccdf(std::span<const double> values) {
    if (values.empty()) throw argument_error("ccdf needs at least one value");

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    const double n = static_cast<double>(sorted.size());
    std::vector<std::pair<double, double>> out;
    // walk distinct values from the top; P(X >= x) = #{samples >= x} / n
    std::size_t i = sorted.size();
    while (i > 0) {
        const double x = sorted[i - 1];
        std::size_t j = i;
        while (j > 0 && sorted[j - 1] == x) --j;
        out.emplace_back(x, static_cast<double>(sorted.size() - j) / n);
        i = j;
    }
    return out;
}

double tail_exponent(std::span<const double> values, double xmin) {
    if (!(xmin > 0.0)) throw argument_error("tail_exponent needs xmin > 0");

    std::size_t n = 0;
    double log_sum = 0.0;
    for (double x : values) {
        if (x >= xmin) {
            ++n;
            log_sum += std::log(x / xmin);
        }
    }
    if (n < 10)
        throw argument_error("tail_exponent needs at least 10 samples >= xmin");
    if (log_sum <= 0.0)
        throw argument_error("tail samples are all equal to xmin; exponent undefined");
    return 1.0 + static_cast<double>(n) / log_sum;
}

} // namespace linkctr
