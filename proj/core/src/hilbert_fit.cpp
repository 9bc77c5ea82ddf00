#include "sallylab/hilbert_fit.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace sally {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

std::int64_t binomial(std::int64_t n, int k) {
    if (k < 0 || n < 0 || n < k) return 0;
    k = std::min<std::int64_t>(k, n - k);
    std::int64_t acc = 1;
    for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return acc;
}

std::int64_t eval_binomial_form(const std::vector<std::int64_t>& coeffs, std::int64_t n) {
    const int d = static_cast<int>(coeffs.size()) - 1;
    std::int64_t acc = 0;
    for (int i = 0; i <= d; ++i) {
        std::int64_t term = coeffs[i] * binomial(n + d - i, d - i);
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

std::vector<std::int64_t> fit_binomial_tail(const std::vector<std::int64_t>& table, int first_n,
                                            int d) {
    if (d < 0) throw error("fit degree must be non-negative");
    const int need = d + 3;
    if (static_cast<int>(table.size()) < need)
        throw computation_error("table too short for a certified polynomial fit");

    const std::size_t lo = table.size() - static_cast<std::size_t>(d + 1);
    std::vector<std::vector<cpp_rational>> M(d + 1, std::vector<cpp_rational>(d + 2));
    for (int r = 0; r <= d; ++r) {
        const std::int64_t n = first_n + static_cast<std::int64_t>(lo) + r;
        for (int i = 0; i <= d; ++i) {
            std::int64_t b = binomial(n + d - i, d - i);
            M[r][i] = (i % 2 == 0) ? b : -b;
        }
        M[r][d + 1] = table[lo + r];
    }

    // Exact Gaussian elimination.
    for (int col = 0; col <= d; ++col) {
        int pivot = -1;
        for (int r = col; r <= d; ++r)
            if (M[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw computation_error("singular system in polynomial fit");
        std::swap(M[col], M[pivot]);
        for (int r = 0; r <= d; ++r) {
            if (r == col || M[r][col] == 0) continue;
            cpp_rational factor = M[r][col] / M[col][col];
            for (int c = col; c <= d + 1; ++c) M[r][c] -= factor * M[col][c];
        }
    }

    std::vector<std::int64_t> coeffs(d + 1);
    for (int i = 0; i <= d; ++i) {
        cpp_rational v = M[i][d + 1] / M[i][i];
        if (denominator(v) != 1)
            throw computation_error("polynomial fit produced non-integer coefficients");
        cpp_int num = numerator(v);
        coeffs[i] = static_cast<std::int64_t>(num);
    }

    for (std::size_t k = table.size() - need; k < table.size(); ++k) {
        if (eval_binomial_form(coeffs, first_n + static_cast<std::int64_t>(k)) != table[k])
            throw computation_error("no stable polynomial tail in the table");
    }
    return coeffs;
}

}  // namespace sally
