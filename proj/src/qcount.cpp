#include "zdg/qcount.hpp"

#include <string>

#include "zdg/errors.hpp"

namespace zdg {

namespace {

void check_q(std::uint64_t q) {
    if (q < 2) {
        throw invalid_parameter("field order must be at least 2, got " + std::to_string(q));
    }
}

void check_k(unsigned n, unsigned k) {
    if (k > n) {
        throw invalid_parameter("rank " + std::to_string(k) + " exceeds matrix size " +
                                std::to_string(n));
    }
}

} // namespace

Count gaussian_binomial(unsigned n, unsigned k, std::uint64_t q) {
    check_q(q);
    check_k(n, k);
    // Numerator multiplied out fully before the single exact division.
    Count qn = ipow(q, n);
    Count qk = ipow(q, k);
    Count num = 1, den = 1;
    for (unsigned j = 0; j < k; ++j) {
        Count qj = ipow(q, j);
        num *= qn - qj;
        den *= qk - qj;
    }
    return exact_div(num, den);
}

Count rank_count(unsigned n, std::uint64_t q, unsigned k) {
    check_q(q);
    check_k(n, k);
    Count qn = ipow(q, n);
    Count qk = ipow(q, k);
    Count num = 1, den = 1;
    for (unsigned j = 0; j < k; ++j) {
        Count qj = ipow(q, j);
        num *= (qn - qj) * (qn - qj);
        den *= qk - qj;
    }
    return exact_div(num, den);
}

Count gl_order(unsigned n, std::uint64_t q) {
    check_q(q);
    if (n < 1) {
        throw invalid_parameter("matrix size must be at least 1");
    }
    Count qn = ipow(q, n);
    Count r = 1;
    for (unsigned j = 0; j < n; ++j) {
        r *= qn - ipow(q, j);
    }
    return r;
}

Count zero_divisor_count(unsigned n, std::uint64_t q) {
    check_q(q);
    if (n < 1) {
        throw invalid_parameter("matrix size must be at least 1");
    }
    return ipow(q, std::uint64_t(n) * n) - gl_order(n, q);
}

Count squarezero_rank_count(unsigned n, std::uint64_t q, unsigned k) {
    check_q(q);
    check_k(n, k);
    if (2u * k > n) {
        return 0; // the factor q^n - q^n vanishes in the numerator
    }
    Count qn = ipow(q, n);
    Count qk = ipow(q, k);
    Count num = 1;
    for (unsigned j = 0; j < 2 * k; ++j) {
        num *= qn - ipow(q, j);
    }
    Count den = ipow(q, std::uint64_t(k) * k);
    for (unsigned j = 0; j < k; ++j) {
        den *= qk - ipow(q, j);
    }
    return exact_div(num, den);
}

} // namespace zdg
