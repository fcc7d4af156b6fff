#include "zdg/count.hpp"

#include "zdg/errors.hpp"

namespace zdg {

Count ipow(std::uint64_t base, std::uint64_t exp) {
    Count r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

Count ipow(const Count& base, std::uint64_t exp) {
    Count r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Count exact_div(const Count& num, const Count& den) {
    if (den == 0) {
        throw internal_error("exact_div: zero divisor");
    }
    Count q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) {
        throw internal_error("exact_div: nonzero remainder " + r.get_str() + " for " +
                             num.get_str() + " / " + den.get_str());
    }
    return q;
}

Count halve_even(const Count& v) {
    if (mpz_odd_p(v.get_mpz_t())) {
        throw internal_error("halve_even: " + v.get_str() + " is odd");
    }
    return v / 2;
}

std::string to_decimal(const Count& v) {
    return v.get_str();
}

} // namespace zdg
