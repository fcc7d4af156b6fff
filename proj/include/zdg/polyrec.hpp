#ifndef ZDG_POLYREC_HPP
#define ZDG_POLYREC_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "zdg/count.hpp"

namespace zdg {

/// Polynomial with exact rational coefficients, descending degree, no
/// leading zeros. Evaluation at any integer point clears denominators.
struct RationalPoly {
    std::vector<mpq_class> coefficients;

    unsigned degree() const {
        return coefficients.empty() ? 0 : static_cast<unsigned>(coefficients.size() - 1);
    }

    /// Coefficients rendered as "num" or "num/den", descending degree.
    std::vector<std::string> coefficient_strings() const;

    bool operator==(const RationalPoly&) const = default;
};

/// Reconstruct q -> W(Gamma(M_n(GF(q)))) by exact interpolation through the
/// 2n^2+1 integer points q = 2 .. 2n^2+2. Requires n >= 2.
RationalPoly wiener_simple_polynomial(unsigned n);

/// Exact evaluation at integer q >= 2; throws internal_error if the value
/// is not an integer.
Count evaluate_polynomial(const RationalPoly& p, const Count& q);

} // namespace zdg

#endif // ZDG_POLYREC_HPP
