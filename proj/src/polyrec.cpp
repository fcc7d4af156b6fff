#include "zdg/polyrec.hpp"

#include "zdg/errors.hpp"
#include "zdg/formulas.hpp"

namespace zdg {

std::vector<std::string> RationalPoly::coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(coefficients.size());
    for (const auto& c : coefficients) {
        out.push_back(c.get_str());
    }
    return out;
}

RationalPoly wiener_simple_polynomial(unsigned n) {
    if (n < 2) {
        throw invalid_parameter("wiener_simple_polynomial: matrix size must be at least 2");
    }
    const unsigned points = 2 * n * n + 1; // degree bound 2n^2
    std::vector<mpq_class> xs(points), ys(points);
    for (unsigned i = 0; i < points; ++i) {
        std::uint64_t q = 2 + i;
        xs[i] = mpq_class(static_cast<unsigned long>(q));
        ys[i] = mpq_class(wiener_simple(n, q));
    }

    // Lagrange: accumulate y_i * prod_{j != i} (x - x_j) / (x_i - x_j),
    // ascending-degree scratch, flipped at the end.
    std::vector<mpq_class> acc(points, mpq_class(0));
    std::vector<mpq_class> basis;
    basis.reserve(points);
    for (unsigned i = 0; i < points; ++i) {
        basis.assign(1, mpq_class(1));
        mpq_class denom(1);
        for (unsigned j = 0; j < points; ++j) {
            if (j == i) continue;
            basis.push_back(0);
            for (std::size_t d = basis.size() - 1; d > 0; --d) {
                basis[d] = basis[d - 1] - xs[j] * basis[d];
            }
            basis[0] = -xs[j] * basis[0];
            denom *= xs[i] - xs[j];
        }
        mpq_class scale = ys[i] / denom;
        for (std::size_t d = 0; d < basis.size(); ++d) {
            acc[d] += scale * basis[d];
        }
    }

    while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
    RationalPoly poly;
    poly.coefficients.assign(acc.rbegin(), acc.rend());
    for (auto& c : poly.coefficients) c.canonicalize();
    return poly;
}

Count evaluate_polynomial(const RationalPoly& p, const Count& q) {
    if (q < 2) {
        throw invalid_parameter("evaluate_polynomial: point must be an integer >= 2");
    }
    if (p.coefficients.empty()) {
        return 0;
    }
    mpq_class value(0);
    mpq_class point(q);
    for (const auto& c : p.coefficients) {
        value = value * point + c;
    }
    value.canonicalize();
    if (value.get_den() != 1) {
        throw internal_error("evaluate_polynomial: non-integer value " + value.get_str() +
                             " at q = " + q.get_str());
    }
    return value.get_num();
}

} // namespace zdg
