#include "zdg/formulas.hpp"

#include <algorithm>
#include <string>

#include "zdg/errors.hpp"
#include "zdg/qcount.hpp"

namespace zdg {

namespace {

void check_class(const RingSpec& r, const VertexClass& c, const char* where) {
    if (c.ks.size() != r.factors.size()) {
        throw invalid_parameter(std::string(where) + ": class has " +
                                std::to_string(c.ks.size()) + " ranks, ring has " +
                                std::to_string(r.factors.size()) + " factors");
    }
    for (std::size_t i = 0; i < c.ks.size(); ++i) {
        if (c.ks[i] > r.factors[i].n) {
            throw invalid_parameter(std::string(where) + ": rank exceeds matrix size");
        }
        if (c.squarezero && 2 * c.ks[i] > r.factors[i].n) {
            throw invalid_parameter(std::string(where) +
                                    ": square-zero class with rank above n/2 cannot occur");
        }
    }
}

} // namespace

Count ann_size_simple(unsigned n, std::uint64_t q, unsigned k) {
    if (k < 1 || k > n) {
        throw invalid_parameter("ann_size_simple: rank must be in [1, n]");
    }
    unsigned d = n - k;
    return 2 * ipow(q, std::uint64_t(n) * d) - ipow(q, std::uint64_t(d) * d);
}

AnnCensus annihilator_sizes(unsigned n, std::uint64_t q, unsigned k) {
    if (k > n) {
        throw invalid_parameter("annihilator_sizes: rank exceeds matrix size");
    }
    unsigned d = n - k;
    Count side = ipow(q, std::uint64_t(n) * d);
    return AnnCensus{side, side, ipow(q, std::uint64_t(d) * d)};
}

Count degree_formula(const RingSpec& r, const VertexClass& c) {
    check_class(r, c, "degree_formula");
    if (std::all_of(c.ks.begin(), c.ks.end(), [](unsigned k) { return k == 0; })) {
        throw invalid_parameter("degree_formula: class of the zero element");
    }
    Count outer = 1, inner = 1;
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        const std::uint64_t q = r.factors[i].field.q;
        const unsigned d = r.factors[i].n - c.ks[i];
        outer *= ipow(q, std::uint64_t(d) * d);
        inner *= ipow(q, std::uint64_t(c.ks[i]) * d);
    }
    Count eps = c.squarezero ? 2 : 1;
    return outer * (2 * inner - 1) - eps;
}

Count wiener_simple(unsigned n, std::uint64_t q) {
    if (n < 2) {
        throw invalid_parameter("wiener_simple: matrix size must be at least 2");
    }
    if (q < 2) {
        throw invalid_parameter("wiener_simple: field order must be at least 2");
    }
    const Count z = zero_divisor_count(n, q);
    Count doubled = 2 * z * z - 5 * z + 3;
    const Count qn = ipow(q, n);
    for (unsigned k = 1; k < n; ++k) {
        Count gb = gaussian_binomial(n, k, q);
        Count sq_part = 1, full_part = 1;
        const Count qnk = ipow(q, n - k);
        for (unsigned j = 0; j < k; ++j) {
            Count qj = ipow(q, j);
            sq_part *= qnk - qj;
            full_part *= qn - qj;
        }
        doubled += gb * (sq_part - ann_size_simple(n, q, k) * full_part);
    }
    return halve_even(doubled);
}

Count wiener_complexity_simple(unsigned n) {
    if (n < 2) {
        throw invalid_parameter("wiener_complexity_simple: matrix size must be at least 2");
    }
    return Count(2) * (n - 1);
}

Count transmission_simple(unsigned n, std::uint64_t q, unsigned k, bool squarezero) {
    if (k < 1 || k > n - 1) {
        throw invalid_parameter("transmission_simple: rank must be in [1, n-1]");
    }
    if (squarezero && 2 * k > n) {
        throw invalid_parameter("transmission_simple: square-zero class with rank above n/2");
    }
    Count eps = squarezero ? 2 : 1;
    Count degree = ann_size_simple(n, q, k) - eps;
    return 2 * (zero_divisor_count(n, q) - 2) - degree;
}

Count t_value(const RingSpec& r) {
    const std::size_t l = r.factors.size();
    std::vector<Count> zd(l), units(l);
    for (std::size_t i = 0; i < l; ++i) {
        zd[i] = zero_divisor_count(r.factors[i].n, r.factors[i].field.q);
        units[i] = gl_order(r.factors[i].n, r.factors[i].field.q);
    }
    Count total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << l); ++mask) {
        unsigned size = static_cast<unsigned>(__builtin_popcountll(mask));
        if (size < 2) continue;
        Count term = ipow(2, size) - 2;
        for (std::size_t i = 0; i < l; ++i) {
            term *= (mask >> i) & 1 ? zd[i] : units[i];
        }
        total += term;
    }
    return total;
}

Count d3_pair_count(const RingSpec& r) {
    const std::size_t l = r.factors.size();
    Count factor = t_value(r) - ipow(2, l) + 2;
    return factor * r.unit_count();
}

Count n2_count(const RingSpec& r) {
    Count prod = 1;
    for (const auto& fac : r.factors) {
        Count sum = 0;
        for (unsigned k = 0; k < fac.n; ++k) {
            sum += squarezero_rank_count(fac.n, fac.field.q, k);
        }
        prod *= sum;
    }
    return prod - 1;
}

Count s_value(const RingSpec& r) {
    Count with = 1, without = 1;
    for (const auto& fac : r.factors) {
        with *= fac.n + 1;
        without *= fac.n;
    }
    return with - without;
}

WienerResult wiener_semisimple(const RingSpec& r) {
    const std::size_t l = r.factors.size();
    const Count ring_order = r.order();
    const Count units = r.unit_count();
    const Count z = ring_order - units;

    const Count t = t_value(r);
    const Count d3 = (t - ipow(2, l) + 2) * units;

    // Sum over the full rank-tuple lattice of
    //   (#elements with that profile) * (degree + epsilon)
    // where degree + epsilon = prod q^((n-k)^2) * (2 prod q^(k(n-k)) - 1).
    Count lattice = 0;
    std::vector<unsigned> ks(l, 0);
    while (true) {
        Count rc = 1, outer = 1, inner = 1;
        for (std::size_t i = 0; i < l; ++i) {
            const std::uint64_t q = r.factors[i].field.q;
            const unsigned n = r.factors[i].n;
            const unsigned d = n - ks[i];
            rc *= rank_count(n, q, ks[i]);
            outer *= ipow(q, std::uint64_t(d) * d);
            inner *= ipow(q, std::uint64_t(ks[i]) * d);
        }
        lattice += rc * outer * (2 * inner - 1);
        std::size_t i = 0;
        while (i < l && ++ks[i] > r.factors[i].n) ks[i++] = 0;
        if (i == l) break;
    }

    const Count n2 = n2_count(r);

    Count doubled = 2 * z * z - 5 * z + 3 + d3 - lattice + ring_order + units + n2;
    WienerResult res;
    res.wiener = halve_even(doubled);
    res.zero_divisors = z;
    res.d3 = d3;
    res.n2 = n2;
    res.t_value = t;
    // Distance-1 pairs: the lattice sum minus the zero element, the units,
    // the vertex count, and the square-zero correction.
    res.d1 = lattice - ring_order - units - (z - 1) - n2;
    const Count v = z - 1;
    res.d2 = v * (v - 1) - res.d1 - res.d3;
    if (res.d1 < 0 || res.d2 < 0 || res.d3 < 0) {
        throw internal_error("wiener_semisimple: negative pair count for " + r.to_string());
    }
    if (2 * res.wiener != res.d1 + 2 * res.d2 + 3 * res.d3) {
        throw internal_error("wiener_semisimple: pair counts disagree with Wiener value for " +
                             r.to_string());
    }
    return res;
}

Count complexity_upper_bound(const RingSpec& r) {
    Count prod_n = 1, prod_n1 = 1;
    for (const auto& fac : r.factors) {
        prod_n *= fac.n;
        prod_n1 *= fac.n + 1;
    }
    return prod_n + prod_n1 - 3;
}

Count class_size_formula(const RingSpec& r, const VertexClass& c) {
    if (c.ks.size() != r.factors.size()) {
        throw invalid_parameter("class_size_formula: rank tuple length mismatch");
    }
    Count sq = 1, all = 1;
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        if (c.ks[i] > r.factors[i].n) {
            throw invalid_parameter("class_size_formula: rank exceeds matrix size");
        }
        all *= rank_count(r.factors[i].n, r.factors[i].field.q, c.ks[i]);
        sq *= squarezero_rank_count(r.factors[i].n, r.factors[i].field.q, c.ks[i]);
    }
    if (c.squarezero) {
        bool zero_class = std::all_of(c.ks.begin(), c.ks.end(), [](unsigned k) { return k == 0; });
        return zero_class ? Count(0) : sq; // the zero element is not a vertex
    }
    return all - sq;
}

} // namespace zdg
