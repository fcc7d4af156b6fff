#include "zdg/ffield.hpp"

#include <algorithm>
#include <string>

#include "zdg/errors.hpp"

namespace zdg {

namespace {

using Poly = std::vector<std::uint32_t>; // coefficients in [0,p), lowest degree first

void check_code(FieldElem a, const FieldSpec& f, const char* where) {
    if (a >= f.q) {
        throw invalid_parameter(std::string(where) + ": element code " + std::to_string(a) +
                                " outside GF(" + std::to_string(f.q) + ")");
    }
}

Poly decode(FieldElem a, std::uint32_t p, unsigned m) {
    Poly c(m, 0);
    for (unsigned i = 0; i < m; ++i) {
        c[i] = a % p;
        a /= p;
    }
    return c;
}

FieldElem encode(const Poly& c, std::uint32_t p, unsigned m) {
    std::uint64_t code = 0;
    for (unsigned i = m; i-- > 0;) {
        code = code * p + (i < c.size() ? c[i] : 0);
    }
    return static_cast<FieldElem>(code);
}

// Product of two residues reduced by the monic modulus.
FieldElem mul_general(FieldElem a, FieldElem b, const FieldSpec& f) {
    if (f.m == 1) {
        return static_cast<FieldElem>((std::uint64_t(a) * b) % f.p);
    }
    const std::uint32_t p = f.p;
    const unsigned m = f.m;
    Poly ca = decode(a, p, m), cb = decode(b, p, m);
    std::vector<std::uint64_t> prod(2 * m - 1, 0);
    for (unsigned i = 0; i < m; ++i) {
        if (ca[i] == 0) continue;
        for (unsigned j = 0; j < m; ++j) {
            prod[i + j] += std::uint64_t(ca[i]) * cb[j];
        }
    }
    for (auto& c : prod) c %= p;
    // Reduce: x^m == -(modulus coefficients below degree m).
    for (unsigned d = 2 * m - 2; d >= m; --d) {
        std::uint64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (unsigned j = 0; j < m; ++j) {
            std::uint64_t sub = (c * f.modulus[j]) % p;
            prod[d - m + j] = (prod[d - m + j] + p - sub) % p;
        }
    }
    Poly out(m);
    for (unsigned i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return encode(out, p, m);
}

FieldElem add_general(FieldElem a, FieldElem b, const FieldSpec& f) {
    if (f.m == 1) {
        std::uint64_t s = std::uint64_t(a) + b;
        if (s >= f.p) s -= f.p;
        return static_cast<FieldElem>(s);
    }
    Poly ca = decode(a, f.p, f.m), cb = decode(b, f.p, f.m);
    for (unsigned i = 0; i < f.m; ++i) {
        ca[i] += cb[i];
        if (ca[i] >= f.p) ca[i] -= f.p;
    }
    return encode(ca, f.p, f.m);
}

FieldElem neg_general(FieldElem a, const FieldSpec& f) {
    if (f.m == 1) {
        return a == 0 ? 0 : static_cast<FieldElem>(f.p - a);
    }
    Poly c = decode(a, f.p, f.m);
    for (auto& ci : c) ci = ci == 0 ? 0 : f.p - ci;
    return encode(c, f.p, f.m);
}

FieldElem pow_general(FieldElem a, std::uint64_t e, const FieldSpec& f) {
    FieldElem r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul_general(r, base, f);
        base = mul_general(base, base, f);
        e >>= 1;
    }
    return r;
}

// Evaluate a monic degree-m polynomial (coeffs low-first, implicit leading 1)
// at point x over GF(p).
std::uint32_t eval_monic(const Poly& coeffs, unsigned m, std::uint32_t x, std::uint32_t p) {
    std::uint64_t acc = 1; // leading coefficient
    for (unsigned i = m; i-- > 0;) {
        acc = (acc * x + coeffs[i]) % p;
    }
    return static_cast<std::uint32_t>(acc);
}

// Remainder of the monic candidate (degree m) modulo a monic divisor of
// degree d given by low-first coefficients with implicit leading 1.
bool divides_monic(const Poly& divisor, unsigned d, const Poly& candidate, unsigned m,
                   std::uint32_t p) {
    std::vector<std::uint64_t> rem(m + 1, 0);
    for (unsigned i = 0; i < m; ++i) rem[i] = candidate[i];
    rem[m] = 1;
    for (unsigned deg = m; deg >= d; --deg) {
        std::uint64_t lead = rem[deg];
        if (lead == 0) continue;
        rem[deg] = 0;
        for (unsigned j = 0; j < d; ++j) {
            std::uint64_t sub = (lead * divisor[j]) % p;
            rem[deg - d + j] = (rem[deg - d + j] + p - sub) % p;
        }
        if (deg == 0) break;
    }
    return std::all_of(rem.begin(), rem.end(), [](std::uint64_t c) { return c == 0; });
}

// Irreducibility by trial division with every monic polynomial of degree
// 1 .. m/2. Degree-1 divisors are root checks.
bool is_irreducible(const Poly& candidate, unsigned m, std::uint32_t p) {
    if (candidate[0] == 0) return false; // divisible by x
    for (std::uint32_t r = 0; r < p; ++r) {
        if (eval_monic(candidate, m, r, p) == 0) return false;
    }
    for (unsigned d = 2; d <= m / 2; ++d) {
        // Odometer over the d low coefficients of a monic degree-d divisor.
        Poly div(d, 0);
        while (true) {
            if (divides_monic(div, d, candidate, m, p)) return false;
            unsigned i = 0;
            while (i < d && ++div[i] == p) div[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

void build_tables(FieldSpec& f) {
    const std::size_t q = static_cast<std::size_t>(f.q);
    f.add_table.resize(q * q);
    f.mul_table.resize(q * q);
    f.neg_table.resize(q);
    f.inv_table.resize(q, 0);
    for (std::size_t a = 0; a < q; ++a) {
        f.neg_table[a] = neg_general(static_cast<FieldElem>(a), f);
        for (std::size_t b = 0; b < q; ++b) {
            f.add_table[a * q + b] =
                add_general(static_cast<FieldElem>(a), static_cast<FieldElem>(b), f);
            f.mul_table[a * q + b] =
                mul_general(static_cast<FieldElem>(a), static_cast<FieldElem>(b), f);
        }
    }
    for (std::size_t a = 1; a < q; ++a) {
        f.inv_table[a] = pow_general(static_cast<FieldElem>(a), f.q - 2, f);
    }
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

bool prime_power(std::uint64_t q, std::uint64_t& p, unsigned& m) {
    if (q < 2) return false;
    std::uint64_t base = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            base = d;
            break;
        }
    }
    std::uint64_t v = q;
    unsigned e = 0;
    while (v % base == 0) {
        v /= base;
        ++e;
    }
    if (v != 1) return false;
    p = base;
    m = e;
    return true;
}

FieldSpec field_build(std::uint64_t p, unsigned m) {
    if (!is_prime(p)) {
        throw invalid_parameter(std::to_string(p) + " is not prime");
    }
    if (m < 1) {
        throw invalid_parameter("extension degree must be at least 1");
    }
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > kFieldOrderLimit) {
            throw resource_limit("field order " + std::to_string(p) + "^" + std::to_string(m) +
                                 " exceeds limit " + std::to_string(kFieldOrderLimit));
        }
    }
    FieldSpec f;
    f.p = static_cast<std::uint32_t>(p);
    f.m = m;
    f.q = q;
    if (m > 1) {
        // Lexicographic search over low coefficients, c0 compared first.
        Poly c(m, 0);
        bool found = false;
        std::uint64_t total = 1;
        for (unsigned i = 0; i < m; ++i) total *= p;
        for (std::uint64_t t = 0; t < total; ++t) {
            std::uint64_t v = t;
            for (unsigned i = 0; i < m; ++i) { // c0 varies slowest
                c[m - 1 - i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (is_irreducible(c, m, f.p)) {
                found = true;
                break;
            }
        }
        if (!found) {
            throw internal_error("no irreducible polynomial found for GF(" + std::to_string(p) +
                                 "^" + std::to_string(m) + ")");
        }
        f.modulus = c;
        f.modulus.push_back(1); // monic leading coefficient
    }
    if (f.q <= kFieldTableLimit) {
        build_tables(f);
    }
    return f;
}

FieldElem field_add(FieldElem a, FieldElem b, const FieldSpec& f) {
    check_code(a, f, "field_add");
    check_code(b, f, "field_add");
    if (f.has_tables()) return f.add_table[std::size_t(a) * f.q + b];
    return add_general(a, b, f);
}

FieldElem field_neg(FieldElem a, const FieldSpec& f) {
    check_code(a, f, "field_neg");
    if (f.has_tables()) return f.neg_table[a];
    return neg_general(a, f);
}

FieldElem field_sub(FieldElem a, FieldElem b, const FieldSpec& f) {
    return field_add(a, field_neg(b, f), f);
}

FieldElem field_mul(FieldElem a, FieldElem b, const FieldSpec& f) {
    check_code(a, f, "field_mul");
    check_code(b, f, "field_mul");
    if (f.has_tables()) return f.mul_table[std::size_t(a) * f.q + b];
    return mul_general(a, b, f);
}

FieldElem field_pow(FieldElem a, std::uint64_t e, const FieldSpec& f) {
    check_code(a, f, "field_pow");
    if (f.has_tables()) {
        FieldElem r = 1, base = a;
        while (e > 0) {
            if (e & 1) r = f.mul_table[std::size_t(r) * f.q + base];
            base = f.mul_table[std::size_t(base) * f.q + base];
            e >>= 1;
        }
        return r;
    }
    return pow_general(a, e, f);
}

FieldElem field_inv(FieldElem a, const FieldSpec& f) {
    check_code(a, f, "field_inv");
    if (a == 0) {
        throw divide_by_zero("field_inv: zero has no inverse");
    }
    if (f.has_tables()) return f.inv_table[a];
    return pow_general(a, f.q - 2, f);
}

} // namespace zdg
