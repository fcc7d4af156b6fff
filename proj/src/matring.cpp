#include "zdg/matring.hpp"

#include <algorithm>
#include <cctype>

#include "zdg/errors.hpp"
#include "zdg/qcount.hpp"

namespace zdg {

bool Matrix::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](FieldElem e) { return e == 0; });
}

Matrix mat_zero(unsigned n) {
    Matrix a;
    a.n = n;
    a.entries.assign(std::size_t(n) * n, 0);
    return a;
}

Matrix mat_identity(unsigned n) {
    Matrix a = mat_zero(n);
    for (unsigned i = 0; i < n; ++i) a.at(i, i) = 1;
    return a;
}

Matrix mat_unit(unsigned n, unsigned i, unsigned j) {
    if (i >= n || j >= n) {
        throw invalid_parameter("mat_unit: index outside matrix");
    }
    Matrix a = mat_zero(n);
    a.at(i, j) = 1;
    return a;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, const FieldSpec& f) {
    if (a.n != b.n) {
        throw invalid_parameter("mat_mul: size mismatch");
    }
    const unsigned n = a.n;
    Matrix c = mat_zero(n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned k = 0; k < n; ++k) {
            FieldElem aik = a.at(i, k);
            if (aik == 0) continue;
            for (unsigned j = 0; j < n; ++j) {
                c.at(i, j) = field_add(c.at(i, j), field_mul(aik, b.at(k, j), f), f);
            }
        }
    }
    return c;
}

namespace {

// Shared elimination core: returns rank of a scratch copy.
unsigned rank_of(std::vector<FieldElem> w, unsigned n, const FieldSpec& f) {
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < n; ++col) {
        unsigned pivot = n;
        for (unsigned row = rank; row < n; ++row) {
            if (w[std::size_t(row) * n + col] != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot == n) continue;
        if (pivot != rank) {
            for (unsigned j = col; j < n; ++j) {
                std::swap(w[std::size_t(pivot) * n + j], w[std::size_t(rank) * n + j]);
            }
        }
        FieldElem inv = field_inv(w[std::size_t(rank) * n + col], f);
        for (unsigned row = rank + 1; row < n; ++row) {
            FieldElem factor = field_mul(w[std::size_t(row) * n + col], inv, f);
            if (factor == 0) continue;
            for (unsigned j = col; j < n; ++j) {
                FieldElem sub = field_mul(factor, w[std::size_t(rank) * n + j], f);
                w[std::size_t(row) * n + j] = field_sub(w[std::size_t(row) * n + j], sub, f);
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace

unsigned mat_rank(const Matrix& a, const FieldSpec& f) {
    return rank_of(a.entries, a.n, f);
}

bool mat_square_is_zero(const Matrix& a, const FieldSpec& f) {
    const unsigned n = a.n;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            FieldElem acc = 0;
            for (unsigned k = 0; k < n; ++k) {
                acc = field_add(acc, field_mul(a.at(i, k), a.at(k, j), f), f);
            }
            if (acc != 0) return false;
        }
    }
    return true;
}

Count RingSpec::order() const {
    Count r = 1;
    for (const auto& fac : factors) {
        r *= ipow(fac.field.q, std::uint64_t(fac.n) * fac.n);
    }
    return r;
}

Count RingSpec::unit_count() const {
    Count r = 1;
    for (const auto& fac : factors) {
        r *= gl_order(fac.n, fac.field.q);
    }
    return r;
}

Count RingSpec::zero_divisor_count() const {
    return order() - unit_count();
}

Count RingSpec::vertex_count() const {
    return zero_divisor_count() - 1;
}

std::uint64_t RingSpec::order_within(const Budget& budget) const {
    Count ord = order();
    if (ord > Count(budget.max_ring_order)) {
        throw resource_limit("ring order " + ord.get_str() + " exceeds enumeration budget " +
                             std::to_string(budget.max_ring_order));
    }
    return mpz_get_ui(ord.get_mpz_t());
}

namespace {

std::string factor_string(const RingFactor& fac) {
    return "M" + std::to_string(fac.n) + "(" + std::to_string(fac.field.q) + ")";
}

} // namespace

std::string RingSpec::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) s += "x";
        s += factor_string(factors[i]);
    }
    return s;
}

std::string RingSpec::canonical_key() const {
    std::vector<std::pair<unsigned, std::uint64_t>> keys;
    keys.reserve(factors.size());
    for (const auto& fac : factors) keys.emplace_back(fac.n, fac.field.q);
    std::sort(keys.begin(), keys.end());
    std::string s;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i > 0) s += "x";
        s += "M" + std::to_string(keys[i].first) + "(" + std::to_string(keys[i].second) + ")";
    }
    return s;
}

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    static constexpr std::size_t kMaxFactors = 32;

    RingSpec parse() {
        RingSpec r;
        r.factors.push_back(parse_factor(r.factors.size() + 1));
        while (pos_ < text_.size()) {
            if (text_[pos_] != 'x') {
                fail("expected 'x' between factors");
            }
            ++pos_;
            if (r.factors.size() == kMaxFactors) {
                throw resource_limit("ring specs are limited to " + std::to_string(kMaxFactors) +
                                     " factors");
            }
            r.factors.push_back(parse_factor(r.factors.size() + 1));
        }
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos_); }

    std::uint64_t parse_int(const char* what) {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail(std::string("expected ") + what);
        }
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > (std::uint64_t(1) << 40)) {
                fail(std::string(what) + " out of range");
            }
            ++pos_;
        }
        return v;
    }

    RingFactor parse_factor(std::size_t ordinal) {
        if (pos_ >= text_.size() || text_[pos_] != 'M') {
            fail("expected 'M'");
        }
        ++pos_;
        std::uint64_t n = parse_int("matrix size");
        if (n < 1) fail("matrix size must be at least 1");
        if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
        ++pos_;
        std::uint64_t first = parse_int("field order");
        std::uint64_t p = 0;
        unsigned m = 0;
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            std::uint64_t e = parse_int("exponent");
            if (!is_prime(first)) {
                throw invalid_parameter("factor " + std::to_string(ordinal) + ": " +
                                        std::to_string(first) + " is not prime");
            }
            if (e < 1 || e > 64) fail("exponent out of range");
            p = first;
            m = static_cast<unsigned>(e);
        } else {
            if (!prime_power(first, p, m)) {
                throw invalid_parameter("factor " + std::to_string(ordinal) + ": " +
                                        std::to_string(first) + " is not a prime power");
            }
        }
        if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
        ++pos_;
        RingFactor fac;
        fac.n = static_cast<unsigned>(n);
        fac.field = field_build(p, m);
        return fac;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

RingSpec parse_ring_spec(std::string_view text) {
    return SpecParser(text).parse();
}

bool ring_is_zero(const RingElem& x) {
    return std::all_of(x.parts.begin(), x.parts.end(), [](const Matrix& m) { return m.is_zero(); });
}

RingElem ring_zero(const RingSpec& r) {
    RingElem x;
    x.parts.reserve(r.factors.size());
    for (const auto& fac : r.factors) x.parts.push_back(mat_zero(fac.n));
    return x;
}

namespace {

void check_shape(const RingElem& x, const RingSpec& r, const char* where) {
    if (x.parts.size() != r.factors.size()) {
        throw invalid_parameter(std::string(where) + ": element has " +
                                std::to_string(x.parts.size()) + " parts, ring has " +
                                std::to_string(r.factors.size()) + " factors");
    }
    for (std::size_t i = 0; i < x.parts.size(); ++i) {
        if (x.parts[i].n != r.factors[i].n) {
            throw invalid_parameter(std::string(where) + ": part " + std::to_string(i + 1) +
                                    " has wrong size");
        }
    }
}

} // namespace

RingElem ring_mul(const RingElem& x, const RingElem& y, const RingSpec& r) {
    check_shape(x, r, "ring_mul");
    check_shape(y, r, "ring_mul");
    RingElem z;
    z.parts.reserve(r.factors.size());
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        z.parts.push_back(mat_mul(x.parts[i], y.parts[i], r.factors[i].field));
    }
    return z;
}

bool ring_product_is_zero(const RingElem& x, const RingElem& y, const RingSpec& r) {
    for (std::size_t t = 0; t < r.factors.size(); ++t) {
        const Matrix& a = x.parts[t];
        const Matrix& b = y.parts[t];
        const FieldSpec& f = r.factors[t].field;
        const unsigned n = a.n;
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = 0; j < n; ++j) {
                FieldElem acc = 0;
                for (unsigned k = 0; k < n; ++k) {
                    acc = field_add(acc, field_mul(a.at(i, k), b.at(k, j), f), f);
                }
                if (acc != 0) return false;
            }
        }
    }
    return true;
}

ElementKind classify_element(const RingElem& x, const RingSpec& r) {
    check_shape(x, r, "classify_element");
    bool all_zero = true;
    bool all_full = true;
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        unsigned k = mat_rank(x.parts[i], r.factors[i].field);
        if (k != 0) all_zero = false;
        if (k != r.factors[i].n) all_full = false;
    }
    if (all_zero) return ElementKind::zero;
    if (all_full) return ElementKind::unit;
    return ElementKind::zero_divisor;
}

std::string VertexClass::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(ks[i]);
    }
    s += squarezero ? "|sq" : "|nsq";
    return s;
}

VertexClass rank_profile(const RingElem& x, const RingSpec& r) {
    check_shape(x, r, "rank_profile");
    VertexClass c;
    c.ks.reserve(r.factors.size());
    c.squarezero = true;
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        c.ks.push_back(mat_rank(x.parts[i], r.factors[i].field));
        if (c.squarezero && !mat_square_is_zero(x.parts[i], r.factors[i].field)) {
            c.squarezero = false;
        }
    }
    return c;
}

RingElem element_from_index(std::uint64_t i, const RingSpec& r) {
    Count ord = r.order();
    if (Count(i) >= ord) {
        throw invalid_parameter("element index " + std::to_string(i) + " outside ring of order " +
                                ord.get_str());
    }
    RingElem x = ring_zero(r);
    std::uint64_t rest = i;
    for (std::size_t t = 0; t < r.factors.size(); ++t) {
        const std::uint64_t q = r.factors[t].field.q;
        for (auto& e : x.parts[t].entries) {
            e = static_cast<FieldElem>(rest % q);
            rest /= q;
        }
    }
    return x;
}

std::uint64_t element_index(const RingElem& x, const RingSpec& r) {
    check_shape(x, r, "element_index");
    Count idx = 0;
    for (std::size_t t = r.factors.size(); t-- > 0;) {
        const std::uint64_t q = r.factors[t].field.q;
        const auto& entries = x.parts[t].entries;
        for (std::size_t j = entries.size(); j-- > 0;) {
            if (entries[j] >= q) {
                throw invalid_parameter("element_index: entry code outside field");
            }
            idx = idx * q + entries[j];
        }
    }
    if (!idx.fits_ulong_p()) {
        throw resource_limit("element index " + idx.get_str() + " does not fit in 64 bits");
    }
    return mpz_get_ui(idx.get_mpz_t());
}

AnnCensus annihilator_census(const RingElem& x, const RingSpec& r, const Budget& budget) {
    check_shape(x, r, "annihilator_census");
    std::uint64_t left = 0, right = 0, both = 0;
    for (ElementEnumerator it(r, budget); it.valid(); it.next()) {
        bool l = ring_product_is_zero(it.current(), x, r);
        bool rr = ring_product_is_zero(x, it.current(), r);
        left += l;
        right += rr;
        both += l && rr;
    }
    return AnnCensus{Count(left), Count(right), Count(both)};
}

ElementEnumerator::ElementEnumerator(const RingSpec& r, const Budget& budget)
    : ring_(r), order_(r.order_within(budget)), elem_(ring_zero(r)) {}

void ElementEnumerator::next() {
    ++index_;
    if (!valid()) return;
    // Odometer increment in codec order: factor-major, entries row-major,
    // first entry least significant.
    for (std::size_t t = 0; t < ring_.factors.size(); ++t) {
        const std::uint64_t q = ring_.factors[t].field.q;
        for (auto& e : elem_.parts[t].entries) {
            if (++e < q) return;
            e = 0;
        }
    }
}

} // namespace zdg
