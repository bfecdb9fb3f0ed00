#include "unitpoly/base_solutions.hpp"

#include <algorithm>
#include <cstdint>

namespace unitpoly {

namespace {

Integer as_integer(const Integer& v) { return v; }
Integer as_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

// All triples whose smallest member is a. T is std::int64_t on the fast path
// and Integer otherwise; the arithmetic is identical.
template <class T>
void triples_for_a(const T& m, const T& n0, const T& a, std::vector<BaseTriple>& out) {
    const T p = m * a - n0;
    if (p <= 0) {
        return;
    }
    const T q = n0 * a;
    T b_lo = q / p + 1;
    if (b_lo < a) {
        b_lo = a;
    }
    const T b_hi = (2 * q) / p;
    for (T b = b_lo; b <= b_hi; ++b) {
        const T den = p * b - q;
        const T num = q * b;
        if (num % den == 0) {
            out.push_back({as_integer(a), as_integer(b), as_integer(T(num / den))});
        }
    }
}

struct ARange {
    Integer lo;
    Integer hi;
};

ARange a_range(const Integer& m, const Integer& n0) {
    return {Integer(n0 / m + 1), Integer((3 * n0) / m)};
}

// Products stay below 2*(n0*a)^2 <= 2*n0^4, which fits int64 for n0 < 2^14.
bool fits_fast_path(const Integer& m, const Integer& n0) {
    return n0 < (1 << 14) && m.fits_slong_p();
}

void check_pre(const Integer& m, const Integer& n0) {
    if (m < 1 || n0 < 1) {
        throw PreconditionError("enumerate_base_solutions: need m >= 1 and n0 >= 1");
    }
}

std::vector<BaseTriple> run(const Integer& m, const Integer& n0, bool parallel) {
    check_pre(m, n0);
    const ARange range = a_range(m, n0);
    if (range.hi < range.lo) {
        return {};
    }
    const Integer span = range.hi - range.lo + 1;
    const auto count = static_cast<std::int64_t>(span.get_si());
    std::vector<std::vector<BaseTriple>> per_a(static_cast<std::size_t>(count));
    const bool fast = fits_fast_path(m, n0);
    const std::int64_t m64 = fast ? m.get_si() : 0;
    const std::int64_t n064 = fast ? n0.get_si() : 0;
    const std::int64_t lo64 = fast ? range.lo.get_si() : 0;

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t i = 0; i < count; ++i) {
        auto& bucket = per_a[static_cast<std::size_t>(i)];
        if (fast) {
            triples_for_a<std::int64_t>(m64, n064, lo64 + i, bucket);
        } else {
            triples_for_a<Integer>(m, n0, Integer(range.lo + Integer(static_cast<long>(i))), bucket);
        }
    }

    std::vector<BaseTriple> out;
    for (auto& bucket : per_a) {
        out.insert(out.end(), std::make_move_iterator(bucket.begin()), std::make_move_iterator(bucket.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

BaseTriple make_base_triple(Integer x, Integer y, Integer z) {
    std::array<Integer, 3> v{std::move(x), std::move(y), std::move(z)};
    std::sort(v.begin(), v.end());
    return {v[0], v[1], v[2]};
}

bool solves_unit_equation(const Integer& m, const Integer& n0, const Integer& a, const Integer& b,
                          const Integer& c) {
    if (a <= 0 || b <= 0 || c <= 0 || n0 == 0) {
        return false;
    }
    return make_rational(1, a) + make_rational(1, b) + make_rational(1, c) == make_rational(m, n0);
}

std::vector<BaseTriple> enumerate_base_solutions(const Integer& m, const Integer& n0) {
    return run(m, n0, true);
}

namespace serial {

std::vector<BaseTriple> enumerate_base_solutions(const Integer& m, const Integer& n0) {
    return run(m, n0, false);
}

}  // namespace serial

std::vector<BaseTriple> triples_with_member(const Integer& m, const Integer& n0, const Integer& member) {
    check_pre(m, n0);
    if (member < 1) {
        throw PreconditionError("triples_with_member: member must be >= 1");
    }
    const Rational rest = make_rational(m, n0) - make_rational(1, member);
    if (rest <= 0) {
        return {};
    }
    // 1/u + 1/v = p/q with u <= v
    const Integer p = rest.get_num();
    const Integer q = rest.get_den();
    std::vector<BaseTriple> out;
    const Integer u_hi = (2 * q) / p;
    for (Integer u = q / p + 1; u <= u_hi; ++u) {
        const Integer den = p * u - q;
        const Integer num = q * u;
        if (num % den == 0) {
            out.push_back(make_base_triple(member, u, num / den));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::array<Integer, 3>> role_assignments(const BaseTriple& t) {
    std::array<Integer, 3> v{t.a, t.b, t.c};
    std::sort(v.begin(), v.end());
    std::vector<std::array<Integer, 3>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace unitpoly
