#include <cwf/ancestry.hpp>

#include <stdexcept>
#include <utility>

namespace cwf {

namespace {

// Value comparisons read off the canonical coefficients directly:
// [p0,...] > v  iff  p0 > v, or p0 = v with a nonempty tail.
bool cf_exceeds_v(const std::vector<BigInt>& p, std::int64_t v) {
    return p[0] > v || (p[0] == v && p.size() >= 2);
}

// [0,p1,...] < 1/u  iff  p1 > u, or p1 = u with s >= 2.  ([0,u] is exactly
// 1/u, which sits inside the orphan interval.)
bool cf_below_orphan_interval(const std::vector<BigInt>& p, std::int64_t u) {
    return p[0] == 0 && (p[1] > u || (p[1] == u && p.size() >= 3));
}

}  // namespace

bool is_orphan(const Rational& w, const UVParams& params) {
    if (!w.is_positive()) {
        throw std::domain_error("orphan test requires a positive value");
    }
    // 1/u <= a/b <= v, both ends closed.
    return w.den() <= params.u * w.num() && w.num() <= params.v * w.den();
}

std::pair<Rational, AncestorTrace> orphan_ancestor(const Rational& w,
                                                   const UVParams& params) {
    AncestorTrace trace;
    ContinuedFraction cf = to_cf(w);
    Rational current = w;
    while (true) {
        const auto& p = cf.coeffs();
        Move undone;
        std::vector<BigInt> next;
        if (cf_exceeds_v(p, params.v)) {
            // Undo a right move: [p0-v, p1, ..., ps].
            undone = Move::right;
            next = p;
            next[0] -= params.v;
        } else if (cf_below_orphan_interval(p, params.u)) {
            // Undo a left move, inverting the two left-child cases.
            undone = Move::left;
            if (p[1] > params.u) {
                next = p;
                next[1] -= params.u;
            } else {
                // p1 = u with a tail: drop the leading [0,u] pair.
                next.assign(p.begin() + 2, p.end());
            }
        } else {
            break;  // 1/u <= value <= v
        }
        cf = ContinuedFraction::normalized(std::move(next));
        current = from_cf(cf);
        trace.chain.emplace_back(current, cf, undone);
    }
    return {current, std::move(trace)};
}

bool is_descendant(const Rational& wprime, const Rational& w,
                   const UVParams& params) {
    const std::vector<BigInt> p = to_cf(wprime).coeffs();
    const std::vector<BigInt> q = to_cf(w).coeffs();
    const std::size_t s = p.size() - 1;
    const std::size_t r = q.size() - 1;

    // (a) s >= r with s-r even.
    if (s < r || (s - r) % 2 != 0) {
        return false;
    }
    const std::size_t shift = s - r;

    // (b) leading coefficients divisible by v (even index) / u (odd index).
    for (std::size_t j = 0; j < shift; ++j) {
        const std::int64_t divisor = (j % 2 == 0) ? params.v : params.u;
        if (p[j] % divisor != 0) {
            return false;
        }
    }

    // (c) exact match beyond the seam.
    for (std::size_t i = 2; i <= r; ++i) {
        if (p[shift + i] != q[i]) {
            return false;
        }
    }

    // (d) the seam itself.
    if (q[0] != 0) {
        if (p[shift] < q[0] || (p[shift] - q[0]) % params.v != 0) {
            return false;
        }
        if (r >= 1 && p[shift + 1] != q[1]) {
            return false;
        }
    } else {
        // q0 = 0 forces r >= 1.
        if (p[shift] % params.v != 0) {
            return false;
        }
        if (p[shift + 1] < q[1] || (p[shift + 1] - q[1]) % params.u != 0) {
            return false;
        }
    }
    return true;
}

bool is_strict_descendant(const Rational& wprime, const Rational& w,
                          const UVParams& params) {
    return wprime != w && is_descendant(wprime, w, params);
}

ExponentVector exponent_vector_raw(const ContinuedFraction& wprime,
                                   const ContinuedFraction& w,
                                   const UVParams& params) {
    const auto& p = wprime.coeffs();
    const auto& q = w.coeffs();
    if (p.size() < q.size() || (p.size() - q.size()) % 2 != 0) {
        throw std::domain_error(
            "coefficient vectors violate the descendant conditions");
    }
    const std::size_t shift = p.size() - q.size();
    ExponentVector exps;
    exps.reserve(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        BigInt diff = p[j];
        if (j >= shift) {
            diff -= q[j - shift];
        }
        if (diff < 0) {
            throw std::domain_error(
                "coefficient difference is negative; not a descendant");
        }
        const std::int64_t divisor = (j % 2 == 0) ? params.v : params.u;
        if (diff % divisor != 0) {
            throw std::domain_error(
                "coefficient difference not divisible by " +
                std::to_string(divisor) + "; not a descendant");
        }
        exps.push_back(diff / divisor);
    }
    return exps;
}

BigInt depth_of(const Rational& wprime, const Rational& w,
                const UVParams& params) {
    if (!is_descendant(wprime, w, params)) {
        throw std::domain_error("not a descendant");
    }
    BigInt depth = 0;
    for (const BigInt& e :
         exponent_vector_raw(to_cf(wprime), to_cf(w), params)) {
        depth += e;
    }
    return depth;
}

PathResult path_between(const Rational& wprime, const Rational& w,
                        const UVParams& params) {
    if (!is_descendant(wprime, w, params)) {
        throw std::domain_error("not a descendant");
    }
    ExponentVector exps =
        exponent_vector_raw(to_cf(wprime), to_cf(w), params);
    // Even-indexed exponents are R_v-runs, odd-indexed L_u-runs, reading
    // the operator word left to right; the move order reverses that.
    PathWord word;
    for (std::size_t j = exps.size(); j-- > 0;) {
        word.append(j % 2 == 0 ? Move::right : Move::left, exps[j]);
    }
    return {std::move(word), std::move(exps)};
}

}  // namespace cwf
