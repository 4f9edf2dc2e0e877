#pragma once

#include <cwf/contfrac.hpp>
#include <cwf/params.hpp>
#include <cwf/rational.hpp>
#include <cwf/word.hpp>

#include <utility>
#include <vector>

namespace cwf {

/// True iff 1/u <= w <= v (closed interval): w is the child of no vertex
/// and roots its own tree in the (u,v)-forest.
bool is_orphan(const Rational& w, const UVParams& params);

/// One undone move on the way from a vertex to its orphan root.
struct TraceStep {
    Rational value;
    ContinuedFraction cf;
    /// The child move that was undone to reach this value.
    Move undone;

    TraceStep(Rational value_, ContinuedFraction cf_, Move undone_)
        : value(std::move(value_)), cf(std::move(cf_)), undone(undone_) {}
};

/// Ancestor chain from the query vertex's parent down to and including the
/// orphan root.  Empty when the query itself is an orphan; its length is
/// the query's depth below the root.
struct AncestorTrace {
    std::vector<TraceStep> chain;
};

/// The unique orphan whose tree contains w, with the full parent chain.
///
/// Implemented as iterated continued-fraction parent steps: subtract v from
/// q0 while the value exceeds v; when the value is below 1/u (so q0 = 0),
/// subtract u from q1, dropping the leading [0,u] pair when q1 = u and the
/// tail is nonempty.  Terminates because num+den strictly decreases.
std::pair<Rational, AncestorTrace> orphan_ancestor(const Rational& w,
                                                   const UVParams& params);

/// Decides descent purely on the canonical continued fractions
/// wprime = [p0..ps] and w = [q0..qr]: s-r must be even and nonnegative,
/// the leading s-r coefficients of wprime must be divisible by v (even
/// index) or u (odd index), the trailing coefficients must match q2..qr,
/// and at the seam p_{s-r}, p_{s-r+1} must extend q0, q1 by multiples of v
/// resp. u as the q0 = 0 case demands.  Descent is weak: every w is a
/// descendant of itself.
bool is_descendant(const Rational& wprime, const Rational& w,
                   const UVParams& params);

/// Same, excluding wprime == w.
bool is_strict_descendant(const Rational& wprime, const Rational& w,
                          const UVParams& params);

/// Run lengths of the alternating operator word from an ancestor to a
/// descendant: entries at even index count R_v-runs, odd index L_u-runs,
/// leading term indexed 0.  Their sum is the depth of the descendant below
/// the ancestor.
using ExponentVector = std::vector<BigInt>;

/// The coefficient-difference procedure: pad w's coefficients with leading
/// zeros to wprime's length, subtract componentwise, then divide entries at
/// even index by v and at odd index by u.  Throws std::domain_error when a
/// difference is negative or a division is inexact (i.e. the descendant
/// conditions fail).
ExponentVector exponent_vector_raw(const ContinuedFraction& wprime,
                                   const ContinuedFraction& w,
                                   const UVParams& params);

/// Number of edges from w down to wprime, by the coefficient-difference
/// formula.  Throws std::domain_error if wprime is not a descendant of w.
BigInt depth_of(const Rational& wprime, const Rational& w,
                const UVParams& params);

struct PathResult {
    /// Moves from w to wprime, root-to-vertex order.
    PathWord word;
    /// Alternating run exponents of the operator word (R-runs at even
    /// index), summing to the depth.
    ExponentVector exponents;
};

/// Reconstructs the path from w down to wprime.  Satisfies
/// mat_apply(word_to_matrix(word, params), w) == wprime.  Throws
/// std::domain_error if wprime is not a descendant of w.
PathResult path_between(const Rational& wprime, const Rational& w,
                        const UVParams& params);

}  // namespace cwf
