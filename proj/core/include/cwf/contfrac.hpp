#pragma once

#include <cwf/rational.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cwf {

/// Canonical finite continued fraction [q0,q1,...,qr] of a positive
/// rational: q0 >= 0, interior coefficients >= 1, and qr >= 2 whenever
/// r >= 1.  The rational 1 is [1]; [0] (value zero) is excluded.
class ContinuedFraction {
public:
    /// Strict constructor: rejects anything not already canonical with
    /// std::domain_error.
    explicit ContinuedFraction(std::vector<BigInt> coeffs);

    /// Lenient entry point: merges a trailing 1 ([...,q,1] -> [...,q+1])
    /// before validating.  Everything else must still be canonical.
    static ContinuedFraction normalized(std::vector<BigInt> coeffs);

    /// Parses "[q0,q1,...,qr]" (whitespace around tokens ignored) strictly.
    /// Throws std::invalid_argument on malformed text, std::domain_error on
    /// non-canonical coefficients.
    static ContinuedFraction parse(std::string_view text);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    /// r, the index of the last coefficient.
    std::size_t order() const { return coeffs_.size() - 1; }

    std::string str() const;  // "[q0,q1,...,qr]"

    bool operator==(const ContinuedFraction& rhs) const = default;

private:
    struct unchecked_tag {};
    ContinuedFraction(std::vector<BigInt> coeffs, unchecked_tag)
        : coeffs_(std::move(coeffs)) {}

    std::vector<BigInt> coeffs_;
};

/// Canonical continued fraction of w via the Euclidean algorithm.
/// Throws std::domain_error for w = 0.
ContinuedFraction to_cf(const Rational& w);

/// Exact value of the continued fraction.
Rational from_cf(const ContinuedFraction& cf);

/// Continued fraction of the left child a/(ua+b) of a/b = cf:
///   [0, u+q1, q2, ..., qr]      if q0 = 0,
///   [0, u, q0, q1, ..., qr]     otherwise,
/// renormalized (a trailing 1 can appear only when the input is [q0]).
ContinuedFraction cf_left_child(const ContinuedFraction& cf, std::int64_t u);

/// Continued fraction of the right child a/b + v: [v+q0, q1, ..., qr].
ContinuedFraction cf_right_child(const ContinuedFraction& cf, std::int64_t v);

std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf);

}  // namespace cwf
