#pragma once

#include <cwf/rational.hpp>

#include <cstdint>
#include <string>

namespace cwf {

/// The pair (u,v) of positive integers selecting a Calkin-Wilf tree family:
/// vertex w has left child w/(uw+1) and right child w+v.  (1,1) is the
/// classical tree.
struct UVParams {
    std::int64_t u{1};
    std::int64_t v{1};

    UVParams() = default;

    /// Throws std::domain_error unless u >= 1 and v >= 1.
    UVParams(std::int64_t u_, std::int64_t v_);

    /// (v,u) — the transposed family used by Nathanson's symmetry.
    UVParams swapped() const { return UVParams(v, u); }

    bool operator==(const UVParams& rhs) const = default;

    std::string str() const;  // "(u,v)"
};

/// Left child w/(uw+1) of w > 0.  For a/b in lowest terms this is
/// a/(ua+b), already reduced since gcd(a, ua+b) = gcd(a,b) = 1.
/// Always strictly below 1/u.
Rational apply_left(const Rational& w, const UVParams& params);

/// Right child w + v of w > 0; always strictly above v.
Rational apply_right(const Rational& w, const UVParams& params);

}  // namespace cwf
