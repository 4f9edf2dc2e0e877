#pragma once

#include <cwf/params.hpp>
#include <cwf/rational.hpp>

#include <iosfwd>
#include <string>

namespace cwf {

/// 2x2 matrix [[a,b],[c,d]] over the nonnegative integers with determinant 1,
/// i.e. an element of SL2(N0).  Words in the generators L_u = [[1,0],[u,1]]
/// and R_v = [[1,v],[0,1]] live here.
struct Mat2 {
    BigInt a{1}, b{0}, c{0}, d{1};

    bool operator==(const Mat2& rhs) const = default;

    BigInt det() const { return a * d - b * c; }

    std::string str() const;  // "[[a,b],[c,d]]"
};

inline Mat2 mat2_identity() { return Mat2{}; }

/// L_u = [[1,0],[u,1]].
Mat2 left_generator(const UVParams& params);
/// R_v = [[1,v],[0,1]].
Mat2 right_generator(const UVParams& params);

Mat2 operator*(const Mat2& m1, const Mat2& m2);

/// The linear fractional transformation (az+b)/(cz+d).  For matrices in
/// SL2(N0) and z > 0 the denominator is positive, so the result is a valid
/// positive rational.
Rational mat_apply(const Mat2& m, const Rational& z);

std::ostream& operator<<(std::ostream& os, const Mat2& m);

}  // namespace cwf
