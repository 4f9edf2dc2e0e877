#include <cwf/mat2.hpp>

#include <ostream>
#include <stdexcept>

namespace cwf {

std::string Mat2::str() const {
    return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() +
           "]]";
}

Mat2 left_generator(const UVParams& params) {
    return Mat2{1, 0, params.u, 1};
}

Mat2 right_generator(const UVParams& params) {
    return Mat2{1, params.v, 0, 1};
}

Mat2 operator*(const Mat2& m1, const Mat2& m2) {
    return Mat2{m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
                m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
}

Rational mat_apply(const Mat2& m, const Rational& z) {
    if (!z.is_positive()) {
        throw std::domain_error(
            "linear fractional transformation requires z > 0");
    }
    // (az+b)/(cz+d) with z = p/q: (ap+bq)/(cp+dq).
    return Rational(m.a * z.num() + m.b * z.den(),
                    m.c * z.num() + m.d * z.den());
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << m.str();
}

}  // namespace cwf
