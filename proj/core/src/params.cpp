#include <cwf/params.hpp>

#include <stdexcept>

namespace cwf {

UVParams::UVParams(std::int64_t u_, std::int64_t v_) : u(u_), v(v_) {
    if (u < 1 || v < 1) {
        throw std::domain_error("tree parameters require u >= 1 and v >= 1");
    }
}

std::string UVParams::str() const {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

Rational apply_left(const Rational& w, const UVParams& params) {
    if (!w.is_positive()) {
        throw std::domain_error("child maps require a positive vertex");
    }
    return Rational(w.num(), params.u * w.num() + w.den());
}

Rational apply_right(const Rational& w, const UVParams& params) {
    if (!w.is_positive()) {
        throw std::domain_error("child maps require a positive vertex");
    }
    return Rational(w.num() + params.v * w.den(), w.den());
}

}  // namespace cwf
