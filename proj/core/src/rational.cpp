#include <cwf/rational.hpp>

#include <ostream>
#include <stdexcept>
#include <utility>

namespace cwf {

namespace {

BigInt parse_uint(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("malformed rational: empty integer");
    }
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument(
                "malformed rational: expected digits, got \"" +
                std::string(text) + "\"");
        }
    }
    return BigInt(std::string(text));
}

}  // namespace

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (num_ < 0 || den_ < 0) {
        throw std::domain_error("rational must be nonnegative");
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) {
        den_ = 1;
    }
}

void Rational::check_nonnegative() const {
    if (num_ < 0) {
        throw std::domain_error("rational must be nonnegative");
    }
}

Rational Rational::frac_part() const {
    return Rational(num_ % den_, den_);
}

Rational Rational::reciprocal() const {
    if (num_ == 0) {
        throw std::domain_error("reciprocal of zero");
    }
    return Rational(den_, num_);
}

Rational Rational::operator+(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const {
    BigInt n = num_ * rhs.den_ - rhs.num_ * den_;
    if (n < 0) {
        throw std::domain_error("rational subtraction underflow");
    }
    return Rational(std::move(n), den_ * rhs.den_);
}

Rational Rational::operator*(const Rational& rhs) const {
    return Rational(num_ * rhs.num_, den_ * rhs.den_);
}

Rational Rational::operator/(const Rational& rhs) const {
    if (rhs.num_ == 0) {
        throw std::domain_error("rational division by zero");
    }
    return Rational(num_ * rhs.den_, den_ * rhs.num_);
}

std::string Rational::str() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_uint(text), 1);
    }
    BigInt num = parse_uint(text.substr(0, slash));
    BigInt den = parse_uint(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("malformed rational: zero denominator");
    }
    return Rational(std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace cwf
