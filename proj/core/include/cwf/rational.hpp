#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace cwf {

using BigInt = boost::multiprecision::cpp_int;

/// Exact nonnegative rational number, always held in lowest terms with a
/// positive denominator.  Values are immutable after construction and all
/// operations are pure, so instances can be shared freely across threads.
class Rational {
public:
    /// Zero (0/1).
    Rational() : num_(0), den_(1) {}

    /// `num/den` reduced.  Throws std::domain_error if den == 0 or either
    /// argument is negative.
    Rational(BigInt num, BigInt den);

    Rational(const BigInt& n) : num_(n), den_(1) { check_nonnegative(); }
    Rational(long long n) : num_(n), den_(1) { check_nonnegative(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_integer() const { return den_ == 1; }

    /// Integer part [x].  Exact floor; values are nonnegative so this is
    /// plain truncation.
    BigInt floor_part() const { return num_ / den_; }

    /// Fractional part {x} = x - [x].
    Rational frac_part() const;

    /// 1/x.  Throws std::domain_error on zero.
    Rational reciprocal() const;

    Rational operator+(const Rational& rhs) const;
    /// Throws std::domain_error if the result would be negative.
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    /// Throws std::domain_error on division by zero.
    Rational operator/(const Rational& rhs) const;

    bool operator==(const Rational& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const Rational& rhs) const { return !(*this == rhs); }
    bool operator<(const Rational& rhs) const {
        return num_ * rhs.den_ < rhs.num_ * den_;
    }
    bool operator>(const Rational& rhs) const { return rhs < *this; }
    bool operator<=(const Rational& rhs) const { return !(rhs < *this); }
    bool operator>=(const Rational& rhs) const { return !(*this < rhs); }

    /// "a/b", or just "a" when the denominator is 1.
    std::string str() const;

    /// Parses "a" or "a/b" (nonnegative integers, b != 0) and reduces.
    /// Throws std::invalid_argument on malformed text.
    static Rational parse(std::string_view text);

private:
    void check_nonnegative() const;

    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cwf
