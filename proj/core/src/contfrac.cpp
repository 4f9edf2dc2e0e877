#include <cwf/contfrac.hpp>

#include <ostream>
#include <stdexcept>
#include <utility>

namespace cwf {

namespace {

void validate_canonical(const std::vector<BigInt>& coeffs) {
    if (coeffs.empty()) {
        throw std::domain_error("continued fraction must be nonempty");
    }
    if (coeffs[0] < 0) {
        throw std::domain_error("continued fraction coefficients q0 < 0");
    }
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        if (coeffs[i] < 1) {
            throw std::domain_error(
                "continued fraction interior coefficient < 1");
        }
    }
    if (coeffs.size() == 1) {
        if (coeffs[0] < 1) {
            throw std::domain_error(
                "continued fraction [0] has no positive value");
        }
    } else if (coeffs.back() < 2) {
        throw std::domain_error(
            "continued fraction not canonical: last coefficient is 1");
    }
}

}  // namespace

ContinuedFraction::ContinuedFraction(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
    validate_canonical(coeffs_);
}

ContinuedFraction ContinuedFraction::normalized(std::vector<BigInt> coeffs) {
    if (coeffs.size() >= 2 && coeffs.back() == 1) {
        coeffs.pop_back();
        coeffs.back() += 1;
    }
    return ContinuedFraction(std::move(coeffs));
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
    auto fail = [&]() {
        throw std::invalid_argument("malformed continued fraction: \"" +
                                    std::string(text) + "\"");
    };
    std::size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t')) {
            ++pos;
        }
    };
    skip_ws();
    if (pos == text.size() || text[pos] != '[') fail();
    ++pos;
    std::vector<BigInt> coeffs;
    while (true) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            ++pos;
        }
        if (pos == start) fail();
        coeffs.emplace_back(std::string(text.substr(start, pos - start)));
        skip_ws();
        if (pos == text.size()) fail();
        if (text[pos] == ']') {
            ++pos;
            break;
        }
        if (text[pos] != ',') fail();
        ++pos;
    }
    skip_ws();
    if (pos != text.size()) fail();
    return ContinuedFraction(std::move(coeffs));
}

std::string ContinuedFraction::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += coeffs_[i].str();
    }
    out.push_back(']');
    return out;
}

ContinuedFraction to_cf(const Rational& w) {
    if (!w.is_positive()) {
        throw std::domain_error("continued fraction of a nonpositive value");
    }
    // Euclidean algorithm; the final quotient is automatically >= 2 unless
    // the whole expansion has length 1, so the output is canonical.
    std::vector<BigInt> coeffs;
    BigInt a = w.num();
    BigInt b = w.den();
    while (true) {
        coeffs.push_back(a / b);
        BigInt r = a % b;
        if (r == 0) {
            break;
        }
        a = b;
        b = r;
    }
    return ContinuedFraction(std::move(coeffs));
}

Rational from_cf(const ContinuedFraction& cf) {
    const auto& q = cf.coeffs();
    Rational value(q.back());
    for (std::size_t i = q.size() - 1; i-- > 0;) {
        value = Rational(q[i]) + value.reciprocal();
    }
    return value;
}

ContinuedFraction cf_left_child(const ContinuedFraction& cf, std::int64_t u) {
    if (u < 1) {
        throw std::domain_error("cf_left_child requires u >= 1");
    }
    const auto& q = cf.coeffs();
    std::vector<BigInt> out;
    if (q[0] == 0) {
        // a/(ua+b) = [0, u+q1, q2, ..., qr]
        out = q;
        out[1] += u;
    } else {
        // a/(ua+b) = [0, u, q0, q1, ..., qr]
        out.reserve(q.size() + 2);
        out.emplace_back(0);
        out.emplace_back(u);
        out.insert(out.end(), q.begin(), q.end());
    }
    return ContinuedFraction::normalized(std::move(out));
}

ContinuedFraction cf_right_child(const ContinuedFraction& cf,
                                 std::int64_t v) {
    if (v < 1) {
        throw std::domain_error("cf_right_child requires v >= 1");
    }
    std::vector<BigInt> out = cf.coeffs();
    out[0] += v;
    return ContinuedFraction::normalized(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf) {
    return os << cf.str();
}

}  // namespace cwf
