#include <cwf/binary_code.hpp>

#include <stdexcept>
#include <utility>

namespace cwf {

BinaryCode::BinaryCode(std::string bits) : bits_(std::move(bits)) {
    if (bits_.empty()) {
        throw std::invalid_argument("binary code must be nonempty");
    }
    if (bits_[0] != '1') {
        throw std::invalid_argument("binary code must start with 1");
    }
    for (char ch : bits_) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument(
                std::string("binary code with non-binary digit '") + ch +
                "'");
        }
    }
}

BinaryCode BinaryCode::parse(std::string_view text) {
    if (text.starts_with("0b")) {
        text.remove_prefix(2);
    }
    if (text.ends_with("_2")) {
        text.remove_suffix(2);
    }
    return BinaryCode(std::string(text));
}

BinaryCode position_to_code(const Position& pos) {
    BigInt code = (BigInt(1) << pos.n) + (pos.i - 1);
    std::string bits;
    bits.reserve(pos.n + 1);
    for (int bit = pos.n; bit >= 0; --bit) {
        bits.push_back(boost::multiprecision::bit_test(code, bit) ? '1'
                                                                  : '0');
    }
    return BinaryCode(std::move(bits));
}

Position code_to_position(const BinaryCode& code) {
    const std::string& bits = code.bits();
    int n = static_cast<int>(bits.size()) - 1;
    BigInt index = 0;
    for (std::size_t k = 1; k < bits.size(); ++k) {
        index = (index << 1) | (bits[k] == '1' ? 1 : 0);
    }
    return Position(n, index + 1);
}

PathWord code_to_word(const BinaryCode& code) {
    PathWord word;
    const std::string& bits = code.bits();
    for (std::size_t k = 1; k < bits.size(); ++k) {
        word.append(bits[k] == '1' ? Move::right : Move::left);
    }
    return word;
}

BinaryCode encode_uv_code(const PathWord& word, const BinaryCode& root_code,
                          const UVParams& params) {
    std::string bits = root_code.bits();
    for (const auto& [m, count] : word.runs()) {
        if (count > 1000000) {
            throw std::length_error("path word too long to encode");
        }
        auto run = static_cast<std::size_t>(count.convert_to<long long>());
        if (m == Move::left) {
            bits.append(run * static_cast<std::size_t>(params.u), '0');
        } else {
            bits.append(run * static_cast<std::size_t>(params.v), '1');
        }
    }
    return BinaryCode(std::move(bits));
}

CodeParentResult decode_uv_code(const BinaryCode& code,
                                const UVParams& params) {
    const std::string& bits = code.bits();
    // The leading sentinel never joins a trailing run; measure the run over
    // the tail only.  That classifies "1" (empty tail) as an orphan and
    // keeps every stripped result a valid code.
    std::size_t run = 0;
    char last = bits.back();
    for (std::size_t k = bits.size(); k-- > 1;) {
        if (bits[k] != last) {
            break;
        }
        ++run;
    }
    if (last == '0' && run >= static_cast<std::size_t>(params.u)) {
        return {CodeParentResult::Kind::left_child,
                BinaryCode(bits.substr(0, bits.size() - params.u))};
    }
    if (last == '1' && run >= static_cast<std::size_t>(params.v)) {
        return {CodeParentResult::Kind::right_child,
                BinaryCode(bits.substr(0, bits.size() - params.v))};
    }
    return {CodeParentResult::Kind::orphan, std::nullopt};
}

}  // namespace cwf
