#pragma once

#include <cwf/params.hpp>
#include <cwf/tree.hpp>
#include <cwf/word.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace cwf {

/// Breadth-first position number in binary: a nonempty bit string whose
/// leading bit is 1 (the root sentinel).  In a (u,v)-forest a left child
/// appends u zeros to its parent's code and a right child appends v ones.
class BinaryCode {
public:
    /// Throws std::invalid_argument unless bits is nonempty, over '0'/'1',
    /// and starts with '1'.
    explicit BinaryCode(std::string bits);

    /// Accepts an optional "0b" prefix and an optional "_2" suffix.
    static BinaryCode parse(std::string_view text);

    const std::string& bits() const { return bits_; }
    std::size_t size() const { return bits_.size(); }

    /// Human-readable form "1100_2".
    std::string human() const { return bits_ + "_2"; }

    bool operator==(const BinaryCode& rhs) const = default;

private:
    std::string bits_;
};

/// Code of the unit-tree position (n,i): 2^n + i - 1 in binary.
BinaryCode position_to_code(const Position& pos);
Position code_to_position(const BinaryCode& code);

/// Path word of the coded position (drop the sentinel, 0 = L, 1 = R).
PathWord code_to_word(const BinaryCode& code);

/// Appends u zeros per L and v ones per R to rootCode, in root-to-vertex
/// order.  With params (1,1) and root "1" this is the unit-tree code of the
/// word.  Run counts must fit in memory.
BinaryCode encode_uv_code(const PathWord& word, const BinaryCode& root_code,
                          const UVParams& params);

struct CodeParentResult {
    enum class Kind { left_child, right_child, orphan };
    Kind kind{Kind::orphan};
    std::optional<BinaryCode> parent;
};

/// One (u,v)-parent step on a code.  The trailing run after the leading
/// sentinel decides: a 0-run of length >= u strips u zeros (left child), a
/// 1-run of length >= v strips v ones (right child), anything shorter is an
/// orphan.  The sentinel never participates in a run, so the code "1" has
/// an empty trailing run and is an orphan.
CodeParentResult decode_uv_code(const BinaryCode& code,
                                const UVParams& params);

}  // namespace cwf
