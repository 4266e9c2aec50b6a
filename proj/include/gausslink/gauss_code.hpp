#pragma once

#include <vector>

namespace gausslink {

// One symbol i^{+1} or i^{-1} of a Gauss code.
struct CodeSymbol {
    int index = 0; // 1-based
    int sup = 1;   // +1 or -1

    friend bool operator==(const CodeSymbol&, const CodeSymbol&) = default;
};

// Cyclic permutation of the symbols 1^{+1}, 1^{-1}, ..., m^{+1}, m^{-1}:
// each index appears exactly once with each superscript. Stored with a fixed
// starting symbol; consumers treat the sequence cyclically.
class GaussCode {
public:
    GaussCode() = default;
    explicit GaussCode(std::vector<CodeSymbol> symbols);

    int index_count() const { return static_cast<int>(symbols_.size()) / 2; }
    int size() const { return static_cast<int>(symbols_.size()); }
    const std::vector<CodeSymbol>& symbols() const { return symbols_; }

    // Position of i^{+1} / i^{-1} in the stored sequence.
    int position(int index, int sup) const;

    friend bool operator==(const GaussCode&, const GaussCode&) = default;

private:
    std::vector<CodeSymbol> symbols_;
    std::vector<int> pos_plus_;
    std::vector<int> pos_minus_;
};

} // namespace gausslink
