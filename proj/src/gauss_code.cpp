#include "gausslink/gauss_code.hpp"

#include <stdexcept>
#include <string>

namespace gausslink {

GaussCode::GaussCode(std::vector<CodeSymbol> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.size() % 2 != 0)
        throw std::invalid_argument("gauss code needs an even number of symbols");
    const int m = static_cast<int>(symbols_.size()) / 2;
    pos_plus_.assign(static_cast<size_t>(m), -1);
    pos_minus_.assign(static_cast<size_t>(m), -1);
    for (int t = 0; t < static_cast<int>(symbols_.size()); ++t) {
        const CodeSymbol& s = symbols_[static_cast<size_t>(t)];
        if (s.index < 1 || s.index > m)
            throw std::invalid_argument("gauss code index out of 1..m: " + std::to_string(s.index));
        if (s.sup != 1 && s.sup != -1)
            throw std::invalid_argument("gauss code superscript must be +1 or -1");
        auto& pos = (s.sup > 0) ? pos_plus_ : pos_minus_;
        if (pos[static_cast<size_t>(s.index - 1)] >= 0)
            throw std::invalid_argument("gauss code symbol repeated: " + std::to_string(s.index));
        pos[static_cast<size_t>(s.index - 1)] = t;
    }
}

int GaussCode::position(int index, int sup) const {
    if (index < 1 || index > index_count())
        throw std::out_of_range("gauss code index out of range: " + std::to_string(index));
    return (sup > 0) ? pos_plus_[static_cast<size_t>(index - 1)] : pos_minus_[static_cast<size_t>(index - 1)];
}

} // namespace gausslink
