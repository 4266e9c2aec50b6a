#pragma once

#include "gausslink/wirtinger.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gausslink {

// Multiplication table of a finite group. Construction checks the identity,
// inverse, and associativity laws over the whole table.
class FiniteGroupTable {
public:
    FiniteGroupTable(std::string name, int order, std::vector<int> product);

    // Symmetric group on n letters, n <= 5, permutations enumerated in
    // lexicographic order; composition (pq)(x) = p(q(x)).
    static FiniteGroupTable symmetric(int n);

    // Cyclic group of order n >= 1.
    static FiniteGroupTable cyclic(int n);

    const std::string& name() const { return name_; }
    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return product_[static_cast<size_t>(a) * static_cast<size_t>(order_) + static_cast<size_t>(b)]; }
    int inv(int a) const { return inverse_[static_cast<size_t>(a)]; }

private:
    std::string name_;
    int order_ = 1;
    std::vector<int> product_;
    std::vector<int> inverse_;
    int identity_ = 0;
};

int conjugacy_class_count(const FiniteGroupTable& g);

// Exact number of generator-image tuples satisfying every relator. The
// search assigns unforced generators depth-first and propagates relator
// consequences; generators appearing in no relator contribute a factor
// |G| each. Throws SearchTooLargeError when the enumeration would leave
// desk scale (branch set beyond 10^8 nodes or an unrepresentable count).
std::uint64_t count_homomorphisms(const WirtingerPresentation& p, const FiniteGroupTable& g);

} // namespace gausslink
