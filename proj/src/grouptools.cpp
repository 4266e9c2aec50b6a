#include "gausslink/grouptools.hpp"

#include "gausslink/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gausslink {

namespace {

constexpr double kMaxSearchNodes = 1e8;

struct FlatRelator {
    int target;
    int source;
    std::vector<GeneratorPower> conjugator;
};

// Branch on conjugator letters first: once every conjugating word is ready,
// one seed per class forces the rest of its cycle by propagation.
int pick_branch(int n, const std::vector<char>& in_conjugator, const std::vector<char>& referenced,
                const std::vector<int>& image) {
    for (int v = 0; v < n; ++v)
        if (in_conjugator[static_cast<size_t>(v)] && image[static_cast<size_t>(v)] < 0) return v;
    for (int v = 0; v < n; ++v)
        if (referenced[static_cast<size_t>(v)] && image[static_cast<size_t>(v)] < 0) return v;
    return -1;
}

// Value-independent dry run of the search: which generators get forced by
// propagation and which must be branched on. Mirrors the real search order.
int branch_count(int n, const std::vector<FlatRelator>& relators, const std::vector<char>& in_conjugator,
                 const std::vector<char>& referenced) {
    std::vector<int> assigned(static_cast<size_t>(n), -1);
    int branches = 0;
    for (;;) {
        bool progressed = true;
        while (progressed) {
            progressed = false;
            for (const FlatRelator& r : relators) {
                bool word_ready = true;
                for (const GeneratorPower& l : r.conjugator)
                    word_ready = word_ready && assigned[static_cast<size_t>(l.gen)] >= 0;
                if (!word_ready) continue;
                const bool t = assigned[static_cast<size_t>(r.target)] >= 0;
                const bool s = assigned[static_cast<size_t>(r.source)] >= 0;
                if (t != s) {
                    assigned[static_cast<size_t>(t ? r.source : r.target)] = 0;
                    progressed = true;
                }
            }
        }
        const int next = pick_branch(n, in_conjugator, referenced, assigned);
        if (next < 0) return branches;
        assigned[static_cast<size_t>(next)] = 0;
        ++branches;
    }
}

class HomSearch {
public:
    HomSearch(const std::vector<FlatRelator>& relators, const std::vector<char>& in_conjugator,
              const std::vector<char>& referenced, const FiniteGroupTable& g, int n)
        : relators_(relators), in_conjugator_(in_conjugator), referenced_(referenced), g_(g),
          image_(static_cast<size_t>(n), -1) {}

    std::uint64_t run() { return descend(); }

private:
    int word_image(const std::vector<GeneratorPower>& w) const {
        int acc = g_.identity();
        for (const GeneratorPower& l : w) {
            const int img = image_[static_cast<size_t>(l.gen)];
            if (img < 0) return -1;
            acc = g_.mul(acc, l.exp > 0 ? img : g_.inv(img));
        }
        return acc;
    }

    // Returns false on contradiction; records forced assignments on the trail.
    bool propagate(std::vector<int>& trail) {
        bool progressed = true;
        while (progressed) {
            progressed = false;
            for (const FlatRelator& r : relators_) {
                const int w = word_image(r.conjugator);
                if (w < 0) continue;
                const int t = image_[static_cast<size_t>(r.target)];
                const int s = image_[static_cast<size_t>(r.source)];
                if (t >= 0 && s >= 0) {
                    if (t != g_.mul(g_.mul(g_.inv(w), s), w)) return false;
                } else if (s >= 0) {
                    image_[static_cast<size_t>(r.target)] = g_.mul(g_.mul(g_.inv(w), s), w);
                    trail.push_back(r.target);
                    progressed = true;
                } else if (t >= 0) {
                    image_[static_cast<size_t>(r.source)] = g_.mul(g_.mul(w, t), g_.inv(w));
                    trail.push_back(r.source);
                    progressed = true;
                }
            }
        }
        return true;
    }

    std::uint64_t descend() {
        std::vector<int> trail;
        const bool ok = propagate(trail);
        std::uint64_t total = 0;
        if (ok) {
            const int next = pick_branch(static_cast<int>(image_.size()), in_conjugator_, referenced_, image_);
            if (next < 0) {
                total = 1;
            } else {
                for (int val = 0; val < g_.order(); ++val) {
                    image_[static_cast<size_t>(next)] = val;
                    total += descend();
                }
                image_[static_cast<size_t>(next)] = -1;
            }
        }
        for (int v : trail) image_[static_cast<size_t>(v)] = -1;
        return total;
    }

    const std::vector<FlatRelator>& relators_;
    const std::vector<char>& in_conjugator_;
    const std::vector<char>& referenced_;
    const FiniteGroupTable& g_;
    std::vector<int> image_;
};

} // namespace

FiniteGroupTable::FiniteGroupTable(std::string name, int order, std::vector<int> product)
    : name_(std::move(name)), order_(order), product_(std::move(product)) {
    if (order_ < 1)
        throw std::invalid_argument("group order must be positive");
    if (product_.size() != static_cast<size_t>(order_) * static_cast<size_t>(order_))
        throw std::invalid_argument("product table size must be order^2");
    for (int x : product_)
        if (x < 0 || x >= order_)
            throw std::invalid_argument("product table entry out of range");

    identity_ = -1;
    for (int e = 0; e < order_ && identity_ < 0; ++e) {
        bool works = true;
        for (int a = 0; a < order_ && works; ++a)
            works = mul(e, a) == a && mul(a, e) == a;
        if (works) identity_ = e;
    }
    if (identity_ < 0)
        throw std::invalid_argument("table has no identity element");

    inverse_.assign(static_cast<size_t>(order_), -1);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b)
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverse_[static_cast<size_t>(a)] = b;
                break;
            }
        if (inverse_[static_cast<size_t>(a)] < 0)
            throw std::invalid_argument("table element has no inverse");
    }

    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument("product table is not associative");
}

FiniteGroupTable FiniteGroupTable::symmetric(int n) {
    if (n < 1 || n > 5)
        throw TooLargeError("symmetric group tables are built for n in 1..5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    const int order = static_cast<int>(perms.size());
    const auto rank_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<int> product(static_cast<size_t>(order) * static_cast<size_t>(order));
    std::vector<int> composed(static_cast<size_t>(n));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            for (int x = 0; x < n; ++x)
                composed[static_cast<size_t>(x)] =
                    perms[static_cast<size_t>(a)][static_cast<size_t>(perms[static_cast<size_t>(b)][static_cast<size_t>(x)])];
            product[static_cast<size_t>(a) * static_cast<size_t>(order) + static_cast<size_t>(b)] = rank_of(composed);
        }
    return FiniteGroupTable("S" + std::to_string(n), order, std::move(product));
}

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
    if (n < 1)
        throw std::invalid_argument("cyclic group order must be positive");
    std::vector<int> product(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            product[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] = (a + b) % n;
    return FiniteGroupTable("Z" + std::to_string(n), n, std::move(product));
}

int conjugacy_class_count(const FiniteGroupTable& g) {
    std::vector<char> seen(static_cast<size_t>(g.order()), 0);
    int classes = 0;
    for (int a = 0; a < g.order(); ++a) {
        if (seen[static_cast<size_t>(a)]) continue;
        ++classes;
        for (int x = 0; x < g.order(); ++x)
            seen[static_cast<size_t>(g.mul(g.mul(g.inv(x), a), x))] = 1;
    }
    return classes;
}

std::uint64_t count_homomorphisms(const WirtingerPresentation& p, const FiniteGroupTable& g) {
    const int n = p.generator_count();
    std::vector<FlatRelator> relators;
    relators.reserve(static_cast<size_t>(p.relator_count()));
    for (const Relator& r : p.relators())
        relators.push_back({r.target, r.source, r.conjugator});

    std::vector<char> referenced(static_cast<size_t>(n), 0);
    std::vector<char> in_conjugator(static_cast<size_t>(n), 0);
    for (const FlatRelator& r : relators) {
        referenced[static_cast<size_t>(r.target)] = 1;
        referenced[static_cast<size_t>(r.source)] = 1;
        for (const GeneratorPower& l : r.conjugator) {
            referenced[static_cast<size_t>(l.gen)] = 1;
            in_conjugator[static_cast<size_t>(l.gen)] = 1;
        }
    }
    int free_count = 0;
    for (int v = 0; v < n; ++v)
        if (!referenced[static_cast<size_t>(v)]) ++free_count;

    const int branches = branch_count(n, relators, in_conjugator, referenced);
    const double log_order = std::log2(static_cast<double>(g.order()));
    if (static_cast<double>(branches) * log_order > std::log2(kMaxSearchNodes))
        throw SearchTooLargeError("homomorphism search needs about " + std::to_string(branches) +
                                  " nested choices over a group of order " + std::to_string(g.order()));
    if (static_cast<double>(branches + free_count) * log_order >= 63.0)
        throw SearchTooLargeError("homomorphism count would not fit a 64-bit integer");

    std::uint64_t total = HomSearch(relators, in_conjugator, referenced, g, n).run();
    for (int i = 0; i < free_count; ++i)
        total *= static_cast<std::uint64_t>(g.order());
    return total;
}

} // namespace gausslink
