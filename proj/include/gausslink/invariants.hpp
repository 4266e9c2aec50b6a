#pragma once

#include "gausslink/gauss_code.hpp"
#include "gausslink/paragraph.hpp"

#include <vector>

namespace gausslink {

// Sum of superscripts over S_i, the subword read forward in the cyclic
// written order from i^{+1} to i^{-1}, both endpoints excluded.
int alpha(const GaussCode& w, int index);

// Sum of superscripts over the occurrences lying in both S̄_i = S_i ∪
// {i^{+1}, i^{-1}} and S_j.
int beta(const GaussCode& w, int i, int j);

struct InvariantTable {
    int index_count = 0;
    std::vector<int> alpha;  // alpha[i-1]
    std::vector<int> beta;   // beta[(i-1)*m + (j-1)]
};

InvariantTable invariant_table(const GaussCode& w);

// True iff every alpha_i and beta_ij vanishes.
bool is_planar_code(const GaussCode& w);

// Merge the words of a non-splittable paragraph into a single Gauss code by
// repeatedly doubling a crossing that joins two words (lowest such crossing
// first), then relabeling over letters to the opposite superscript of their
// partner. Output length is 2n + 2k - 2. Throws SplittableInputError.
GaussCode paragraph_to_code(const GaussParagraph& p);

// Every code reachable from p by some sequence of merge choices. Intended
// for small word counts; the number of sequences grows with n^(k-1).
std::vector<GaussCode> all_merge_codes(const GaussParagraph& p);

struct CriterionComponent {
    ParagraphComponent component;
    GaussCode code;
    bool planar = true;
};

struct CriterionReport {
    std::vector<CriterionComponent> components;
    bool planar = true;
};

// Split, merge each component into a code, and test the alpha/beta criterion;
// aggregate verdict is the conjunction.
CriterionReport criterion_report(const GaussParagraph& p);

inline bool is_planar_criterion(const GaussParagraph& p) { return criterion_report(p).planar; }

} // namespace gausslink
