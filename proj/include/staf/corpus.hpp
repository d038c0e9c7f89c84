#pragma once

// The built-in example matrices exercised by the corpus runner and the
// acceptance suite, plus the runner itself. Tags are stable identifiers.

#include "staf/equivalence.hpp"

namespace staf::corpus {

// 5x5 identity-plus-cycle matrix and its permuted partner (dominant
// eigenvalue 2, all-ones eigenvectors).
IntMat circulant_j();
IntMat circulant_k();

// 2x2 companion-form pair with dominant eigenvalue 8.
IntMat comp2_j();  // first column (4, 32)
IntMat comp2_k();  // first column (6, 16)

// unimodular 4x4 with irreducible quartic charpoly, its unit twist
// A1 = K^20 (K - 1), and J = K A1.
IntMat perm4_k();
IntMat perm4_a1();
IntMat perm4_j();

// unimodular 5x5 pair sharing the cubic dominant field.
IntMat unimodular5_j();
IntMat unimodular5_k();

// 6x6 pair whose secondary spectra differ by unit-modulus counts.
IntMat mixed6_j();
IntMat mixed6_k();

// 6x6 companion pair with similar squares.
IntMat big6_j();
IntMat big6_k();

// first-column entries scaled by d, d^2, ..., d^N.
CompanionSpec scaled_spec(const CompanionSpec& base, const Integer& d);

IntMat scalar(long v);  // 1x1

struct Item {
    std::string tag;
    std::string description;
    int criterion;  // 1..11, or 0 for experiments
};

struct Outcome {
    std::string tag;
    bool pass = false;
    bool experimental = false;
    std::string detail;
    double seconds = 0.0;
};

const std::vector<Item>& items();
Outcome run_item(const std::string& tag);

}  // namespace staf::corpus
