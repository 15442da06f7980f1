#ifndef NIEPTK_STRUCTURE_HPP
#define NIEPTK_STRUCTURE_HPP

#include <optional>

#include "block.hpp"
#include "types.hpp"

namespace nieptk {

// n row permutations of {0..n-1}, first one the identity; row i of a
// permutative matrix is tuple[i] applied to row 0.
using PermutationTuple = std::vector<std::vector<std::size_t>>;

struct StructureReport {
    bool diagonal = false;
    bool circulant = false;
    bool symmetric_real = false;
    std::optional<PermutationTuple> permutatively_equivalent;
};

// Common tuple nu with nu_0 = id such that M[i][j] = M[0][nu_i(j)] for every
// matrix in the list; lexicographically smallest witness on ties.
std::optional<PermutationTuple> permutative_equivalence(const std::vector<CMat>& matrices,
                                                        double tol);

// Classify all S_k at once: each flag true iff every S_k has the property.
StructureReport classify_family(const SFamily& s, double tol);

// Classify the block grid directly: block-diagonal, block-circulant layout,
// block-permutative rows, and full-matrix symmetry.
StructureReport detect_block_structure(const CirculantBlockMatrix& a, double tol);

}  // namespace nieptk

#endif
