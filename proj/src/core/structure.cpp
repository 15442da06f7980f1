#include "structure.hpp"

#include <cmath>
#include <functional>

namespace nieptk {

namespace {

// lexicographically smallest permutation p with equal(j, p(j)) for all j
std::optional<std::vector<std::size_t>> lex_smallest_perm(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& equal) {
    std::vector<std::size_t> perm(n, n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> place = [&](std::size_t j) {
        if (j == n) return true;
        for (std::size_t p = 0; p < n; ++p) {
            if (used[p] || !equal(j, p)) continue;
            perm[j] = p;
            used[p] = true;
            if (place(j + 1)) return true;
            used[p] = false;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    return perm;
}

}  // namespace

std::optional<PermutationTuple> permutative_equivalence(const std::vector<CMat>& matrices,
                                                        double tol) {
    if (matrices.empty())
        throw invalid_argument_error("permutative_equivalence: at least one matrix required");
    std::size_t n = matrices[0].size();
    for (const CMat& m : matrices)
        if (m.size() != n)
            throw invalid_argument_error("permutative_equivalence: sizes differ");

    PermutationTuple tuple(n);
    for (std::size_t j = 0; j < n; ++j) tuple[0].push_back(j);
    for (std::size_t i = 1; i < n; ++i) {
        auto equal = [&](std::size_t j, std::size_t p) {
            for (const CMat& m : matrices)
                if (std::abs(m[i][j] - m[0][p]) > tol) return false;
            return true;
        };
        auto perm = lex_smallest_perm(n, equal);
        if (!perm) return std::nullopt;
        tuple[i] = std::move(*perm);
    }
    return tuple;
}

StructureReport classify_family(const SFamily& s, double tol) {
    StructureReport rep;
    rep.diagonal = true;
    rep.circulant = true;
    rep.symmetric_real = true;
    for (const CMat& m : s.s) {
        if (!is_circulant_matrix(m, tol)) rep.circulant = false;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) {
                if (i != j && std::abs(m[i][j]) > tol) rep.diagonal = false;
                if (std::abs(m[i][j].imag()) > tol ||
                    std::abs(m[i][j] - std::conj(m[j][i])) > tol)
                    rep.symmetric_real = false;
            }
    }
    rep.permutatively_equivalent = permutative_equivalence(s.s, tol);
    return rep;
}

StructureReport detect_block_structure(const CirculantBlockMatrix& a, double tol) {
    StructureReport rep;
    std::size_t n = a.n;

    rep.diagonal = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            for (const cplx& z : a.blocks[i][j])
                if (std::abs(z) > tol) rep.diagonal = false;
        }

    rep.circulant = true;
    for (std::size_t i = 0; i < n && rep.circulant; ++i)
        for (std::size_t j = 0; j < n && rep.circulant; ++j) {
            const CVec& want = a.blocks[0][(j + n - i) % n];
            for (std::size_t k = 0; k < a.m; ++k)
                if (std::abs(a.blocks[i][j][k] - want[k]) > tol) {
                    rep.circulant = false;
                    break;
                }
        }

    // block-permutative: each block-row is a permutation of the first
    auto equal_blocks = [&](std::size_t i) {
        return [&, i](std::size_t j, std::size_t p) {
            for (std::size_t k = 0; k < a.m; ++k)
                if (std::abs(a.blocks[i][j][k] - a.blocks[0][p][k]) > tol) return false;
            return true;
        };
    };
    PermutationTuple tuple(n);
    bool permutative = true;
    for (std::size_t j = 0; j < n; ++j) tuple[0].push_back(j);
    for (std::size_t i = 1; i < n && permutative; ++i) {
        auto perm = lex_smallest_perm(n, equal_blocks(i));
        if (!perm)
            permutative = false;
        else
            tuple[i] = std::move(*perm);
    }
    if (permutative) rep.permutatively_equivalent = tuple;

    CMat full = a.materialize();
    rep.symmetric_real = true;
    for (std::size_t i = 0; i < full.size(); ++i)
        for (std::size_t j = 0; j < full.size(); ++j)
            if (std::abs(full[i][j].imag()) > tol ||
                std::abs(full[i][j] - full[j][i]) > tol)
                rep.symmetric_real = false;
    return rep;
}

}  // namespace nieptk
