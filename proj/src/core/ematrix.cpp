#include "ematrix.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "dft.hpp"
#include "spectra.hpp"

namespace nieptk {

CVec EMatrix::column(std::size_t j) const {
    CVec c(rows);
    for (std::size_t i = 0; i < rows; ++i) c[i] = entries[i][j];
    return c;
}

CVec EMatrix::multiset() const {
    CVec all;
    for (const auto& row : entries) all.insert(all.end(), row.begin(), row.end());
    return all;
}

EMatrix ematrix_from_entries(CMat entries) {
    EMatrix e;
    e.rows = entries.size();
    if (e.rows == 0) throw invalid_argument_error("ematrix: empty");
    e.cols = entries[0].size();
    if (e.cols == 0) throw invalid_argument_error("ematrix: empty");
    for (const auto& row : entries)
        if (row.size() != e.cols) throw invalid_argument_error("ematrix: ragged rows");
    e.entries = std::move(entries);
    return e;
}

EMatrixReport validate_ematrix(const EMatrix& e, double tol) {
    EMatrixReport rep;
    rep.conjugation_closed = is_closed_under_conjugation(e.multiset(), tol);

    cplx p = e.perron();
    rep.perron_max_modulus = std::abs(p.imag()) <= tol && p.real() > 0;
    for (const auto& row : e.entries)
        for (const cplx& z : row)
            if (std::abs(z) > std::abs(p) + tol) rep.perron_max_modulus = false;

    rep.column_conjugation = true;
    for (std::size_t l = 1; l <= e.cols / 2; ++l)
        for (std::size_t i = 0; i < e.rows; ++i)
            if (std::abs(e.entries[i][l] - std::conj(e.entries[i][e.cols - l])) > tol)
                rep.column_conjugation = false;

    if (e.cols % 2 == 0 && e.cols > 1) {
        for (std::size_t i = 0; i < e.rows; ++i)
            if (std::abs(e.entries[i][e.cols / 2].imag()) > tol) rep.middle_column_real = false;
    }

    Circulant s0 = circulant_from_spectrum(e.column(0));
    rep.s0_nonnegative = is_nonnegative(s0, std::max(tol, 1e-9));
    return rep;
}

SFamily s_family_from_ematrix(const EMatrix& e) {
    SFamily fam;
    fam.n = e.rows;
    fam.m = e.cols;
    fam.s.reserve(e.cols);
    for (std::size_t l = 0; l < e.cols; ++l)
        fam.s.push_back(circulant_from_spectrum(e.column(l)).materialize());
    return fam;
}

double phi(const EMatrix& e, double tol) {
    std::size_t n = e.rows, m = e.cols;
    double scale = 1.0;
    for (const auto& row : e.entries)
        for (const cplx& z : row) scale = std::max(scale, std::abs(z));
    double best = 0.0;
    bool first = true;
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            cplx sum = 0.0;
            for (std::size_t p = 1; p < n; ++p)
                sum += e.entries[p][0] *
                       root_power(n, -static_cast<long long>(j) * static_cast<long long>(p));
            for (std::size_t l = 1; l < m; ++l) {
                cplx wk = root_power(m, -static_cast<long long>(k) * static_cast<long long>(l));
                sum += wk * e.entries[0][l];
                for (std::size_t p = 1; p < n; ++p)
                    sum += e.entries[p][l] * wk *
                           root_power(n, -static_cast<long long>(j) * static_cast<long long>(p));
            }
            if (std::abs(sum.imag()) > std::max(tol, 1e-9) * scale * static_cast<double>(n * m)) {
                std::ostringstream msg;
                msg << "phi: imaginary residue " << sum.imag() << " at (j=" << j << ", k=" << k
                    << "); the conjugation conditions do not yield a real matrix";
                throw numeric_error(msg.str());
            }
            double v = -sum.real();
            if (first || v > best) best = v;
            first = false;
        }
    return best;
}

CirculantBlockMatrix realize_ematrix(const EMatrix& e, double tol) {
    double threshold = phi(e, tol);
    if (e.perron().real() < threshold - tol) {
        std::ostringstream msg;
        msg << "realize_ematrix: perron entry " << e.perron().real()
            << " below the realizability threshold phi = " << threshold;
        throw not_realizable_error(msg.str(), threshold);
    }
    return assemble(s_family_from_ematrix(e));
}

bool is_e_nnss(const EMatrix& e, const EMatrix& rearranged, double tol) {
    if (e.rows != rearranged.rows || e.cols != rearranged.cols) return false;
    if (std::abs(e.perron() - rearranged.perron()) > tol) return false;
    if (multiset_match_distance(e.multiset(), rearranged.multiset()) > tol) return false;
    return validate_ematrix(rearranged, tol).ok();
}

namespace {

std::string layout_key(const CMat& entries) {
    std::ostringstream os;
    for (const auto& row : entries)
        for (const cplx& z : row)
            os << std::llround(z.real() * 1e9) << "," << std::llround(z.imag() * 1e9) << ";";
    return os.str();
}

EMatrix layout_from_values(const EMatrix& base, const CVec& values) {
    EMatrix out = base;
    std::size_t t = 0;
    for (std::size_t i = 0; i < out.rows; ++i)
        for (std::size_t j = 0; j < out.cols; ++j) {
            if (i == 0 && j == 0) continue;
            out.entries[i][j] = values[t++];
        }
    return out;
}

bool value_less(const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

BlockGuoResult min_perron(const EMatrix& e, std::size_t budget) {
    BlockGuoResult res;
    const double tol = 1e-9;

    double trace_sum = 0.0;
    CVec movable;
    for (std::size_t i = 0; i < e.rows; ++i)
        for (std::size_t j = 0; j < e.cols; ++j) {
            if (i == 0 && j == 0) continue;
            movable.push_back(e.entries[i][j]);
            trace_sum += e.entries[i][j].real();
        }
    res.trace_floor = std::max(0.0, -trace_sum);

    bool found = false;
    double best_phi = 0.0;
    EMatrix best_layout = e;

    auto consider = [&](const EMatrix& layout) {
        ++res.candidates_tried;
        if (!validate_ematrix(layout, tol).ok()) return;
        double v;
        try {
            v = phi(layout, tol);
        } catch (const numeric_error&) {
            return;
        }
        if (!found || v < best_phi) {
            found = true;
            best_phi = v;
            best_layout = layout;
        }
    };

    if (e.rows * e.cols <= 12) {
        // exhaustive over distinct arrangements of the movable entries
        CVec values = movable;
        std::sort(values.begin(), values.end(), value_less);
        do {
            if (res.candidates_tried >= budget) {
                res.search_complete = false;
                break;
            }
            consider(layout_from_values(e, values));
        } while (std::next_permutation(values.begin(), values.end(), value_less));
    } else {
        // generator family: column pair swaps, conjugations, column-1 tail
        // transpositions, composed up to depth 3
        res.search_complete = false;  // results here are upper bounds
        auto neighbors = [&](const EMatrix& cur) {
            std::vector<EMatrix> out;
            EMatrix conj_all = cur;
            for (auto& row : conj_all.entries)
                for (cplx& z : row) z = std::conj(z);
            conj_all.entries[0][0] = cur.entries[0][0];
            out.push_back(std::move(conj_all));
            EMatrix conj_col1 = cur;
            for (std::size_t i = 1; i < cur.rows; ++i)
                conj_col1.entries[i][0] = std::conj(cur.entries[i][0]);
            out.push_back(std::move(conj_col1));
            for (std::size_t l = 1; l <= cur.cols / 2; ++l) {
                EMatrix sw = cur;
                for (std::size_t i = 0; i < cur.rows; ++i)
                    std::swap(sw.entries[i][l], sw.entries[i][cur.cols - l]);
                out.push_back(std::move(sw));
            }
            for (std::size_t i = 1; i < cur.rows; ++i)
                for (std::size_t j = i + 1; j < cur.rows; ++j) {
                    EMatrix tp = cur;
                    std::swap(tp.entries[i][0], tp.entries[j][0]);
                    out.push_back(std::move(tp));
                }
            return out;
        };
        std::set<std::string> seen{layout_key(e.entries)};
        std::vector<EMatrix> frontier{e};
        consider(e);
        for (int depth = 0; depth < 3 && res.candidates_tried < budget; ++depth) {
            std::vector<EMatrix> next;
            for (const EMatrix& cur : frontier) {
                for (EMatrix& cand : neighbors(cur)) {
                    if (res.candidates_tried >= budget) break;
                    if (!seen.insert(layout_key(cand.entries)).second) continue;
                    consider(cand);
                    next.push_back(std::move(cand));
                }
            }
            frontier = std::move(next);
        }
    }

    if (!found)
        throw invalid_argument_error("min_perron: no valid rearrangement found within budget");

    res.minimal_perron = std::max(res.trace_floor, best_phi);
    res.layout = best_layout;
    res.layout.entries[0][0] = res.minimal_perron;
    res.witness = realize_ematrix(res.layout, 1e-6);
    return res;
}

}  // namespace nieptk
