#ifndef NIEPTK_EXACT_HPP
#define NIEPTK_EXACT_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <vector>

#include "types.hpp"

namespace nieptk::exact {

using Rat = mpq_class;

// The m-th cyclotomic field Q(zeta_m), elements as polynomials in zeta of
// degree < phi(m) (reduced modulo the m-th cyclotomic polynomial). Shared by
// all Cyclo values of one computation.
class CycloField {
  public:
    explicit CycloField(std::size_t m);
    std::size_t order() const { return m_; }
    std::size_t degree() const { return degree_; }
    // zeta^e reduced into the basis, exponent taken mod m
    const std::vector<Rat>& power(long long e) const;

  private:
    std::size_t m_;
    std::size_t degree_;
    std::vector<Rat> cyclotomic_;              // monic, ascending, degree phi(m)
    std::vector<std::vector<Rat>> powers_;     // zeta^0 .. zeta^{m-1} in the basis
};

using FieldPtr = std::shared_ptr<const CycloField>;

FieldPtr make_field(std::size_t m);

// Element of Q(zeta_m).
class Cyclo {
  public:
    Cyclo() = default;
    Cyclo(FieldPtr field, Rat rational);
    static Cyclo root_power(FieldPtr field, long long exponent);

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo scaled(const Rat& r) const;
    Cyclo conj() const;  // zeta -> zeta^{-1}

    bool is_rational() const;
    Rat rational() const;  // requires is_rational()
    bool operator==(const Cyclo& o) const;
    cplx to_complex() const;

    const FieldPtr& field() const { return field_; }

  private:
    FieldPtr field_;
    std::vector<Rat> coeffs_;  // degree < field.degree()
    void normalize();
};

// Exact counterparts of the DFT maps and the block pipeline, for rational
// input data. Values live in Q(zeta_m).
using CycloVec = std::vector<Cyclo>;
using CycloMat = std::vector<CycloVec>;

CycloVec dft_eigenvalues(FieldPtr field, const std::vector<Rat>& first_row);
CycloVec idft_coefficients(FieldPtr field, const CycloVec& spectrum);

// L_k = (1/m) sum_l S_l zeta^{-kl} for rational S matrices, and the block
// first rows a(u,v)_k = L_k[u][v].
std::vector<CycloMat> l_matrices(FieldPtr field, const std::vector<std::vector<std::vector<Rat>>>& s);
std::vector<std::vector<CycloVec>> assemble(FieldPtr field,
                                            const std::vector<std::vector<std::vector<Rat>>>& s);

std::optional<Rat> parse_rational(const std::string& text);
std::string to_string(const Rat& r);

}  // namespace nieptk::exact

#endif
