#include "exact.hpp"

#include <cmath>
#include <numbers>

namespace nieptk::exact {

namespace {

using Poly = std::vector<Rat>;  // ascending coefficients

// exact division, remainder must vanish
Poly poly_div(Poly num, const Poly& den) {
    std::size_t dn = num.size() - 1, dd = den.size() - 1;
    Poly q(dn - dd + 1, Rat(0));
    for (std::size_t k = dn - dd + 1; k-- > 0;) {
        Rat c = num[k + dd] / den[dd];
        q[k] = c;
        for (std::size_t i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    for (const Rat& r : num)
        if (r != 0) throw numeric_error("cyclotomic division: nonzero remainder");
    return q;
}

Poly cyclotomic_poly(std::size_t m) {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    Poly num(m + 1, Rat(0));
    num[0] = -1;
    num[m] = 1;
    for (std::size_t d = 1; d < m; ++d)
        if (m % d == 0) num = poly_div(std::move(num), cyclotomic_poly(d));
    return num;
}

}  // namespace

CycloField::CycloField(std::size_t m) : m_(m) {
    if (m == 0) throw invalid_argument_error("CycloField: order must be positive");
    cyclotomic_ = cyclotomic_poly(m);
    degree_ = cyclotomic_.size() - 1;
    powers_.reserve(m);
    std::vector<Rat> cur(degree_, Rat(0));
    cur[0] = 1;
    for (std::size_t e = 0; e < m; ++e) {
        powers_.push_back(cur);
        // multiply by zeta, reduce mod the cyclotomic polynomial
        std::vector<Rat> next(degree_ + 1, Rat(0));
        for (std::size_t i = 0; i < degree_; ++i) next[i + 1] = cur[i];
        if (next[degree_] != 0) {
            Rat lead = next[degree_];
            for (std::size_t i = 0; i <= degree_; ++i) next[i] -= lead * cyclotomic_[i];
        }
        next.resize(degree_);
        cur = std::move(next);
    }
}

const std::vector<Rat>& CycloField::power(long long e) const {
    long long m = static_cast<long long>(m_);
    return powers_[static_cast<std::size_t>(((e % m) + m) % m)];
}

FieldPtr make_field(std::size_t m) { return std::make_shared<CycloField>(m); }

Cyclo::Cyclo(FieldPtr field, Rat rational) : field_(std::move(field)) {
    coeffs_.assign(field_->degree(), Rat(0));
    coeffs_[0] = std::move(rational);
}

Cyclo Cyclo::root_power(FieldPtr field, long long exponent) {
    Cyclo c(field, Rat(0));
    c.coeffs_ = field->power(exponent);
    return c;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    Cyclo out = *this;
    out += o;
    return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    Cyclo out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= o.coeffs_[i];
    return out;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    Cyclo out(field_, Rat(0));
    // product of basis powers via the zeta^e table would lose cross terms;
    // multiply as polynomials and reduce exponentwise through the table
    std::size_t d = field_->degree();
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (o.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    for (std::size_t e = 0; e < prod.size(); ++e) {
        if (prod[e] == 0) continue;
        const std::vector<Rat>& rep = field_->power(static_cast<long long>(e));
        for (std::size_t i = 0; i < d; ++i) out.coeffs_[i] += prod[e] * rep[i];
    }
    return out;
}

Cyclo Cyclo::scaled(const Rat& r) const {
    Cyclo out = *this;
    for (Rat& c : out.coeffs_) c *= r;
    return out;
}

Cyclo Cyclo::conj() const {
    Cyclo out(field_, Rat(0));
    long long m = static_cast<long long>(field_->order());
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e] == 0) continue;
        const std::vector<Rat>& rep = field_->power(m - static_cast<long long>(e));
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += coeffs_[e] * rep[i];
    }
    return out;
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational() const {
    if (!is_rational()) throw numeric_error("Cyclo::rational: value is not rational");
    return coeffs_[0];
}

bool Cyclo::operator==(const Cyclo& o) const { return coeffs_ == o.coeffs_; }

cplx Cyclo::to_complex() const {
    cplx v = 0.0;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e] == 0) continue;
        double angle = 2.0 * std::numbers::pi * static_cast<double>(e) /
                       static_cast<double>(field_->order());
        v += coeffs_[e].get_d() * cplx(std::cos(angle), std::sin(angle));
    }
    return v;
}

CycloVec dft_eigenvalues(FieldPtr field, const std::vector<Rat>& first_row) {
    std::size_t m = first_row.size();
    if (m != field->order()) throw invalid_argument_error("exact dft: order mismatch");
    CycloVec lambda(m, Cyclo(field, Rat(0)));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
            lambda[k] += Cyclo::root_power(field, static_cast<long long>(k * l))
                             .scaled(first_row[l]);
    return lambda;
}

CycloVec idft_coefficients(FieldPtr field, const CycloVec& spectrum) {
    std::size_t m = spectrum.size();
    if (m != field->order()) throw invalid_argument_error("exact idft: order mismatch");
    Rat inv_m(1, static_cast<unsigned long>(m));
    CycloVec a(m, Cyclo(field, Rat(0)));
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l)
            a[k] += (spectrum[l] *
                     Cyclo::root_power(field, -static_cast<long long>(k) * static_cast<long long>(l)));
        a[k] = a[k].scaled(inv_m);
    }
    return a;
}

std::vector<CycloMat> l_matrices(FieldPtr field,
                                 const std::vector<std::vector<std::vector<Rat>>>& s) {
    std::size_t m = s.size();
    if (m != field->order()) throw invalid_argument_error("exact l_matrices: order mismatch");
    std::size_t n = s[0].size();
    Rat inv_m(1, static_cast<unsigned long>(m));
    std::vector<CycloMat> lk(m, CycloMat(n, CycloVec(n, Cyclo(field, Rat(0)))));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
            Cyclo w = Cyclo::root_power(field,
                                        -static_cast<long long>(k) * static_cast<long long>(l));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    lk[k][i][j] += w.scaled(s[l][i][j] * inv_m);
        }
    return lk;
}

std::vector<std::vector<CycloVec>> assemble(FieldPtr field,
                                            const std::vector<std::vector<std::vector<Rat>>>& s) {
    std::vector<CycloMat> lk = l_matrices(field, s);
    std::size_t m = s.size(), n = s[0].size();
    std::vector<std::vector<CycloVec>> blocks(
        n, std::vector<CycloVec>(n, CycloVec(m, Cyclo(field, Rat(0)))));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t k = 0; k < m; ++k) blocks[u][v][k] = lk[k][u][v];
    return blocks;
}

std::optional<Rat> parse_rational(const std::string& text) {
    std::string t = text;
    // decimal form: shift the point into a denominator power of ten
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        std::string digits = t.substr(0, dot) + t.substr(dot + 1);
        std::size_t frac = t.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+") return std::nullopt;
        for (std::size_t i = 0; i < digits.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(digits[i])) &&
                !(i == 0 && (digits[i] == '-' || digits[i] == '+')))
                return std::nullopt;
        mpz_class num(digits, 10), den(1);
        for (std::size_t i = 0; i < frac; ++i) den *= 10;
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    Rat r;
    if (r.set_str(t, 10) != 0) return std::nullopt;
    r.canonicalize();
    if (r.get_den() == 0) return std::nullopt;
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace nieptk::exact
