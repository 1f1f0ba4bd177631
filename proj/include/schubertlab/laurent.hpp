#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

// sparse Laurent polynomials with checked 64-bit coefficients, plus the
// divided-difference and Demazure operators acting on them
namespace schubertlab {

class LaurentPolynomial {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, std::int64_t>; // lex order = canonical order

    explicit LaurentPolynomial(int arity);
    static LaurentPolynomial constant(int arity, std::int64_t c);
    static LaurentPolynomial monomial(Exponents exp, std::int64_t coeff);
    static LaurentPolynomial variable(int arity, int i); // x_i, 1-based

    int arity() const { return arity_; }
    bool isZero() const { return terms_.empty(); }
    int termCount() const { return static_cast<int>(terms_.size()); }
    const TermMap& terms() const { return terms_; }
    std::int64_t coeff(const Exponents& exp) const;
    std::int64_t coefficientSum() const; // value at x = (1,...,1)

    void addTerm(const Exponents& exp, std::int64_t c); // merges, drops zeros

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    bool operator==(const LaurentPolynomial& o) const;
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    LaurentPolynomial mulMonomial(const Exponents& exp, std::int64_t c) const;
    LaurentPolynomial swapped(int i) const; // s_i: exchange x_i and x_{i+1}
    bool symmetricIn(int i) const;
    bool hasNegativeExponent() const;
    LaurentPolynomial extended(int newArity) const; // append zero exponents

    std::string str() const; // human-readable, for diagnostics

private:
    int arity_;
    TermMap terms_;
};

// del_i f = (f - s_i f) / (x_i - x_{i+1}), computed monomial-wise through the
// geometric-sum identity (exact on Laurent monomials)
LaurentPolynomial divided_difference(const LaurentPolynomial& f, int i);

// pi_i f = del_i (x_i f); fixes f when f is symmetric in x_i, x_{i+1}
LaurentPolynomial demazure(const LaurentPolynomial& f, int i);

// data for the two-variable box-sum identity: f = sum over c in prod [mu_t, nu_t]
// of x1^(N1 - |c|) x2^(|c| - N2); applying pi_1 appends one more summation index
// with range [0, N1 + N2 - sum(mu_t + nu_t)]
struct DemazureParams {
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> bounds; // mu_t <= nu_t
};

LaurentPolynomial box_sum_polynomial(const DemazureParams& p);
bool verify_lemma_di(const DemazureParams& p);

} // namespace schubertlab
