#include "schubertlab/schubert.hpp"

#include <stdexcept>

namespace schubertlab {

namespace {

LaurentPolynomial schubert_rec(const Permutation& w) {
    const int n = w.size();
    if (w == Permutation::longest(n)) {
        LaurentPolynomial::Exponents e(n);
        for (int i = 0; i < n; ++i) e[i] = n - 1 - i;
        return LaurentPolynomial::monomial(e, 1);
    }
    for (int i = 1; i < n; ++i)
        if (w(i) < w(i + 1))
            return divided_difference(schubert_rec(w.swapPositions(i)), i);
    throw std::logic_error("schubert: no ascent found below the longest element");
}

} // namespace

LaurentPolynomial schubert(const Permutation& w) {
    LaurentPolynomial f = schubert_rec(w);
    if (f.hasNegativeExponent())
        throw std::logic_error("schubert: negative exponent in result");
    return f;
}

LaurentPolynomial flagged_character(const Diagram& d) {
    const int n = d.rowCount();
    if (n == 0) return LaurentPolynomial::constant(0, 1);
    if (!is_column_convex(d)) throw std::invalid_argument("flagged character: diagram is not column-convex");

    const ReducedDiagram red = reduce_diagram(d);
    LaurentPolynomial f = flagged_character(red.tilde).extended(n);
    for (int i = n - 1; i >= 1; --i) f = demazure(f, i);

    LaurentPolynomial::Exponents mu(n);
    for (int k = 1; k <= n; ++k) mu[k - 1] = static_cast<int>(red.mu.part(k));
    f = f.mulMonomial(mu, 1);
    if (f.hasNegativeExponent())
        throw std::logic_error("flagged character: negative exponent in result");
    return f;
}

} // namespace schubertlab
