#pragma once
#include "schubertlab/combinatorics.hpp"
#include "schubertlab/laurent.hpp"

namespace schubertlab {

// Schubert polynomial: descending induction from x^(n-1, n-2, ..., 0) at the
// longest element, one divided difference per ascent
LaurentPolynomial schubert(const Permutation& w);

// character of the flagged Schur module of a column-convex diagram, by the
// reduction recursion: s_D = x^mu * pi_1 pi_2 ... pi_{n-1} (s_Dtilde)
LaurentPolynomial flagged_character(const Diagram& d);

} // namespace schubertlab
