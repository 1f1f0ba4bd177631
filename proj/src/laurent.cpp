#include "schubertlab/laurent.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "schubertlab/checked_arith.hpp"

namespace schubertlab {

LaurentPolynomial::LaurentPolynomial(int arity) : arity_(arity) {
    if (arity < 0) throw std::invalid_argument("polynomial: negative arity");
}

LaurentPolynomial LaurentPolynomial::constant(int arity, std::int64_t c) {
    LaurentPolynomial f(arity);
    f.addTerm(Exponents(arity, 0), c);
    return f;
}

LaurentPolynomial LaurentPolynomial::monomial(Exponents exp, std::int64_t coeff) {
    LaurentPolynomial f(static_cast<int>(exp.size()));
    f.addTerm(exp, coeff);
    return f;
}

LaurentPolynomial LaurentPolynomial::variable(int arity, int i) {
    if (i < 1 || i > arity) throw std::invalid_argument("polynomial: variable index out of range");
    Exponents e(arity, 0);
    e[i - 1] = 1;
    return monomial(e, 1);
}

std::int64_t LaurentPolynomial::coeff(const Exponents& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t LaurentPolynomial::coefficientSum() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : terms_) s = checked_add(s, c);
    return s;
}

void LaurentPolynomial::addTerm(const Exponents& exp, std::int64_t c) {
    if (static_cast<int>(exp.size()) != arity_)
        throw std::invalid_argument("polynomial: exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("polynomial: arity mismatch in +");
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.addTerm(e, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("polynomial: arity mismatch in -");
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.addTerm(e, checked_sub(0, c));
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("polynomial: arity mismatch in *");
    LaurentPolynomial r(arity_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(arity_);
            for (int t = 0; t < arity_; ++t) e[t] = ea[t] + eb[t];
            r.addTerm(e, checked_mul(ca, cb));
        }
    return r;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
}

LaurentPolynomial LaurentPolynomial::mulMonomial(const Exponents& exp, std::int64_t c) const {
    if (static_cast<int>(exp.size()) != arity_)
        throw std::invalid_argument("polynomial: exponent arity mismatch");
    LaurentPolynomial r(arity_);
    for (const auto& [e, k] : terms_) {
        Exponents e2(arity_);
        for (int t = 0; t < arity_; ++t) e2[t] = e[t] + exp[t];
        r.addTerm(e2, checked_mul(k, c));
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::swapped(int i) const {
    if (i < 1 || i >= arity_) throw std::invalid_argument("polynomial: swap index out of range");
    LaurentPolynomial r(arity_);
    for (const auto& [e, c] : terms_) {
        Exponents e2 = e;
        std::swap(e2[i - 1], e2[i]);
        r.addTerm(e2, c);
    }
    return r;
}

bool LaurentPolynomial::symmetricIn(int i) const {
    return *this == swapped(i);
}

bool LaurentPolynomial::hasNegativeExponent() const {
    for (const auto& [e, c] : terms_)
        for (int v : e)
            if (v < 0) return true;
    return false;
}

LaurentPolynomial LaurentPolynomial::extended(int newArity) const {
    if (newArity < arity_) throw std::invalid_argument("polynomial: extension shrinks arity");
    LaurentPolynomial r(newArity);
    for (const auto& [e, c] : terms_) {
        Exponents e2 = e;
        e2.resize(newArity, 0);
        r.addTerm(e2, c);
    }
    return r;
}

std::string LaurentPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const std::int64_t a = c >= 0 ? c : -c;
        bool anyVar = false;
        for (int v : e) anyVar |= v != 0;
        if (a != 1 || !anyVar) os << a;
        for (int t = 0; t < arity_; ++t) {
            if (e[t] == 0) continue;
            os << "x" << (t + 1);
            if (e[t] != 1) os << "^" << e[t];
        }
    }
    return os.str();
}

LaurentPolynomial divided_difference(const LaurentPolynomial& f, int i) {
    const int m = f.arity();
    if (i < 1 || i >= m) throw std::invalid_argument("divided difference: index out of range");
    LaurentPolynomial r(m);
    for (const auto& [e, c] : f.terms()) {
        const int a = e[i - 1], b = e[i];
        if (a == b) continue;
        // (x^a y^b - x^b y^a)/(x - y) = sign * sum of x^p y^q,
        // p + q = a + b - 1, p running over [min(a,b), max(a,b) - 1]
        const int lo = std::min(a, b), hi = std::max(a, b) - 1;
        const std::int64_t s = a > b ? c : checked_sub(0, c);
        for (int p = lo; p <= hi; ++p) {
            LaurentPolynomial::Exponents e2 = e;
            e2[i - 1] = p;
            e2[i] = a + b - 1 - p;
            r.addTerm(e2, s);
        }
    }
    return r;
}

LaurentPolynomial demazure(const LaurentPolynomial& f, int i) {
    const int m = f.arity();
    if (i < 1 || i >= m) throw std::invalid_argument("demazure: index out of range");
    LaurentPolynomial::Exponents xi(m, 0);
    xi[i - 1] = 1;
    return divided_difference(f.mulMonomial(xi, 1), i);
}

LaurentPolynomial box_sum_polynomial(const DemazureParams& p) {
    if (p.n1 < 0 || p.n2 < 0) throw std::invalid_argument("box sum: negative degree bound");
    std::int64_t total = 0;
    for (const auto& [mu, nu] : p.bounds) {
        if (mu > nu) throw std::invalid_argument("box sum: mu > nu");
        total = checked_add(total, checked_add(mu, nu));
    }
    if (total > checked_add(p.n1, p.n2))
        throw std::invalid_argument("box sum: sum(mu + nu) exceeds N1 + N2");

    LaurentPolynomial f(2);
    // iterate the product of integer boxes, accumulating |c|
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t t, std::int64_t acc) {
        if (t == p.bounds.size()) {
            f.addTerm({static_cast<int>(p.n1 - acc), static_cast<int>(acc - p.n2)}, 1);
            return;
        }
        for (std::int64_t c = p.bounds[t].first; c <= p.bounds[t].second; ++c)
            rec(t + 1, checked_add(acc, c));
    };
    rec(0, 0);
    return f;
}

bool verify_lemma_di(const DemazureParams& p) {
    const LaurentPolynomial lhs = demazure(box_sum_polynomial(p), 1);

    std::int64_t total = 0;
    for (const auto& [mu, nu] : p.bounds) total = checked_add(total, checked_add(mu, nu));
    DemazureParams q = p;
    q.bounds.push_back({0, checked_sub(checked_add(p.n1, p.n2), total)});
    return lhs == box_sum_polynomial(q);
}

} // namespace schubertlab
