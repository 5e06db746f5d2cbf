#pragma once

// Closed-form orders for GL_n(q): the group itself, standard Levi subgroups,
// and centralizers of unipotent elements together with their reductive parts.

#include <vector>

#include <gmpxx.h>

#include "kug/combinatorics.hpp"
#include "kug/poly.hpp"

namespace kug {

/// |GL_n(q)| = q^{n(n-1)/2} prod_{i=1}^n (q^i - 1).
inline QAdicOrder gl_order(int n) {
    check_rank(n);
    IntPoly unit = IntPoly::one();
    for (int i = 1; i <= n; ++i) unit *= q_power(static_cast<std::size_t>(i)) - IntPoly::one();
    return QAdicOrder(static_cast<long>(n) * (n - 1) / 2, std::move(unit));
}

struct LeviDatum {
    Composition mu;
    QAdicOrder order;  // |L| = prod_a |GL_{mu_a}(q)|
    mpz_class weyl_order; // |W_L| = prod_a mu_a!
    long u_dimension = 0; // dim U = sum_{a<b} mu_a mu_b
};

inline LeviDatum levi_datum(const Composition& mu) {
    LeviDatum d{mu, QAdicOrder(), mpz_class(1), 0};
    long before = 0;
    for (int block : mu.parts()) {
        d.order *= gl_order(block);
        d.weyl_order *= factorial(block);
        d.u_dimension += before * block;
        before += block;
    }
    return d;
}

/// |C_{GL_n(q)}(u_lambda)| = q^{sum (lambda'_i)^2 - sum_i m_i(m_i+1)/2} prod_i prod_{j<=m_i} (q^j - 1).
inline QAdicOrder centralizer_order(const Partition& lambda) {
    const Partition dual = conjugate(lambda);
    long k = 0;
    for (int c : dual.parts()) k += static_cast<long>(c) * c;
    IntPoly unit = IntPoly::one();
    for (auto [part, m] : multiplicities(lambda)) {
        k -= static_cast<long>(m) * (m + 1) / 2;
        for (int j = 1; j <= m; ++j) unit *= q_power(static_cast<std::size_t>(j)) - IntPoly::one();
    }
    return QAdicOrder(k, std::move(unit));
}

/// Levi decomposition C_G(u) = C(u) R(u) with C(u) = prod_i GL_{m_i}(q).
struct CentralizerDatum {
    Partition lambda;
    QAdicOrder full_order;            // |C_G(u)|
    std::vector<int> reductive_type;  // block sizes m_i of C(u)
    QAdicOrder reductive_order;       // |C(u)|
    long unipotent_count_exponent = 0; // |C_G(u)_uni| = q^this

    long unipotent_radical_dimension() const { return full_order.p_exponent() - reductive_order.p_exponent(); }
};

inline CentralizerDatum centralizer_datum(const Partition& lambda) {
    CentralizerDatum d;
    d.lambda = lambda;
    d.full_order = centralizer_order(lambda);
    for (auto [part, m] : multiplicities(lambda)) {
        d.reductive_type.push_back(m);
        d.reductive_order *= gl_order(m);
    }
    // Steinberg on C(u): |C(u)_uni| = |C(u)|_p^2, and every element of R(u) is unipotent.
    d.unipotent_count_exponent = d.reductive_order.p_exponent() + d.full_order.p_exponent();
    if (d.full_order.prime_to_p_part() != d.reductive_order.prime_to_p_part())
        throw InvariantError("centralizer_datum: p'-parts of C_G(u) and C(u) differ for " + lambda.to_string());
    return d;
}

/// |GL_n(q)_uni| = q^{n(n-1)}.
inline IntPoly unipotent_total(int n) {
    check_rank(n);
    return q_power(static_cast<std::size_t>(n * (n - 1)));
}

} // namespace kug
