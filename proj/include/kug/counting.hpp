#pragma once

// k(U, G_uni) for U the unipotent radical of the standard parabolic of GL_n(q)
// with Levi blocks mu, as an exact integer polynomial in q.
//
// Main route (Green functions):
//   k = |L|_{p'} / |W_L| * sum_{lambda |- n} |C(u_lambda)|_p / |C(u_lambda)|_{p'}
//                         * sum_{w in W_L} (-1)^{l(w)} Q^lambda_{type(w)}(q)
// where C(u) is the reductive part of the centralizer.
//
// Check route (orbit counting):
//   k = |L| * sum_lambda |C_G(u_lambda)_uni| / |C_G(u_lambda)| * f_U(u_lambda),
//   f_U(u) = (|L|_p |W_L|)^{-1} sum_{w in W_L} (-1)^{l(w)} Q^lambda_{type(w)}(q),
// f_U(u) being the number of G-conjugates of U containing u.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kug/cache.hpp"
#include "kug/combinatorics.hpp"
#include "kug/green.hpp"
#include "kug/group_data.hpp"
#include "kug/poly.hpp"

namespace kug {

struct CountResult {
    int n = 0;
    Composition mu;
    IntPoly polynomial;
    std::map<Partition, RatFraction> per_class_terms; // lambda-summand of the main route
    std::map<Partition, IntPoly> f_values;            // f_U(u_lambda)
    std::vector<mpz_class> qminus1_coeffs;
    bool qminus1_nonneg = true;
};

/// Coefficients in the basis (q-1)^i and whether all are nonnegative. Reported,
/// never enforced.
inline std::pair<std::vector<mpz_class>, bool> qminus1_report(const IntPoly& polynomial) {
    std::vector<mpz_class> c = rebase(polynomial, mpz_class(1));
    bool nonneg = std::all_of(c.begin(), c.end(), [](const mpz_class& x) { return x >= 0; });
    return {std::move(c), nonneg};
}

inline std::pair<std::vector<mpz_class>, bool> qminus1_report(const CountResult& r) {
    return qminus1_report(r.polynomial);
}

/// Counting over a fixed Green table.
class Counter {
public:
    explicit Counter(const GreenTable& green) : green_(green) {}

    int n() const noexcept { return green_.n(); }

    // sum_{w in W_L} (-1)^{l(w)} Q^lambda_{type(w)}, evaluated class by class.
    IntPoly weyl_sum(const Composition& mu, const Partition& lambda) const {
        check_sizes(mu, lambda);
        const std::size_t lam = green_.index_of(lambda);
        IntPoly acc;
        for (const SignedCycleTypeTerm& t : levi_signed_cycle_types(mu)) {
            mpz_class w = t.sign < 0 ? mpz_class(-t.weight) : t.weight;
            acc += green_.at(lam, green_.index_of(t.rho)) * w;
        }
        return acc;
    }

    IntPoly f_polynomial(const Composition& mu, const Partition& lambda) const {
        const LeviDatum levi = levi_datum(mu);
        const IntPoly divisor = levi.order.p_part() * levi.weyl_order;
        return exact_div(weyl_sum(mu, lambda), divisor);
    }

    CountResult k_unipotent(const Composition& mu) const {
        check_sizes(mu, Partition::column(n()));
        const LeviDatum levi = levi_datum(mu);
        CountResult r;
        r.n = n();
        r.mu = mu;
        RatFraction total;
        const IntPoly f_divisor = levi.order.p_part() * levi.weyl_order;
        for (const Partition& lambda : green_.partitions()) {
            const IntPoly sum = weyl_sum(mu, lambda);
            const CentralizerDatum cd = centralizer_datum(lambda);
            const IntPoly num = levi.order.prime_to_p_part() * cd.reductive_order.p_part() * sum;
            const IntPoly den = cd.reductive_order.prime_to_p_part() * levi.weyl_order;
            RatFraction term(num, den);
            total += term;
            r.per_class_terms.emplace(lambda, std::move(term));
            r.f_values.emplace(lambda, exact_div(sum, f_divisor));
        }
        r.polynomial = to_intpoly(total);
        if (mu.is_borel()) {
            const long expected = static_cast<long>(n()) * (n() - 1) / 2;
            // Leading coefficient is 1 from n = 3 on; n = 2 gives 2q - 1.
            if (r.polynomial.degree() != expected || (n() >= 3 && r.polynomial.leading() != 1))
                throw InvariantError("Borel count for n = " + std::to_string(n()) + " violates the dim U degree law");
        }
        std::tie(r.qminus1_coeffs, r.qminus1_nonneg) = qminus1_report(r.polynomial);
        return r;
    }

    IntPoly k_via_lemma(const Composition& mu) const {
        check_sizes(mu, Partition::column(n()));
        const LeviDatum levi = levi_datum(mu);
        RatFraction total;
        for (const Partition& lambda : green_.partitions()) {
            const CentralizerDatum cd = centralizer_datum(lambda);
            const IntPoly f = f_polynomial(mu, lambda);
            total += RatFraction(q_power(static_cast<std::size_t>(cd.unipotent_count_exponent)) * f,
                                 cd.full_order.polynomial());
        }
        return to_intpoly(total * RatFraction(levi.order.polynomial()));
    }

    std::vector<Partition> vanishing_support(const Composition& mu) const {
        std::vector<Partition> out;
        for (const Partition& lambda : green_.partitions())
            if (!f_polynomial(mu, lambda).is_zero()) out.push_back(lambda);
        return out;
    }

private:
    void check_sizes(const Composition& mu, const Partition& lambda) const {
        if (mu.size() != n() || lambda.size() != n())
            throw InputError("sizes of levi " + mu.to_string() + " and class " + lambda.to_string() +
                             " must both equal n = " + std::to_string(n()));
    }

    const GreenTable& green_;
};

inline void check_levi(int n, const Composition& mu) {
    if (n < 1) throw InputError("n must be at least 1");
    if (mu.size() != n) throw InputError("levi blocks " + mu.to_string() + " do not sum to n = " + std::to_string(n));
}

inline IntPoly f_polynomial(int n, const Composition& mu, const Partition& lambda,
                            GreenTables& tables = GreenTables::shared()) {
    check_levi(n, mu);
    return Counter(tables.get(n)).f_polynomial(mu, lambda);
}

inline CountResult k_unipotent(int n, const Composition& mu, GreenTables& tables = GreenTables::shared()) {
    check_levi(n, mu);
    return Counter(tables.get(n)).k_unipotent(mu);
}

inline IntPoly k_via_lemma(int n, const Composition& mu, GreenTables& tables = GreenTables::shared()) {
    check_levi(n, mu);
    return Counter(tables.get(n)).k_via_lemma(mu);
}

inline std::vector<Partition> vanishing_support(int n, const Composition& mu,
                                                GreenTables& tables = GreenTables::shared()) {
    check_levi(n, mu);
    return Counter(tables.get(n)).vanishing_support(mu);
}

struct AssociatedClass {
    Partition block_type;
    std::vector<Composition> members;
    IntPoly polynomial;
};

/// Groups all compositions of n by block-size multiset and checks that each
/// group yields one polynomial. A disagreement is an InvariantError.
inline std::vector<AssociatedClass> associated_invariance(int n, GreenTables& tables = GreenTables::shared()) {
    if (n < 1) throw InputError("n must be at least 1");
    const Counter counter(tables.get(n));
    std::map<Partition, AssociatedClass> groups;
    for (const Composition& mu : compositions_of(n)) {
        IntPoly k = counter.k_unipotent(mu).polynomial;
        auto [it, fresh] = groups.try_emplace(mu.block_type(), AssociatedClass{mu.block_type(), {}, k});
        if (!fresh && it->second.polynomial != k)
            throw InvariantError("associated parabolics disagree: levi " + it->second.members.front().to_string() +
                                 " gives " + to_string(it->second.polynomial) + ", levi " + mu.to_string() + " gives " +
                                 to_string(k));
        it->second.members.push_back(mu);
    }
    std::vector<AssociatedClass> out;
    for (const Partition& p : partitions_of(n)) out.push_back(std::move(groups.at(p)));
    return out;
}

} // namespace kug
