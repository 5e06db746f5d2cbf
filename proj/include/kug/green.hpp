#pragma once

// Green polynomials of GL_n(q):
//
//   Q^lambda_rho(q) = sum_{mu |- n} chi^mu(rho) * Ktilde_{mu,lambda}(q),
//   Ktilde_{mu,lambda}(q) = q^{n(lambda)} K_{mu,lambda}(1/q),
//
// with chi^mu the irreducible S_n characters (Murnaghan-Nakayama) and K the
// Kostka-Foulkes polynomials realised through the charge statistic.
// Q^lambda_rho is the value of the Green function of a torus T_w, w of cycle
// type rho, at a unipotent element of Jordan type lambda.

#include <cstddef>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kug/combinatorics.hpp"
#include "kug/errors.hpp"
#include "kug/poly.hpp"

namespace kug {

// -- symmetric group characters ----------------------------------------------

namespace detail {

// Beta-set (first-column hook lengths) of lambda padded to `len` parts, decreasing.
inline std::vector<int> beta_set(const std::vector<int>& parts) {
    const int len = static_cast<int>(parts.size());
    std::vector<int> beta(parts.size());
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (len - 1 - i);
    return beta;
}

inline std::vector<int> from_beta_set(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return parts;
}

class MurnaghanNakayama {
public:
    // chi^shape(cycles[from..]) where the remaining cycles sum to |shape|.
    mpz_class value(const std::vector<int>& shape, const std::vector<int>& cycles, std::size_t from) {
        if (from == cycles.size()) return shape.empty() ? 1 : 0;
        std::vector<int> rest(cycles.begin() + static_cast<long>(from), cycles.end());
        auto key = std::make_pair(shape, rest);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const int r = cycles[from];
        const std::vector<int> beta = beta_set(shape);
        mpz_class total = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            const int target = beta[i] - r;
            if (target < 0) continue;
            if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
            // Height of the removed rim hook = beads strictly between target and beta[i].
            int between = 0;
            for (int b : beta)
                if (b > target && b < beta[i]) ++between;
            std::vector<int> moved = beta;
            moved[i] = target;
            mpz_class sub = value(from_beta_set(std::move(moved)), cycles, from + 1);
            if (between % 2) total -= sub;
            else total += sub;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::map<std::pair<std::vector<int>, std::vector<int>>, mpz_class> memo_;
};

} // namespace detail

/// chi^mu(rho) by the Murnaghan-Nakayama rule.
inline mpz_class character_value(const Partition& mu, const Partition& rho) {
    if (mu.size() != rho.size()) throw InputError("character_value: |mu| != |rho|");
    static std::mutex mutex;
    static detail::MurnaghanNakayama engine;
    std::lock_guard lock(mutex);
    return engine.value(mu.parts(), rho.parts(), 0);
}

/// values[i][j] = chi^{parts[i]}(parts[j]) in canonical partition order.
struct SnCharacterTable {
    int n = 0;
    std::vector<Partition> parts;
    std::vector<std::vector<mpz_class>> values;

    static SnCharacterTable compute(int n) {
        SnCharacterTable t;
        t.n = n;
        t.parts = partitions_of(n);
        detail::MurnaghanNakayama engine;
        t.values.assign(t.parts.size(), std::vector<mpz_class>(t.parts.size()));
        for (std::size_t i = 0; i < t.parts.size(); ++i)
            for (std::size_t j = 0; j < t.parts.size(); ++j)
                t.values[i][j] = engine.value(t.parts[i].parts(), t.parts[j].parts(), 0);
        return t;
    }
};

// -- tableaux and charge ----------------------------------------------------

/// Rows of a semistandard Young tableau, top row first (English notation).
using Tableau = std::vector<std::vector<int>>;

/// Every SSYT of the given shape with content[i-1] entries equal to i. Built by
/// adding one horizontal strip of letter i at a time.
inline std::vector<Tableau> ssyt_enumerate(const Partition& shape, const Partition& content) {
    if (shape.size() != content.size()) throw InputError("ssyt_enumerate: |shape| != |content|");
    std::vector<Tableau> out;
    if (!dominance_leq(content, shape)) return out;

    const std::size_t rows = shape.length();
    Tableau cur(rows);
    auto place = [&](auto&& self, std::size_t letter) -> void {
        if (letter == content.length()) {
            out.push_back(cur);
            return;
        }
        const int count = content.parts()[letter];
        const int value = static_cast<int>(letter) + 1;
        // Row lengths before this strip bound the strip: a new cell in row i may
        // not sit below a cell added in this strip, i.e. new length <= old length of row i-1.
        std::vector<int> old(rows);
        for (std::size_t i = 0; i < rows; ++i) old[i] = static_cast<int>(cur[i].size());
        auto fill = [&](auto&& fill_self, std::size_t row, int left) -> void {
            if (row == rows) {
                if (left == 0) self(self, letter + 1);
                return;
            }
            int cap = shape.parts()[row] - old[row];
            if (row > 0) cap = std::min(cap, old[row - 1] - old[row]);
            cap = std::min(cap, left);
            for (int a = cap; a >= 0; --a) {
                cur[row].insert(cur[row].end(), static_cast<std::size_t>(a), value);
                fill_self(fill_self, row + 1, left - a);
                cur[row].resize(static_cast<std::size_t>(old[row]));
            }
        };
        fill(fill, 0, count);
    };
    place(place, 0);
    return out;
}

/// Reading word: rows from bottom to top, each left to right.
inline std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> w;
    for (auto row = t.rbegin(); row != t.rend(); ++row) w.insert(w.end(), row->begin(), row->end());
    return w;
}

/// Lascoux-Schutzenberger charge of a word with partition content.
///
/// Standard subwords are extracted repeatedly: starting from the right end,
/// scan leftwards for the rightmost unused 1, then continue leftwards for 2, 3,
/// ..., wrapping to the right end when necessary. Letter 1 has index 0; letter
/// r+1 has the index of r, plus one if the scan wrapped to reach it. The charge
/// is the sum of all indices over all subwords.
inline long charge_of_word(const std::vector<int>& word) {
    const std::size_t len = word.size();
    std::vector<bool> used(len, false);
    std::size_t remaining = len;
    long total = 0;
    while (remaining > 0) {
        int letter = 1;
        long index = 0;
        // Virtual start just right of the end, so the first leftward scan covers everything.
        std::size_t pos = len;
        while (true) {
            bool found = false;
            bool wrapped = false;
            std::size_t p = pos;
            for (std::size_t step = 0; step < len; ++step) {
                if (p == 0) {
                    p = len;
                    wrapped = true;
                }
                --p;
                if (!used[p] && word[p] == letter) {
                    found = true;
                    break;
                }
            }
            if (!found) break;
            if (letter > 1 && wrapped) ++index;
            total += index;
            used[p] = true;
            --remaining;
            pos = p;
            ++letter;
        }
        if (letter == 1) throw InputError("charge: word content is not a partition");
    }
    return total;
}

inline long charge(const Tableau& t) { return charge_of_word(reading_word(t)); }

/// K_{mu,lambda}(t) = sum over SSYT(mu, lambda) of t^charge.
inline IntPoly kostka_foulkes(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) throw InputError("kostka_foulkes: |mu| != |lambda|");
    std::vector<mpz_class> c;
    for (const Tableau& t : ssyt_enumerate(mu, lambda)) {
        const auto k = static_cast<std::size_t>(charge(t));
        if (c.size() <= k) c.resize(k + 1, mpz_class(0));
        c[k] += 1;
    }
    return IntPoly(std::move(c));
}

/// q^{n(lambda)} K(1/q) for a Kostka-Foulkes polynomial K of the given lambda.
inline IntPoly modify_kostka(const IntPoly& k, const Partition& lambda) {
    const long top = n_stat(lambda);
    if (k.degree() > top)
        throw InvariantError("Kostka-Foulkes degree exceeds n(lambda) for lambda = " + lambda.to_string());
    std::vector<mpz_class> c(static_cast<std::size_t>(top + 1), mpz_class(0));
    for (std::size_t i = 0; i < k.coeffs().size(); ++i) c[static_cast<std::size_t>(top) - i] = k.coeffs()[i];
    return IntPoly(std::move(c));
}

inline IntPoly modified_kostka(const Partition& mu, const Partition& lambda) {
    return modify_kostka(kostka_foulkes(mu, lambda), lambda);
}

/// entries[i][j] = K_{parts[i], parts[j]}(t).
struct KostkaFoulkesTable {
    int n = 0;
    std::vector<Partition> parts;
    std::vector<std::vector<IntPoly>> entries;

    static KostkaFoulkesTable compute(int n) {
        KostkaFoulkesTable t;
        t.n = n;
        t.parts = partitions_of(n);
        t.entries.assign(t.parts.size(), std::vector<IntPoly>(t.parts.size()));
        for (std::size_t i = 0; i < t.parts.size(); ++i)
            for (std::size_t j = 0; j < t.parts.size(); ++j)
                if (dominance_leq(t.parts[j], t.parts[i])) t.entries[i][j] = kostka_foulkes(t.parts[i], t.parts[j]);
        return t;
    }
};

/// Q^lambda_rho for all lambda, rho |- n, in canonical partition order.
class GreenTable {
public:
    GreenTable() = default;

    static GreenTable from_tables(const SnCharacterTable& chars, const KostkaFoulkesTable& kf) {
        if (chars.n != kf.n || chars.parts != kf.parts) throw InvariantError("GreenTable: table shapes disagree");
        GreenTable g;
        g.n_ = chars.n;
        g.parts_ = chars.parts;
        for (std::size_t i = 0; i < g.parts_.size(); ++i) g.index_.emplace(g.parts_[i], i);
        const std::size_t np = g.parts_.size();
        g.q_.assign(np, std::vector<IntPoly>(np));
        for (std::size_t lam = 0; lam < np; ++lam) {
            std::vector<IntPoly> ktilde(np);
            for (std::size_t mu = 0; mu < np; ++mu)
                if (!kf.entries[mu][lam].is_zero()) ktilde[mu] = modify_kostka(kf.entries[mu][lam], g.parts_[lam]);
            for (std::size_t rho = 0; rho < np; ++rho) {
                IntPoly acc;
                for (std::size_t mu = 0; mu < np; ++mu)
                    if (!ktilde[mu].is_zero()) acc += ktilde[mu] * chars.values[mu][rho];
                g.q_[lam][rho] = std::move(acc);
            }
        }
        return g;
    }

    static GreenTable compute(int n) {
        return from_tables(SnCharacterTable::compute(n), KostkaFoulkesTable::compute(n));
    }

    int n() const noexcept { return n_; }
    const std::vector<Partition>& partitions() const noexcept { return parts_; }

    std::size_t index_of(const Partition& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) throw InputError("partition " + p.to_string() + " is not a partition of " + std::to_string(n_));
        return it->second;
    }

    const IntPoly& at(const Partition& lambda, const Partition& rho) const {
        return q_[index_of(lambda)][index_of(rho)];
    }

    const IntPoly& at(std::size_t lambda, std::size_t rho) const { return q_[lambda][rho]; }

private:
    int n_ = 0;
    std::vector<Partition> parts_;
    std::map<Partition, std::size_t> index_;
    std::vector<std::vector<IntPoly>> q_;
};

inline IntPoly green_polynomial(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw InputError("green_polynomial: |lambda| != |rho|");
    IntPoly acc;
    for (const Partition& mu : partitions_of(lambda.size())) {
        if (!dominance_leq(lambda, mu)) continue;
        acc += modified_kostka(mu, lambda) * character_value(mu, rho);
    }
    return acc;
}

} // namespace kug
