#pragma once

// Partitions, compositions and the symmetric-group class bookkeeping that
// indexes every other table in the library.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "kug/errors.hpp"

namespace kug {

inline constexpr int max_rank = 64;

inline void check_rank(int n) {
    if (n < 0 || n > max_rank)
        throw InputError("rank " + std::to_string(n) + " outside [0, " + std::to_string(max_rank) + "]");
}

/// A weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw InputError("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw InputError("partition parts must be weakly decreasing");
        }
        check_rank(size());
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Sorts the parts into decreasing order first.
    static Partition from_unsorted(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    // (1, 1, ..., 1) with n parts.
    static Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

    // (n), or the empty partition for n = 0.
    static Partition row(int n) { return n == 0 ? Partition() : Partition({n}); }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // Part i (0-based), zero past the end.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    auto operator<=>(const Partition&) const = default;

    // Comma-joined parts; the empty partition renders as "".
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    static Partition parse(std::string_view text);

private:
    std::vector<int> parts_;
};

/// Ordered block sizes of a standard Levi subgroup. Order is significant.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p <= 0)
                throw InputError("composition parts must be positive");
        check_rank(size());
    }

    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    static Composition borel(int n) { return Composition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool is_borel() const noexcept {
        return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
    }

    // The multiset of block sizes, as a partition.
    Partition block_type() const { return Partition::from_unsorted(parts_); }

    auto operator<=>(const Composition&) const = default;

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    static Composition parse(std::string_view text);

private:
    std::vector<int> parts_;
};

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            throw InputError("empty entry in integer list '" + std::string(text) + "'");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw InputError("not an integer: '" + token + "'");
        }
        if (used != token.size())
            throw InputError("not an integer: '" + token + "'");
        out.push_back(v);
        token.clear();
    };
    bool any = false;
    for (char c : text) {
        if (c == ' ' || c == '(' || c == ')' || c == '[' || c == ']') continue;
        any = true;
        if (c == ',') flush();
        else token += c;
    }
    if (any) flush();
    return out;
}

} // namespace detail

inline Partition Partition::parse(std::string_view text) { return Partition(detail::parse_int_list(text)); }
inline Composition Composition::parse(std::string_view text) { return Composition(detail::parse_int_list(text)); }

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(int n) {
    check_rank(n);
    std::vector<Partition> out;
    std::vector<int> cur;
    // Recursive descent with a running bound yields reverse-lex order directly.
    auto rec = [&](auto&& self, int remaining, int bound) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int part = std::min(remaining, bound); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// All 2^(n-1) compositions of n (n >= 1), lexicographically descending.
inline std::vector<Composition> compositions_of(int n) {
    check_rank(n);
    std::vector<Composition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int part = remaining; part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part);
            cur.pop_back();
        }
    };
    if (n > 0) rec(rec, n);
    return out;
}

inline Partition conjugate(const Partition& lambda) {
    std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda.parts())
        for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
    return Partition(std::move(out));
}

/// n(lambda) = sum_i (i-1) lambda_i.
inline long n_stat(const Partition& lambda) {
    long total = 0;
    for (std::size_t i = 0; i < lambda.length(); ++i) total += static_cast<long>(i) * lambda[i];
    return total;
}

/// part value -> number of parts with that value
inline std::map<int, int> multiplicities(const Partition& lambda) {
    std::map<int, int> m;
    for (int part : lambda.parts()) ++m[part];
    return m;
}

inline mpz_class factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// z_rho = prod_i i^{m_i} m_i!, the centralizer order in S_n of a permutation of cycle type rho.
inline mpz_class z_stat(const Partition& rho) {
    mpz_class z = 1;
    for (auto [part, mult] : multiplicities(rho)) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(mult));
        z *= pw * factorial(mult);
    }
    return z;
}

/// Dominance order: lambda <= nu iff every partial sum of lambda is at most nu's.
inline bool dominance_leq(const Partition& lambda, const Partition& nu) {
    if (lambda.size() != nu.size())
        throw InputError("dominance_leq: partitions of different sizes");
    long a = 0, b = 0;
    std::size_t len = std::max(lambda.length(), nu.length());
    for (std::size_t i = 0; i < len; ++i) {
        a += lambda[i];
        b += nu[i];
        if (a > b) return false;
    }
    return true;
}

/// One class of W_L = S_{mu_1} x ... x S_{mu_k}: cycle types per block, concatenated.
struct SignedCycleTypeTerm {
    Partition rho;
    mpz_class weight; // number of w in W_L of this block-wise type
    int sign = 1;     // (-1)^{l(w)}, constant on the class

    bool operator==(const SignedCycleTypeTerm& o) const {
        return rho == o.rho && weight == o.weight && sign == o.sign;
    }
};

/// Conjugacy classes of the Weyl group of the standard Levi for mu, one term per
/// tuple (rho^(1) |- mu_1, ..., rho^(k) |- mu_k).
inline std::vector<SignedCycleTypeTerm> levi_signed_cycle_types(const Composition& mu) {
    std::vector<std::vector<Partition>> per_block;
    per_block.reserve(mu.length());
    for (int block : mu.parts()) per_block.push_back(partitions_of(block));

    std::vector<SignedCycleTypeTerm> out;
    std::vector<int> concat;
    auto rec = [&](auto&& self, std::size_t a, const mpz_class& weight, int sign) -> void {
        if (a == per_block.size()) {
            out.push_back({Partition::from_unsorted(concat), weight, sign});
            return;
        }
        const int block = mu.parts()[a];
        for (const Partition& rho : per_block[a]) {
            const std::size_t before = concat.size();
            concat.insert(concat.end(), rho.parts().begin(), rho.parts().end());
            mpz_class w = weight * (factorial(block) / z_stat(rho));
            int s = ((block - static_cast<int>(rho.length())) % 2 == 0) ? sign : -sign;
            self(self, a + 1, w, s);
            concat.resize(before);
        }
    };
    rec(rec, 0, mpz_class(1), 1);
    return out;
}

} // namespace kug
