#pragma once

// Brute-force ground truth over prime fields: enumerates GL_n(F_p) at desk
// scale and counts U-classes on the unipotent set by Burnside's lemma. Shares
// nothing with the symbolic path except the Partition type.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "kug/combinatorics.hpp"
#include "kug/errors.hpp"

namespace kug::oracle {

inline constexpr std::uint64_t default_budget = 100'000'000;

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// p^e, or UINT64_MAX on overflow.
inline std::uint64_t checked_pow(std::uint64_t p, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > UINT64_MAX / p) return UINT64_MAX;
        r *= p;
    }
    return r;
}

inline void require_budget(std::uint64_t work, std::uint64_t budget, const std::string& what) {
    if (work > budget)
        throw BudgetError(what + " needs " + (work == UINT64_MAX ? std::string("> 2^64") : std::to_string(work)) +
                          " steps, budget is " + std::to_string(budget));
}

/// n x n matrix over F_p, row-major, entries in [0, p).
class MatrixFp {
public:
    MatrixFp(int n, int p) : n_(n), p_(p), a_(static_cast<std::size_t>(n * n), 0) {
        if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    }

    static MatrixFp identity(int n, int p) {
        MatrixFp m(n, p);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    // Inverse of key(): base-p digits in row-major order.
    static MatrixFp decode(int n, int p, std::uint64_t key) {
        MatrixFp m(n, p);
        for (int& x : m.a_) {
            x = static_cast<int>(key % static_cast<std::uint64_t>(p));
            key /= static_cast<std::uint64_t>(p);
        }
        return m;
    }

    int n() const noexcept { return n_; }
    int p() const noexcept { return p_; }
    int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

    std::uint64_t key() const {
        std::uint64_t k = 0;
        for (auto it = a_.rbegin(); it != a_.rend(); ++it) k = k * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(*it);
        return k;
    }

    friend bool operator==(const MatrixFp& x, const MatrixFp& y) = default;

    friend MatrixFp operator*(const MatrixFp& x, const MatrixFp& y) {
        MatrixFp r(x.n_, x.p_, no_check{});
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const int xik = x(i, k);
                if (!xik) continue;
                for (int j = 0; j < x.n_; ++j) r(i, j) += xik * y(k, j);
            }
        for (int& v : r.a_) v %= x.p_;
        return r;
    }

    friend MatrixFp operator-(const MatrixFp& x, const MatrixFp& y) {
        MatrixFp r(x.n_, x.p_, no_check{});
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = ((x.a_[i] - y.a_[i]) % x.p_ + x.p_) % x.p_;
        return r;
    }

    friend MatrixFp operator+(const MatrixFp& x, const MatrixFp& y) {
        MatrixFp r(x.n_, x.p_, no_check{});
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = (x.a_[i] + y.a_[i]) % x.p_;
        return r;
    }

    MatrixFp scaled(int c) const {
        MatrixFp r(n_, p_, no_check{});
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] * c) % p_;
        return r;
    }

    bool is_zero() const {
        for (int v : a_)
            if (v) return false;
        return true;
    }

    // xy == yx without allocating.
    bool commutes_with(const MatrixFp& y) const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                int lhs = 0, rhs = 0;
                for (int k = 0; k < n_; ++k) {
                    lhs += (*this)(i, k) * y(k, j);
                    rhs += y(i, k) * (*this)(k, j);
                }
                if ((lhs - rhs) % p_ != 0) return false;
            }
        return true;
    }

private:
    struct no_check {};
    MatrixFp(int n, int p, no_check) : n_(n), p_(p), a_(static_cast<std::size_t>(n * n), 0) {}

    int n_;
    int p_;
    std::vector<int> a_;
};

inline int inverse_mod(int a, int p) {
    int result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

/// Rank over F_p of a list of row vectors.
inline int rank_of_rows(std::vector<std::vector<int>> rows, int p) {
    int rank = 0;
    const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] % p) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
        auto& pr = rows[static_cast<std::size_t>(rank)];
        const int inv = inverse_mod(pr[static_cast<std::size_t>(c)], p);
        for (int& v : pr) v = v * inv % p;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank) continue;
            auto& row = rows[static_cast<std::size_t>(r)];
            const int f = row[static_cast<std::size_t>(c)] % p;
            if (!f) continue;
            for (std::size_t k = 0; k < row.size(); ++k) row[k] = ((row[k] - f * pr[k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

inline int rank(const MatrixFp& x) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(x.n()), std::vector<int>(static_cast<std::size_t>(x.n())));
    for (int i = 0; i < x.n(); ++i)
        for (int j = 0; j < x.n(); ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x(i, j);
    return rank_of_rows(std::move(rows), x.p());
}

inline bool is_unipotent(const MatrixFp& x) {
    const MatrixFp nil = x - MatrixFp::identity(x.n(), x.p());
    MatrixFp power = nil;
    for (int k = 1; k < x.n(); ++k) {
        if (power.is_zero()) return true;
        power = power * nil;
    }
    return power.is_zero();
}

/// Gauss-Jordan inverse; throws InputError for singular input.
inline MatrixFp inverse(const MatrixFp& x) {
    const int n = x.n(), p = x.p();
    std::vector<std::vector<int>> aug(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(2 * n), 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x(i, j);
        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw InputError("matrix is singular");
        std::swap(aug[static_cast<std::size_t>(c)], aug[static_cast<std::size_t>(pivot)]);
        auto& pr = aug[static_cast<std::size_t>(c)];
        const int inv = inverse_mod(pr[static_cast<std::size_t>(c)], p);
        for (int& v : pr) v = v * inv % p;
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            auto& row = aug[static_cast<std::size_t>(r)];
            const int f = row[static_cast<std::size_t>(c)];
            if (!f) continue;
            for (std::size_t k = 0; k < row.size(); ++k) row[k] = ((row[k] - f * pr[k]) % p + p) % p;
        }
    }
    MatrixFp out(n, p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
    return out;
}

/// Jordan type from the rank sequence of (x - I)^k: lambda'_k = rank_{k-1} - rank_k.
inline Partition jordan_type(const MatrixFp& x) {
    const int n = x.n();
    const MatrixFp nil = x - MatrixFp::identity(n, x.p());
    std::vector<int> dual;
    int prev = n;
    MatrixFp power = MatrixFp::identity(n, x.p());
    for (int k = 1; k <= n; ++k) {
        power = power * nil;
        const int r = rank(power);
        if (prev - r > 0) dual.push_back(prev - r);
        prev = r;
    }
    if (prev != 0) throw InputError("jordan_type: matrix is not unipotent");
    return conjugate(Partition(dual));
}

/// Block-diagonal Jordan form with blocks lambda_1, lambda_2, ... (ones on the superdiagonal).
inline MatrixFp jordan_representative(const Partition& lambda, int p) {
    MatrixFp m = MatrixFp::identity(lambda.size(), p);
    int start = 0;
    for (int part : lambda.parts()) {
        for (int i = start; i + 1 < start + part; ++i) m(i, i + 1) = 1;
        start += part;
    }
    return m;
}

/// All x with (x - I)^n = 0, in increasing key order. Scans every n x n matrix.
inline std::vector<MatrixFp> enumerate_unipotent(int n, int p, std::uint64_t budget = default_budget) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    if (n < 1) throw InputError("n must be at least 1");
    const std::uint64_t total = checked_pow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n));
    require_budget(total, budget, "enumerating GL_" + std::to_string(n) + "(F_" + std::to_string(p) + ")");
    std::vector<MatrixFp> out;
    for (std::uint64_t key = 0; key < total; ++key) {
        MatrixFp x = MatrixFp::decode(n, p, key);
        if (is_unipotent(x)) out.push_back(std::move(x));
    }
    return out;
}

/// Elements of the standard unipotent radical for the given Levi blocks.
inline std::vector<MatrixFp> radical_elements(const Composition& mu, int p, std::uint64_t budget = default_budget) {
    const int n = mu.size();
    std::vector<int> block(static_cast<std::size_t>(n));
    for (int a = 0, row = 0; a < static_cast<int>(mu.length()); ++a)
        for (int i = 0; i < mu.parts()[static_cast<std::size_t>(a)]; ++i) block[static_cast<std::size_t>(row++)] = a;
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (block[static_cast<std::size_t>(i)] < block[static_cast<std::size_t>(j)]) free.emplace_back(i, j);
    const std::uint64_t total = checked_pow(static_cast<std::uint64_t>(p), free.size());
    require_budget(total, budget, "enumerating the radical for levi " + mu.to_string());
    std::vector<MatrixFp> out;
    out.reserve(total);
    for (std::uint64_t key = 0; key < total; ++key) {
        MatrixFp x = MatrixFp::identity(n, p);
        std::uint64_t k = key;
        for (auto [i, j] : free) {
            x(i, j) = static_cast<int>(k % static_cast<std::uint64_t>(p));
            k /= static_cast<std::uint64_t>(p);
        }
        out.push_back(std::move(x));
    }
    return out;
}

/// G_uni for GL_n(F_p) with Jordan types; shared by every scene of that (n, p).
struct UnipotentSet {
    int n = 0;
    int p = 0;
    std::vector<MatrixFp> elements;
    std::vector<Partition> jordan_index; // parallel to elements
    std::unordered_set<std::uint64_t> keys;

    static std::shared_ptr<const UnipotentSet> build(int n, int p, std::uint64_t budget = default_budget) {
        auto s = std::make_shared<UnipotentSet>();
        s->n = n;
        s->p = p;
        s->elements = enumerate_unipotent(n, p, budget);
        const std::uint64_t steinberg =
            checked_pow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1));
        if (s->elements.size() != steinberg)
            throw InvariantError("oracle: found " + std::to_string(s->elements.size()) +
                                 " unipotent elements, expected p^{n(n-1)} = " + std::to_string(steinberg));
        s->jordan_index.reserve(s->elements.size());
        for (const MatrixFp& x : s->elements) {
            s->jordan_index.push_back(jordan_type(x));
            s->keys.insert(x.key());
        }
        return s;
    }
};

struct OracleScene {
    int n = 0;
    int p = 0;
    Composition mu;
    std::shared_ptr<const UnipotentSet> unipotents;
    std::vector<MatrixFp> radical;

    const std::vector<MatrixFp>& unipotent_list() const { return unipotents->elements; }
    const std::vector<Partition>& jordan_index() const { return unipotents->jordan_index; }

    static OracleScene build(const Composition& mu, int p, std::uint64_t budget = default_budget) {
        return build(mu, UnipotentSet::build(mu.size(), p, budget), budget);
    }

    static OracleScene build(const Composition& mu, std::shared_ptr<const UnipotentSet> unipotents,
                             std::uint64_t budget = default_budget) {
        if (unipotents->n != mu.size()) throw InputError("oracle: levi size does not match the unipotent set");
        OracleScene s;
        s.n = mu.size();
        s.p = unipotents->p;
        s.mu = mu;
        s.unipotents = std::move(unipotents);
        s.radical = radical_elements(mu, s.p, budget);
        for (const MatrixFp& v : s.radical)
            if (!s.unipotents->keys.count(v.key())) throw InvariantError("oracle: radical element is not unipotent");
        return s;
    }

    // Same scene with the radical replaced by g U g^{-1}.
    OracleScene conjugated(const MatrixFp& g) const {
        OracleScene s = *this;
        const MatrixFp gi = inverse(g);
        for (MatrixFp& v : s.radical) v = g * v * gi;
        return s;
    }
};

/// |C(U, G_uni)| = number of pairs (v, x), v in U, x unipotent, xv = vx.
inline std::uint64_t commuting_variety_count(const OracleScene& scene) {
    std::uint64_t total = 0;
    for (const MatrixFp& v : scene.radical)
        for (const MatrixFp& x : scene.unipotent_list())
            if (v.commutes_with(x)) ++total;
    return total;
}

/// k(U, G_uni) by Burnside: orbit count = average number of fixed points.
inline std::uint64_t burnside_count(const OracleScene& scene) {
    const std::uint64_t pairs = commuting_variety_count(scene);
    const std::uint64_t order = scene.radical.size();
    if (pairs % order != 0)
        throw InvariantError("oracle: commuting pairs " + std::to_string(pairs) + " not divisible by |U| = " +
                             std::to_string(order));
    return pairs / order;
}

/// Number of unipotent elements of each Jordan type.
inline std::map<Partition, std::uint64_t> class_sizes(const OracleScene& scene) {
    std::map<Partition, std::uint64_t> out;
    for (const Partition& lambda : scene.jordan_index()) ++out[lambda];
    return out;
}

/// Random invertible matrix, drawn by rejection.
inline MatrixFp random_invertible(int n, int p, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> digit(0, p - 1);
    while (true) {
        MatrixFp g(n, p);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = digit(rng);
        if (rank(g) == n) return g;
    }
}

struct CentralizerCount {
    std::uint64_t group_order = 0;
    std::uint64_t unipotent_order = 0;
};

/// |C_{GL_n(p)}(x)| and its number of unipotent elements, by solving the
/// commutant system and enumerating it.
inline CentralizerCount centralizer_count(const MatrixFp& x, std::uint64_t budget = default_budget) {
    const int n = x.n(), p = x.p();
    const int vars = n * n;
    // Equation (i, j): sum_k x_ik y_kj - y_ik x_kj = 0, unknown y_ab at index a*n + b.
    std::vector<std::vector<int>> eqs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> row(static_cast<std::size_t>(vars), 0);
            for (int k = 0; k < n; ++k) {
                auto& a = row[static_cast<std::size_t>(k * n + j)];
                a = (a + x(i, k)) % p;
                auto& b = row[static_cast<std::size_t>(i * n + k)];
                b = ((b - x(k, j)) % p + p) % p;
            }
            eqs.push_back(std::move(row));
        }
    // Reduced row echelon form, then read off a nullspace basis.
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < vars && r < static_cast<int>(eqs.size()); ++c) {
        int pivot = -1;
        for (int i = r; i < static_cast<int>(eqs.size()); ++i)
            if (eqs[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(eqs[static_cast<std::size_t>(r)], eqs[static_cast<std::size_t>(pivot)]);
        auto& pr = eqs[static_cast<std::size_t>(r)];
        const int inv = inverse_mod(pr[static_cast<std::size_t>(c)], p);
        for (int& v : pr) v = v * inv % p;
        for (int i = 0; i < static_cast<int>(eqs.size()); ++i) {
            if (i == r) continue;
            auto& row = eqs[static_cast<std::size_t>(i)];
            const int f = row[static_cast<std::size_t>(c)];
            if (!f) continue;
            for (std::size_t k = 0; k < row.size(); ++k) row[k] = ((row[k] - f * pr[k]) % p + p) % p;
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(vars), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<MatrixFp> basis;
    for (int f = 0; f < vars; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<int> sol(static_cast<std::size_t>(vars), 0);
        sol[static_cast<std::size_t>(f)] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            sol[static_cast<std::size_t>(pivot_col[i])] = (p - eqs[i][static_cast<std::size_t>(f)]) % p;
        MatrixFp b(n, p);
        for (int a = 0; a < vars; ++a) b(a / n, a % n) = sol[static_cast<std::size_t>(a)];
        basis.push_back(std::move(b));
    }
    const std::uint64_t total = checked_pow(static_cast<std::uint64_t>(p), basis.size());
    require_budget(total, budget, "enumerating a commutant of dimension " + std::to_string(basis.size()));
    CentralizerCount out;
    for (std::uint64_t key = 0; key < total; ++key) {
        MatrixFp y(n, p);
        std::uint64_t k = key;
        for (const MatrixFp& b : basis) {
            const int c = static_cast<int>(k % static_cast<std::uint64_t>(p));
            k /= static_cast<std::uint64_t>(p);
            if (c) y = y + b.scaled(c);
        }
        if (rank(y) != n) continue;
        ++out.group_order;
        if (is_unipotent(y)) ++out.unipotent_order;
    }
    return out;
}

namespace detail {

using Subspace = std::vector<std::vector<int>>; // RREF basis rows

inline std::vector<Subspace> subspaces_of_dim(int n, int p, int d) {
    std::vector<Subspace> out;
    std::vector<int> pivots;
    auto choose = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pivots.size()) == d) {
            // Free entries: row r, column c > pivot r, c not a pivot column.
            std::vector<std::pair<int, int>> free;
            for (int r = 0; r < d; ++r)
                for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c)
                    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
            const std::uint64_t total = checked_pow(static_cast<std::uint64_t>(p), free.size());
            for (std::uint64_t key = 0; key < total; ++key) {
                Subspace s(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(n), 0));
                for (int r = 0; r < d; ++r) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;
                std::uint64_t k = key;
                for (auto [r, c] : free) {
                    s[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = static_cast<int>(k % static_cast<std::uint64_t>(p));
                    k /= static_cast<std::uint64_t>(p);
                }
                out.push_back(std::move(s));
            }
            return;
        }
        for (int c = start; c < n; ++c) {
            pivots.push_back(c);
            self(self, c + 1);
            pivots.pop_back();
        }
    };
    choose(choose, 0);
    return out;
}

inline std::vector<int> apply(const MatrixFp& u, const std::vector<int>& v) {
    std::vector<int> out(v.size(), 0);
    for (int i = 0; i < u.n(); ++i) {
        int acc = 0;
        for (int j = 0; j < u.n(); ++j) acc += u(i, j) * v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc % u.p();
    }
    return out;
}

inline bool contains(const Subspace& big, const Subspace& small, int p) {
    Subspace rows = big;
    rows.insert(rows.end(), small.begin(), small.end());
    return rank_of_rows(rows, p) == static_cast<int>(big.size());
}

} // namespace detail

/// Number of complete flags of F_p^n stabilised by the Jordan-form unipotent of type lambda.
inline std::uint64_t flag_fixed_points(const Partition& lambda, int p, std::uint64_t budget = default_budget) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    const int n = lambda.size();
    require_budget(checked_pow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n)),
                   budget, "flag enumeration");
    const MatrixFp u = jordan_representative(lambda, p);
    // ways[d][i]: number of stable chains ending at the i-th stable subspace of dimension d.
    std::vector<detail::Subspace> prev{detail::Subspace{}};
    std::vector<std::uint64_t> prev_ways{1};
    for (int d = 1; d <= n; ++d) {
        std::vector<detail::Subspace> cur;
        std::vector<std::uint64_t> cur_ways;
        for (detail::Subspace& s : detail::subspaces_of_dim(n, p, d)) {
            detail::Subspace image = s;
            for (const auto& v : s) image.push_back(detail::apply(u, v));
            if (rank_of_rows(image, p) != d) continue;
            std::uint64_t w = 0;
            for (std::size_t i = 0; i < prev.size(); ++i)
                if (detail::contains(s, prev[i], p)) w += prev_ways[i];
            cur.push_back(std::move(s));
            cur_ways.push_back(w);
        }
        prev = std::move(cur);
        prev_ways = std::move(cur_ways);
    }
    return prev_ways.empty() ? 0 : prev_ways.front();
}

/// Whether some element of the standard radical for mu has Jordan type lambda.
inline bool class_meets_U(const Partition& lambda, const Composition& mu, int p, std::uint64_t budget = default_budget) {
    if (lambda.size() != mu.size()) throw InputError("class_meets_U: |lambda| != |mu|");
    for (const MatrixFp& v : radical_elements(mu, p, budget))
        if (jordan_type(v) == lambda) return true;
    return false;
}

} // namespace kug::oracle
