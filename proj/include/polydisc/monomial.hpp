#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace polydisc {

/// Exponent vector of a power product X1^e1 ... Xn^en.
using Monomial = std::vector<std::uint32_t>;

inline unsigned total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

inline Monomial mono_one(int n) { return Monomial(static_cast<size_t>(n), 0); }

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r(b);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= a[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], b[i]);
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

enum class OrderKind { Grevlex, Lex };

/// Monomial order: graded reverse lexicographic (default) or lexicographic,
/// both applied after a permutation of the variables.  perm[0] is the most
/// significant variable.
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::vector<int> perm;  // perm[i] = variable index compared at rank i

    static MonomialOrder grevlex(int n) {
        MonomialOrder o;
        o.kind = OrderKind::Grevlex;
        o.perm.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) o.perm[static_cast<size_t>(i)] = i;
        return o;
    }
    static MonomialOrder lex(int n) {
        MonomialOrder o = grevlex(n);
        o.kind = OrderKind::Lex;
        return o;
    }
    /// Lex order with variable `first` most significant; used to eliminate it.
    static MonomialOrder lex_eliminating(int n, int first) {
        MonomialOrder o = lex(n);
        o.perm.clear();
        o.perm.push_back(first);
        for (int i = 0; i < n; ++i)
            if (i != first) o.perm.push_back(i);
        return o;
    }
    /// Lex order with variable `last` least significant; its pure powers end
    /// up generating the elimination ideal in that single variable.
    static MonomialOrder lex_keeping(int n, int last) {
        MonomialOrder o = lex(n);
        o.perm.clear();
        for (int i = 0; i < n; ++i)
            if (i != last) o.perm.push_back(i);
        o.perm.push_back(last);
        return o;
    }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind && a.perm == b.perm;
    }
    friend bool operator<(const MonomialOrder& a, const MonomialOrder& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.perm < b.perm;
    }

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (a.size() != perm.size() || b.size() != perm.size())
            throw std::invalid_argument("monomial/order arity mismatch");
        if (kind == OrderKind::Grevlex) {
            unsigned da = total_degree(a), db = total_degree(b);
            if (da != db) return da < db ? -1 : 1;
            for (size_t i = perm.size(); i-- > 0;) {
                auto va = a[static_cast<size_t>(perm[i])];
                auto vb = b[static_cast<size_t>(perm[i])];
                if (va != vb) return va > vb ? -1 : 1;
            }
            return 0;
        }
        for (size_t i = 0; i < perm.size(); ++i) {
            auto va = a[static_cast<size_t>(perm[i])];
            auto vb = b[static_cast<size_t>(perm[i])];
            if (va != vb) return va < vb ? -1 : 1;
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

}  // namespace polydisc
