#include "polydisc/ideal.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace polydisc {

namespace {

Polynomial make_monic(const Polynomial& f, const MonomialOrder& order) {
    auto [m, c] = f.leading_term(order);
    return c.is_one() ? f : f.scaled(GaussianRational(1) / c);
}

struct SugarPoly {
    Polynomial p;
    Monomial lt;
    unsigned sugar;
};

struct Pair {
    size_t i, j;
    Monomial lcm;
    unsigned sugar;
};

// Full reduction with sugar bookkeeping.
std::pair<Polynomial, unsigned> reduce_full(const Polynomial& f, unsigned fsugar,
                                            const std::vector<SugarPoly>& basis,
                                            const MonomialOrder& order) {
    Polynomial rem(f.nvars());
    Polynomial work = f;
    unsigned sugar = fsugar;
    while (!work.is_zero()) {
        auto [m, c] = work.leading_term(order);
        bool reduced = false;
        for (const auto& b : basis) {
            if (!mono_divides(b.lt, m)) continue;
            Monomial quot = mono_div(m, b.lt);
            work -= b.p.scaled(c) * Polynomial::term(f.nvars(), quot, GaussianRational(1));
            sugar = std::max(sugar, b.sugar + total_degree(quot));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(m, c);
            work.add_term(m, -c);
        }
    }
    return {rem, sugar};
}

Polynomial s_polynomial(const SugarPoly& a, const SugarPoly& b, const Monomial& lcm, int n) {
    Polynomial ta = Polynomial::term(n, mono_div(lcm, a.lt), GaussianRational(1));
    Polynomial tb = Polynomial::term(n, mono_div(lcm, b.lt), GaussianRational(1));
    return a.p * ta - b.p * tb;  // both monic
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                   int n) {
    std::vector<SugarPoly> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        Polynomial m = make_monic(g, order);
        basis.push_back({m, m.leading_term(order).first, m.degree()});
    }
    if (basis.empty()) return {};

    auto pair_sugar = [&](size_t i, size_t j, const Monomial& lcm) {
        return std::max(basis[i].sugar + total_degree(mono_div(lcm, basis[i].lt)),
                        basis[j].sugar + total_degree(mono_div(lcm, basis[j].lt)));
    };

    std::deque<Pair> pairs;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Monomial l = mono_lcm(basis[i].lt, basis[j].lt);
            pairs.push_back({i, j, l, pair_sugar(i, j, l)});
        }
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
        // sugar selection: smallest sugar, then smallest lcm
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            if (it->sugar < best->sugar ||
                (it->sugar == best->sugar && order.less(it->lcm, best->lcm)))
                best = it;
        }
        Pair pr = *best;
        pairs.erase(best);

        if (mono_coprime(basis[pr.i].lt, basis[pr.j].lt)) continue;

        Polynomial sp = s_polynomial(basis[pr.i], basis[pr.j], pr.lcm, n);
        auto [nf, sugar] = reduce_full(sp, pr.sugar, basis, order);
        if (nf.is_zero()) continue;
        Polynomial m = make_monic(nf, order);
        basis.push_back({m, m.leading_term(order).first, sugar});
        push_pairs_for(basis.size() - 1);
    }

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (mono_divides(basis[j].lt, basis[i].lt) &&
                !(basis[j].lt == basis[i].lt && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i].p);
    }

    // tail-reduce each element against the others
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = normal_form(minimal[i], others, order);
        if (!r.is_zero()) reduced.push_back(make_monic(r, order));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_term(order).first, b.leading_term(order).first);
    });
    return reduced;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
    std::vector<SugarPoly> sb;
    for (const auto& b : basis)
        if (!b.is_zero()) sb.push_back({b, b.leading_term(order).first, b.degree()});
    return reduce_full(f, f.degree(), sb, order).first;
}

Ideal::Ideal(int n, std::vector<Polynomial> gens) : n_(n) {
    for (auto& g : gens) {
        if (g.nvars() != n_) throw std::invalid_argument("ideal generator arity mismatch");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& order) const {
    auto it = cache_.find(order);
    if (it == cache_.end()) it = cache_.emplace(order, buchberger(gens_, order, n_)).first;
    return it->second;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
    MonomialOrder order = MonomialOrder::grevlex(n_);
    return polydisc::normal_form(f, groebner_basis(order), order);
}

bool Ideal::contains(const Ideal& other) const {
    for (const auto& g : other.generators())
        if (!contains(g)) return false;
    return true;
}

bool Ideal::is_one() const {
    const auto& b = groebner_basis();
    return b.size() == 1 && b[0].is_constant() && !b[0].is_zero();
}

bool Ideal::is_zero_dimensional() const {
    const auto& basis = groebner_basis();
    if (basis.empty()) return n_ == 0;
    if (is_one()) return true;
    MonomialOrder order = MonomialOrder::grevlex(n_);
    for (int j = 0; j < n_; ++j) {
        bool pure = false;
        for (const auto& b : basis) {
            Monomial lt = b.leading_term(order).first;
            if (lt[static_cast<size_t>(j)] == 0) continue;
            bool only_j = true;
            for (int k = 0; k < n_; ++k)
                if (k != j && lt[static_cast<size_t>(k)] > 0) only_j = false;
            if (only_j) {
                pure = true;
                break;
            }
        }
        if (!pure) return false;
    }
    return true;
}

unsigned Ideal::codimension() const {
    if (!is_zero_dimensional()) throw std::domain_error("codimension of a positive-dimensional ideal");
    if (is_one()) return 0;
    MonomialOrder order = MonomialOrder::grevlex(n_);
    std::vector<Monomial> lts;
    for (const auto& b : groebner_basis()) lts.push_back(b.leading_term(order).first);

    std::set<Monomial> standard;
    std::deque<Monomial> queue;
    queue.push_back(mono_one(n_));
    while (!queue.empty()) {
        Monomial m = queue.front();
        queue.pop_front();
        if (standard.count(m)) continue;
        bool divisible = false;
        for (const auto& lt : lts)
            if (mono_divides(lt, m)) {
                divisible = true;
                break;
            }
        if (divisible) continue;
        standard.insert(m);
        for (int j = 0; j < n_; ++j) {
            Monomial next = m;
            ++next[static_cast<size_t>(j)];
            queue.push_back(next);
        }
    }
    return static_cast<unsigned>(standard.size());
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    if (a.nvars() != b.nvars()) return false;
    return a.groebner_basis() == b.groebner_basis();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("ideal arity mismatch");
    std::vector<Polynomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.nvars(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("ideal arity mismatch");
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) gens.push_back(f * g);
    return Ideal(a.nvars(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("ideal arity mismatch");
    int n = a.nvars();
    if (a.is_zero() || b.is_zero()) return Ideal(n);

    // T*a + (1-T)*b in n+1 variables with T the most significant lex variable
    Polynomial t = Polynomial::variable(n + 1, 0);
    Polynomial one_minus_t = Polynomial::constant(n + 1, GaussianRational(1)) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) gens.push_back(t * f.prepend_variable());
    for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.prepend_variable());

    Ideal extended(n + 1, std::move(gens));
    MonomialOrder elim = MonomialOrder::lex_eliminating(n + 1, 0);
    std::vector<Polynomial> result;
    for (const auto& e : extended.groebner_basis(elim))
        if (!e.involves(0)) result.push_back(e.drop_first_variable());
    return Ideal(n, std::move(result));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("ideal arity mismatch");
    int n = a.nvars();
    if (b.is_zero()) return Ideal::unit(n);

    bool first = true;
    Ideal acc(n);
    for (const auto& g : b.generators()) {
        if (g.is_zero()) continue;
        Ideal inter = ideal_intersect(a, Ideal::principal(g));
        std::vector<Polynomial> quot;
        for (const auto& h : inter.generators()) {
            auto q = divide_exact(h, g);
            if (!q) throw std::logic_error("colon: intersection element not divisible");
            quot.push_back(std::move(*q));
        }
        Ideal part(n, std::move(quot));
        acc = first ? part : ideal_intersect(acc, part);
        first = false;
    }
    return first ? Ideal::unit(n) : acc;
}

bool radical_contains(const Ideal& I, const Polynomial& g) {
    if (g.is_zero()) return true;
    int n = I.nvars();
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) gens.push_back(f.append_variable());
    Polynomial t = Polynomial::variable(n + 1, n);
    gens.push_back(Polynomial::constant(n + 1, GaussianRational(1)) - t * g.append_variable());
    return Ideal(n + 1, std::move(gens)).is_one();
}

}  // namespace polydisc
