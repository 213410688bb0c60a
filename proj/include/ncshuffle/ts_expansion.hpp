#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncshuffle/functional.hpp"
#include "ncshuffle/ops.hpp"
#include "ncshuffle/rational.hpp"

namespace ncs {

// Formal expansion of the t-monotone cumulant form in terms of the s-monotone
// one: the generator x stands for rho^(s) and the self-consistent series
//   X = Omega_{tX}( W_{s x}(x) )
// is solved order by order in the free magma spanned by pre-Lie
// parenthesizations, with coefficients that are polynomials in (t, s).

// Interned pre-Lie parenthesizations of a single generator. Node (-1,-1) is
// the generator itself; (l, r) is the product l <| r.
class TreePool {
public:
    TreePool() { intern(-1, -1); }

    int leaf() const { return 0; }

    int graft(int l, int r) { return intern(l, r); }

    int size(int id) const { return sizes_[id]; }

    std::pair<int, int> node(int id) const { return nodes_[id]; }

    std::string name(int id) const {
        if (id == 0) return "x";
        auto [l, r] = nodes_[id];
        return "(" + name(l) + "<" + name(r) + ")";
    }

private:
    int intern(int l, int r) {
        auto it = index_.find({l, r});
        if (it != index_.end()) return it->second;
        int id = static_cast<int>(nodes_.size());
        nodes_.emplace_back(l, r);
        sizes_.push_back(l < 0 ? 1 : sizes_[l] + sizes_[r]);
        index_.emplace(std::pair{l, r}, id);
        return id;
    }

    std::vector<std::pair<int, int>> nodes_;
    std::vector<int> sizes_;
    std::map<std::pair<int, int>, int> index_;
};

// Sparse bivariate polynomial in (t, s).
struct Poly2 {
    std::map<std::pair<int, int>, Rational> coeffs;

    void add_term(int dt, int ds, const Rational& v) {
        if (v == 0) return;
        auto [it, fresh] = coeffs.try_emplace({dt, ds}, v);
        if (!fresh) {
            it->second += v;
            it->second.canonicalize();
            if (it->second == 0) coeffs.erase(it);
        }
    }

    bool empty() const { return coeffs.empty(); }

    Rational eval(const Rational& t, const Rational& s) const {
        Rational acc = 0;
        for (const auto& [deg, c] : coeffs) {
            Rational term = c;
            for (int i = 0; i < deg.first; ++i) term *= t;
            for (int j = 0; j < deg.second; ++j) term *= s;
            acc += term;
        }
        acc.canonicalize();
        return acc;
    }

    std::string str() const {
        if (coeffs.empty()) return "0";
        std::string out;
        for (const auto& [deg, c] : coeffs) {
            if (!out.empty()) out += " + ";
            out += rational_to_string(c);
            if (deg.first > 0) out += "*t^" + std::to_string(deg.first);
            if (deg.second > 0) out += "*s^" + std::to_string(deg.second);
        }
        return out;
    }
};

using TsSeries = std::map<int, Poly2>;  // tree id -> coefficient polynomial

struct TsExpansion {
    int order = 0;
    TreePool pool;
    TsSeries series;
};

namespace detail {

inline void ts_add(TsSeries& into, const TsSeries& other, const Rational& factor, int shift_t,
                   int shift_s) {
    for (const auto& [tree, poly] : other)
        for (const auto& [deg, c] : poly.coeffs) {
            Rational v = factor * c;
            v.canonicalize();
            Poly2& target = into[tree];
            target.add_term(deg.first + shift_t, deg.second + shift_s, v);
        }
}

inline TsSeries ts_prelie(const TsSeries& a, const TsSeries& b, TreePool& pool, int order) {
    TsSeries out;
    for (const auto& [ta, pa] : a)
        for (const auto& [tb, pb] : b) {
            if (pool.size(ta) + pool.size(tb) > order) continue;
            int tree = pool.graft(ta, tb);
            Poly2& target = out[tree];
            for (const auto& [da, ca] : pa.coeffs)
                for (const auto& [db, cb] : pb.coeffs) {
                    Rational v = ca * cb;
                    v.canonicalize();
                    target.add_term(da.first + db.first, da.second + db.second, v);
                }
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
    return out;
}

}  // namespace detail

inline TsExpansion ts_expansion(int order) {
    if (order < 1) throw error("ts_expansion: order must be >= 1");
    TsExpansion ex;
    ex.order = order;

    // W_{s x}(x) = sum_n s^n/(n+1)! ((..(x <| x) <| ..) <| x), left-combed.
    TsSeries w_series;
    {
        int comb = ex.pool.leaf();
        for (int n = 0; n < order; ++n) {
            if (n > 0) comb = ex.pool.graft(comb, ex.pool.leaf());
            w_series[comb].add_term(0, n, make_rational(Integer(1), factorial(n + 1)));
        }
    }

    // Fixed point X = sum_n (B_n/n!) t^n r^{(n)}_{<|X}(W); each sweep settles
    // one more order.
    TsSeries x = w_series;
    for (int sweep = 0; sweep < order; ++sweep) {
        TsSeries next;
        TsSeries it = w_series;
        for (int n = 0; n < order; ++n) {
            if (n > 0) it = detail::ts_prelie(it, x, ex.pool, order);
            Rational coeff = bernoulli(n) / Rational(factorial(n));
            coeff.canonicalize();
            detail::ts_add(next, it, coeff, n, 0);
        }
        std::erase_if(next, [](const auto& kv) { return kv.second.empty(); });
        x = std::move(next);
    }
    ex.series = std::move(x);
    return ex;
}

// Substitutes a concrete infinitesimal character for the generator and
// evaluates the coefficient polynomials at rational (t, s).
inline Functional evaluate_ts_expansion(const TsExpansion& ex, const Functional& rho_s,
                                        const Rational& t, const Rational& s) {
    require_infchar(rho_s);
    std::map<int, Functional> memo;
    std::function<const Functional&(int)> tree_value = [&](int id) -> const Functional& {
        auto it = memo.find(id);
        if (it != memo.end()) return it->second;
        if (id == ex.pool.leaf()) return memo.emplace(id, rho_s).first->second;
        auto [l, r] = ex.pool.node(id);
        Functional v = pre_lie(tree_value(l), tree_value(r));
        return memo.emplace(id, std::move(v)).first->second;
    };
    Functional acc = zero_functional(rho_s.context());
    for (const auto& [tree, poly] : ex.series) {
        Rational c = poly.eval(t, s);
        if (c == 0) continue;
        acc = add(acc, scale(c, tree_value(tree)));
    }
    return acc;
}

struct TsRow {
    int order;
    std::string monomial;
    std::string coefficient;
};

inline std::vector<TsRow> ts_expansion_table(const TsExpansion& ex) {
    std::vector<std::pair<int, TsRow>> rows;
    for (const auto& [tree, poly] : ex.series)
        rows.push_back({tree, {ex.pool.size(tree), ex.pool.name(tree), poly.str()}});
    std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
        if (a.second.order != b.second.order) return a.second.order < b.second.order;
        return a.second.monomial < b.second.monomial;
    });
    std::vector<TsRow> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.push_back(std::move(r.second));
    return out;
}

}  // namespace ncs
