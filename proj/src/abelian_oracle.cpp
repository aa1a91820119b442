#include "e2ab/abelian_oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace e2ab {

namespace {

std::vector<size_t> element_orders(const FiniteAbelianOracle &g) {
    std::vector<size_t> ord(g.n, 0);
    for (size_t x = 0; x < g.n; ++x) {
        size_t y = x, k = 1;
        while (y != g.identity) {
            y = g.op(y, x);
            ++k;
            if (k > g.n) throw std::logic_error("abelian oracle: runaway order computation");
        }
        ord[x] = k;
    }
    return ord;
}

size_t pow_op(const FiniteAbelianOracle &g, size_t x, size_t e) {
    size_t r = g.identity, b = x;
    while (e) {
        if (e & 1) r = g.op(r, b);
        b = g.op(b, b);
        e >>= 1;
    }
    return r;
}

std::vector<std::pair<size_t, unsigned>> factorize(size_t n) {
    std::vector<std::pair<size_t, unsigned>> f;
    for (size_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.emplace_back(p, e);
        }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

AbelianGroup structure_from_order_multiset(size_t n, const std::vector<size_t> &orders) {
    if (n == 1) return AbelianGroup{};
    // Per prime p: the number of x with x^{p^j} = 1 is p^{sum_i min(j, e_i)};
    // the increments of its p-adic valuation count the factors with e_i >= j.
    std::map<size_t, std::vector<unsigned>> exps;  // prime -> exponents, descending
    for (auto [p, emax] : factorize(n)) {
        std::vector<size_t> nj;  // N_j for j = 0, 1, ...
        for (unsigned j = 0;; ++j) {
            size_t pj = 1;
            for (unsigned i = 0; i < j; ++i) pj *= p;
            size_t count = 0;
            for (size_t o : orders)
                if (pj % o == 0) ++count;
            nj.push_back(count);
            if (count == 0) throw std::logic_error("abelian oracle: empty order class");
            // stop once every p-power-order element is counted
            size_t all = 0;
            for (size_t o : orders) {
                size_t q = o;
                while (q % p == 0) q /= p;
                if (q == 1) ++all;
            }
            if (count == all) break;
        }
        auto vp = [p](size_t v) {
            unsigned e = 0;
            while (v % p == 0) {
                v /= p;
                ++e;
            }
            return e;
        };
        std::vector<unsigned> mj;  // m_j = #factors with exponent >= j, j >= 1
        for (size_t j = 1; j < nj.size(); ++j) mj.push_back(vp(nj[j]) - vp(nj[j - 1]));
        std::vector<unsigned> part;
        for (unsigned i = 1; i <= (mj.empty() ? 0u : mj[0]); ++i) {
            unsigned e = 0;
            for (unsigned m : mj)
                if (m >= i) ++e;
            part.push_back(e);
        }
        if (!part.empty()) exps[p] = std::move(part);  // descending by construction
    }
    size_t k = 0;
    for (auto &[p, part] : exps) k = std::max(k, part.size());
    std::vector<Int> inv(k, 1);  // inv[0] largest
    for (auto &[p, part] : exps)
        for (size_t i = 0; i < part.size(); ++i) {
            Int pe = 1;
            for (unsigned j = 0; j < part[i]; ++j) pe *= static_cast<long>(p);
            inv[i] *= pe;
        }
    std::reverse(inv.begin(), inv.end());
    AbelianGroup g;
    g.torsion = std::move(inv);
    return g;
}

struct Basis {
    std::vector<size_t> gens;
    std::vector<size_t> orders;
    // coordinates per label, aligned with gens
    std::unordered_map<size_t, std::vector<size_t>> coords;
};

Basis extract_basis(const std::vector<size_t> &elems, const FiniteAbelianOracle &g) {
    Basis b;
    if (elems.size() == 1) {
        b.coords[elems[0]] = {};
        return b;
    }
    // generator of maximal order; within an abelian group this is the exponent
    size_t best = elems[0], best_ord = 1;
    for (size_t x : elems) {
        size_t y = x, k = 1;
        while (y != g.identity) {
            y = g.op(y, x);
            ++k;
        }
        if (k > best_ord) {
            best_ord = k;
            best = x;
        }
    }
    const size_t d = best_ord;
    std::vector<size_t> pw(d);
    pw[0] = g.identity;
    for (size_t i = 1; i < d; ++i) pw[i] = g.op(pw[i - 1], best);
    std::unordered_map<size_t, size_t> dlog;  // label in <g> -> exponent
    for (size_t i = 0; i < d; ++i) dlog[pw[i]] = i;

    // canonical coset representatives (minimal label first seen)
    std::unordered_map<size_t, size_t> rep;
    std::vector<size_t> reps;
    for (size_t x : elems) {
        if (rep.count(x)) continue;
        reps.push_back(x);
        for (size_t i = 0; i < d; ++i) rep[g.op(x, pw[i])] = x;
    }
    FiniteAbelianOracle q;
    q.n = 0;  // label space is sparse; op works on labels directly
    q.identity = rep[g.identity];
    const FiniteAbelianOracle *gp = &g;
    auto rep_copy = rep;
    q.op = [gp, rep_copy](size_t a, size_t c) { return rep_copy.at(gp->op(a, c)); };

    Basis sub = extract_basis(reps, q);

    // lift quotient generators into elements of the same order
    std::vector<size_t> lifted;
    std::vector<size_t> lifted_ord;
    for (size_t i = 0; i < sub.gens.size(); ++i) {
        size_t x = sub.gens[i];
        size_t e = sub.orders[i];
        size_t xe = pow_op(g, x, e);  // lies in <g>
        size_t k = dlog.at(xe);
        if (k % e != 0) throw std::logic_error("abelian oracle: lift failed");
        size_t corr = (d - k / e) % d;
        lifted.push_back(g.op(x, pw[corr]));
        lifted_ord.push_back(e);
    }
    b.gens = lifted;
    b.orders = lifted_ord;
    b.gens.push_back(best);
    b.orders.push_back(d);

    auto inv_of = [&](size_t x, size_t ord_x) { return pow_op(g, x, ord_x - 1); };
    for (size_t x : elems) {
        const auto &qc = sub.coords.at(rep.at(x));
        std::vector<size_t> c(qc.begin(), qc.end());
        size_t r = x;
        for (size_t i = 0; i < lifted.size(); ++i)
            if (c[i]) r = g.op(r, pow_op(g, inv_of(lifted[i], lifted_ord[i]), c[i]));
        c.push_back(dlog.at(r));
        b.coords[x] = std::move(c);
    }
    return b;
}

}  // namespace

AbelianGroup abelian_structure_from_orders(const FiniteAbelianOracle &g) {
    return structure_from_order_multiset(g.n, element_orders(g));
}

AbelianGroup abelian_structure_with_coords(const FiniteAbelianOracle &g,
                                           std::vector<std::vector<Int>> &coords) {
    std::vector<size_t> elems(g.n);
    for (size_t i = 0; i < g.n; ++i) elems[i] = i;
    Basis basis = extract_basis(elems, g);

    // Z^k / diag(orders) -> Smith form; x -> x*V aligns the coordinates.
    const size_t k = basis.gens.size();
    std::vector<Int> diag_orders;
    for (size_t o : basis.orders) diag_orders.push_back(static_cast<long>(o));
    IntMatrix V;
    std::vector<Int> d = smith_normal_form(IntMatrix::diagonal(diag_orders), V);

    std::vector<size_t> keep;  // positions with invariant >= 2
    AbelianGroup out;
    for (size_t j = 0; j < d.size(); ++j) {
        if (d[j] <= 1) continue;
        keep.push_back(j);
        out.torsion.push_back(d[j]);
    }

    coords.assign(g.n, {});
    for (size_t x = 0; x < g.n; ++x) {
        const auto &c = basis.coords.at(x);
        std::vector<Int> z;
        for (size_t j : keep) {
            Int v = 0;
            for (size_t i = 0; i < k; ++i) v += Int(static_cast<long>(c[i])) * V.at(i, j);
            v %= d[j];
            if (v < 0) v += d[j];
            z.push_back(v);
        }
        coords[x] = std::move(z);
    }

    AbelianGroup check = abelian_structure_from_orders(g);
    if (!(check == out)) throw std::logic_error("abelian oracle: structure mismatch");
    return out;
}

}  // namespace e2ab
