#include "e2ab/subgroups.hpp"

#include <algorithm>
#include <deque>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace e2ab {

AdditiveSubgroup::AdditiveSubgroup(RingPtr ring, std::vector<uint8_t> mask)
    : ring_(std::move(ring)), mask_(std::move(mask)) {
    if (mask_.size() != ring_->size()) throw RingError("AdditiveSubgroup: mask size mismatch");
    for (size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i]) elements_.push_back(i);
    if (elements_.empty() || elements_[0] != 0) throw RingError("AdditiveSubgroup: must contain 0");
}

size_t AdditiveSubgroup::coset_rep(size_t element_index) const {
    if (coset_rep_.empty()) {
        coset_rep_.assign(ring_->size(), SIZE_MAX);
        for (size_t idx = 0; idx < ring_->size(); ++idx) {
            if (coset_rep_[idx] != SIZE_MAX) continue;
            // idx is minimal in its coset: indices are scanned in order
            RingElement e = ring_->element(idx);
            for (size_t s : elements_) {
                RingElement f = e + ring_->element(s);
                coset_rep_[f.index()] = idx;
            }
        }
    }
    return coset_rep_[element_index];
}

AbelianGroup AdditiveSubgroup::quotient_group() const {
    std::vector<Int> moduli;
    for (int64_t m : ring_->moduli()) moduli.push_back(m);
    IntMatrix gens(0, moduli.size());
    for (size_t idx : elements_) {
        auto e = ring_->element(idx);
        std::vector<Int> row;
        for (int64_t c : e.coords()) row.push_back(c);
        gens.append_row(row);
    }
    return finite_quotient(moduli, gens);
}

AdditiveSubgroup additive_closure(const RingPtr &ring, const std::vector<size_t> &generator_indices) {
    std::vector<uint8_t> mask(ring->size(), 0);
    mask[0] = 1;
    std::vector<RingElement> gens;
    {
        std::vector<uint8_t> seen(ring->size(), 0);
        for (size_t g : generator_indices)
            if (!seen[g]) {
                seen[g] = 1;
                if (g != 0) gens.push_back(ring->element(g));
            }
    }
    std::deque<RingElement> work;
    work.push_back(ring->zero());
    while (!work.empty()) {
        RingElement e = work.front();
        work.pop_front();
        for (const auto &g : gens) {
            RingElement f = e + g;
            size_t idx = f.index();
            if (!mask[idx]) {
                mask[idx] = 1;
                work.push_back(f);
            }
        }
    }
    // generators of a finite group generate its inverses too, but assert it
    for (size_t i = 0; i < mask.size(); ++i)
        if (mask[i] && !mask[(-ring->element(i)).index()])
            throw RingError("additive_closure: not closed under negation");
    return AdditiveSubgroup(ring, std::move(mask));
}

namespace {

// Collects the generator indices of M: x(a^2-1) over (x, a) and 3(b+1)(c+1)
// over unit pairs. `parallel` switches the OpenMP scan on.
std::vector<size_t> m_generator_indices(const RingPtr &ring, bool parallel) {
    const auto &units = ring->units();
    const size_t nr = ring->size(), nu = units.size();
    const RingElement one = ring->one();
    const RingElement three = ring->from_int(3);

    std::vector<uint8_t> mark(nr, 0);
    const int64_t total_xa = static_cast<int64_t>(nr) * static_cast<int64_t>(nu);
    const int64_t total_bc = static_cast<int64_t>(nu) * static_cast<int64_t>(nu);

#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel
        {
            std::vector<uint8_t> local(nr, 0);
#pragma omp for nowait
            for (int64_t k = 0; k < total_xa; ++k) {
                RingElement x = ring->element(static_cast<size_t>(k % nr));
                const RingElement &a = units[static_cast<size_t>(k / nr)];
                local[(x * (a * a - one)).index()] = 1;
            }
#pragma omp for nowait
            for (int64_t k = 0; k < total_bc; ++k) {
                const RingElement &b = units[static_cast<size_t>(k % nu)];
                const RingElement &c = units[static_cast<size_t>(k / nu)];
                local[(three * (b + one) * (c + one)).index()] = 1;
            }
#pragma omp critical(e2ab_m_gen_merge)
            for (size_t i = 0; i < nr; ++i)
                if (local[i]) mark[i] = 1;
        }
        std::vector<size_t> out;
        for (size_t i = 0; i < nr; ++i)
            if (mark[i]) out.push_back(i);
        return out;
    }
#else
    (void)parallel;
    (void)total_xa;
    (void)total_bc;
#endif

    for (size_t xi = 0; xi < nr; ++xi) {
        RingElement x = ring->element(xi);
        for (const auto &a : units) mark[(x * (a * a - one)).index()] = 1;
    }
    for (const auto &b : units)
        for (const auto &c : units) mark[(three * (b + one) * (c + one)).index()] = 1;
    std::vector<size_t> out;
    for (size_t i = 0; i < nr; ++i)
        if (mark[i]) out.push_back(i);
    return out;
}

// Dennis-Stein generators de(d+e-3) over pairs with 1-de a unit.
std::vector<size_t> ds_generator_indices(const RingPtr &ring, bool parallel) {
    const size_t nr = ring->size();
    const RingElement one = ring->one();
    const RingElement three = ring->from_int(3);
    std::vector<uint8_t> mark(nr, 0);
    const int64_t total = static_cast<int64_t>(nr) * static_cast<int64_t>(nr);

    auto visit = [&](std::vector<uint8_t> &dst, int64_t k) {
        RingElement d = ring->element(static_cast<size_t>(k % nr));
        RingElement e = ring->element(static_cast<size_t>(k / nr));
        RingElement de = d * e;
        if (!(one - de).is_unit()) return;
        dst[(de * (d + e - three)).index()] = 1;
    };

#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel
        {
            std::vector<uint8_t> local(nr, 0);
#pragma omp for nowait
            for (int64_t k = 0; k < total; ++k) visit(local, k);
#pragma omp critical(e2ab_ds_gen_merge)
            for (size_t i = 0; i < nr; ++i)
                if (local[i]) mark[i] = 1;
        }
        std::vector<size_t> out;
        for (size_t i = 0; i < nr; ++i)
            if (mark[i]) out.push_back(i);
        return out;
    }
#else
    (void)parallel;
#endif

    for (int64_t k = 0; k < total; ++k) visit(mark, k);
    std::vector<size_t> out;
    for (size_t i = 0; i < nr; ++i)
        if (mark[i]) out.push_back(i);
    return out;
}

std::vector<size_t> concat(std::vector<size_t> a, const std::vector<size_t> &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

AdditiveSubgroup m_subgroup(const RingPtr &ring) {
    return additive_closure(ring, m_generator_indices(ring, true));
}

AdditiveSubgroup m_subgroup_serial(const RingPtr &ring) {
    return additive_closure(ring, m_generator_indices(ring, false));
}

AdditiveSubgroup n_subgroup(const RingPtr &ring) {
    return additive_closure(ring,
                            concat(m_generator_indices(ring, true), ds_generator_indices(ring, true)));
}

AdditiveSubgroup n_subgroup_serial(const RingPtr &ring) {
    return additive_closure(
        ring, concat(m_generator_indices(ring, false), ds_generator_indices(ring, false)));
}

AbelianGroup a_mod_m(const RingPtr &ring) { return m_subgroup(ring).quotient_group(); }

AbelianGroup a_mod_n(const RingPtr &ring) { return n_subgroup(ring).quotient_group(); }

AbelianGroup local_formula(const RingPtr &ring) {
    std::vector<RingElement> mx;
    if (!ring->is_local(&mx)) throw RingError("local_formula: ring is not local");
    const size_t residue = mx.empty() ? ring->size() : ring->size() / mx.size();
    if (residue >= 4) return AbelianGroup{};
    std::vector<Int> moduli;
    for (int64_t m : ring->moduli()) moduli.push_back(m);
    IntMatrix gens(0, moduli.size());
    auto add_rows = [&](const std::vector<size_t> &idxs) {
        for (size_t idx : idxs) {
            RingElement e = ring->element(idx);
            std::vector<Int> row;
            for (int64_t c : e.coords()) row.push_back(c);
            gens.append_row(row);
        }
    };
    if (residue == 3) {
        std::vector<size_t> idxs;
        for (const auto &e : mx) idxs.push_back(e.index());
        add_rows(idxs);
    } else {  // residue field F_2: quotient by m^2
        std::vector<size_t> prods;
        for (const auto &a : mx)
            for (const auto &b : mx) prods.push_back((a * b).index());
        add_rows(additive_closure(ring, prods).element_indices());
    }
    return finite_quotient(moduli, gens);
}

std::vector<QuadInt> order_units(const QuadraticOrder &order) {
    if (order.d > 0) throw std::invalid_argument("order_units: infinite unit group for d > 0");
    QuadInt one(order, 1, 0), theta(order, 0, 1);
    std::vector<QuadInt> units{one, -one};
    if (order.d == -1) {
        units.push_back(theta);  // i
        units.push_back(-theta);
    } else if (order.d == -3) {
        QuadInt w = theta;  // (1+sqrt(-3))/2
        for (const QuadInt &u : {w, -w, w - one, one - w}) units.push_back(u);
    }
    return units;
}

IntMatrix m_lattice_quadratic(const QuadraticOrder &order,
                              const std::optional<QuadInt> &fundamental_unit) {
    QuadInt one(order, 1, 0);
    std::vector<QuadInt> units;
    if (order.d < 0) {
        units = order_units(order);
    } else {
        if (!fundamental_unit) throw std::invalid_argument("m_lattice_quadratic: d > 0 needs a fundamental unit");
        const QuadInt &u = *fundamental_unit;
        if (!(u.order() == order) || !u.is_unit())
            throw std::invalid_argument("m_lattice_quadratic: bad fundamental unit");
        units = {one, -one, u, -u};
    }
    return m_lattice_from_units(order, units);
}

IntMatrix m_lattice_from_units(const QuadraticOrder &order, const std::vector<QuadInt> &units) {
    QuadInt one(order, 1, 0), theta(order, 0, 1), three(order, 3, 0);
    IntMatrix rows(0, 2);
    auto add = [&](const QuadInt &v) { rows.append_row({v.a(), v.b()}); };
    // ideal generated by a^2 - 1 over the (finite) generating unit set
    for (const QuadInt &a : units) {
        QuadInt v = a * a - one;
        add(v);
        add(theta * v);
    }
    for (const QuadInt &b : units)
        for (const QuadInt &c : units) add(three * (b + one) * (c + one));
    return rows;
}

}  // namespace e2ab
