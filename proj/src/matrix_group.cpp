#include "e2ab/matrix_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "e2ab/abelian_oracle.hpp"
#include "e2ab/subgroups.hpp"

namespace e2ab {

uint64_t MatrixGroup::key(const Mat2<RingElement> &m) const {
    const uint64_t s = ring_->size();
    uint64_t k = m.a.index();
    k = k * s + m.b.index();
    k = k * s + m.c.index();
    k = k * s + m.d.index();
    return k;
}

MatrixGroup::MatrixGroup(RingPtr ring, std::vector<Mat2<RingElement>> generators, size_t cap)
    : ring_(std::move(ring)) {
    if (ring_->size() > 65535) throw CapExceeded("ring too large for matrix-group enumeration");
    auto push = [&](const Mat2<RingElement> &m) -> std::pair<uint32_t, bool> {
        uint64_t k = key(m);
        auto it = index_.find(k);
        if (it != index_.end()) return {it->second, false};
        if (elements_.size() >= cap) throw CapExceeded("matrix-group enumeration cap exceeded");
        uint32_t id = static_cast<uint32_t>(elements_.size());
        elements_.push_back(m);
        index_.emplace(k, id);
        return {id, true};
    };
    push(mat2_identity(ring_->zero()));
    for (const auto &g : generators) generator_ids_.push_back(push(g).first);
    for (size_t head = 0; head < elements_.size(); ++head) {
        Mat2<RingElement> cur = elements_[head];  // copy: elements_ may reallocate
        for (const auto &g : generators) push(cur * g);
    }
}

bool MatrixGroup::contains(const Mat2<RingElement> &m) const { return index_.count(key(m)) != 0; }

size_t MatrixGroup::id_of(const Mat2<RingElement> &m) const {
    auto it = index_.find(key(m));
    if (it == index_.end()) throw std::out_of_range("MatrixGroup: element not in group");
    return it->second;
}

size_t MatrixGroup::mul(size_t x, size_t y) const { return id_of(elements_[x] * elements_[y]); }

size_t MatrixGroup::inv(size_t x) const { return id_of(elements_[x].inverse()); }

MatrixGroup generate_e2(const RingPtr &ring, size_t cap) {
    std::vector<Mat2<RingElement>> gens;
    for (size_t i = 1; i < ring->size(); ++i) {
        RingElement a = ring->element(i);
        gens.push_back(elem_E12(a));
        gens.push_back(elem_E21(a));
    }
    if (gens.empty()) gens.push_back(mat2_identity(ring->zero()));  // zero ring
    return MatrixGroup(ring, std::move(gens), cap);
}

bool equals_sl2(const MatrixGroup &g) {
    const RingPtr &r = g.ring();
    const size_t n = r->size();
    size_t det1 = 0;
    const RingElement one = r->one();
    for (size_t ia = 0; ia < n; ++ia) {
        RingElement a = r->element(ia);
        for (size_t id = 0; id < n; ++id) {
            RingElement ad = a * r->element(id);
            for (size_t ib = 0; ib < n; ++ib) {
                RingElement b = r->element(ib);
                for (size_t ic = 0; ic < n; ++ic) {
                    if (ad - b * r->element(ic) == one) ++det1;
                }
            }
        }
    }
    return det1 == g.size();
}

namespace {

// Subgroup closure with incremental generator insertion; keeps the generator
// list short so the closure stays near O(|H| * #gens).
class SubgroupBuilder {
  public:
    explicit SubgroupBuilder(const MatrixGroup &g) : g_(g), member_(g.size(), 0) {
        member_[0] = 1;
        elems_.push_back(0);
    }

    bool contains(size_t id) const { return member_[id] != 0; }
    const std::vector<size_t> &elements() const { return elems_; }
    const std::vector<size_t> &gens() const { return gens_; }

    void add(size_t id) {
        if (member_[id]) return;
        gens_.push_back(id);
        std::deque<size_t> work(elems_.begin(), elems_.end());
        insert(id, work);
        while (!work.empty()) {
            size_t x = work.front();
            work.pop_front();
            for (size_t h : gens_) insert(g_.mul(x, h), work);
        }
    }

  private:
    void insert(size_t id, std::deque<size_t> &work) {
        if (member_[id]) return;
        member_[id] = 1;
        elems_.push_back(id);
        work.push_back(id);
    }
    const MatrixGroup &g_;
    std::vector<uint8_t> member_;
    std::vector<size_t> elems_;
    std::vector<size_t> gens_;
};

}  // namespace

GroupAbelianization abelianization(const MatrixGroup &g) {
    SubgroupBuilder comm(g);
    // commutators of all generator pairs
    const auto &gids = g.generator_ids();
    for (size_t i = 0; i < gids.size(); ++i)
        for (size_t j = i + 1; j < gids.size(); ++j) {
            size_t a = gids[i], b = gids[j];
            comm.add(g.mul(g.mul(a, b), g.inv(g.mul(b, a))));
        }
    // normal closure: conjugates of the subgroup generators by group generators
    for (size_t scan = 0; scan < comm.gens().size(); ++scan) {
        size_t c = comm.gens()[scan];
        for (size_t gen : gids) comm.add(g.mul(g.mul(gen, c), g.inv(gen)));
    }
    // normality assertion over the full subgroup
    for (size_t c : comm.elements())
        for (size_t gen : gids)
            if (!comm.contains(g.mul(g.mul(gen, c), g.inv(gen))))
                throw std::logic_error("commutator subgroup: normal closure incomplete");

    GroupAbelianization out;
    out.commutator_ids.assign(comm.elements().begin(), comm.elements().end());
    std::sort(out.commutator_ids.begin(), out.commutator_ids.end());

    // right cosets xC; canonical coset id by minimal element id
    const size_t n = g.size();
    out.coset_of.assign(n, UINT32_MAX);
    for (size_t x = 0; x < n; ++x) {
        if (out.coset_of[x] != UINT32_MAX) continue;
        uint32_t cid = static_cast<uint32_t>(out.coset_rep.size());
        out.coset_rep.push_back(x);
        // orbit of x under right multiplication by the subgroup generators
        std::deque<size_t> work{x};
        out.coset_of[x] = cid;
        while (!work.empty()) {
            size_t y = work.front();
            work.pop_front();
            for (size_t h : comm.gens()) {
                size_t z = g.mul(y, h);
                if (out.coset_of[z] == UINT32_MAX) {
                    out.coset_of[z] = cid;
                    work.push_back(z);
                }
            }
        }
    }

    const size_t q = out.coset_rep.size();
    FiniteAbelianOracle oracle;
    oracle.n = q;
    oracle.identity = out.coset_of[0];
    oracle.op = [&](size_t a, size_t b) {
        return static_cast<size_t>(out.coset_of[g.mul(out.coset_rep[a], out.coset_rep[b])]);
    };
    // abelianness of the quotient (generators suffice; they generate Q)
    for (size_t i = 0; i < q; ++i)
        if (oracle.op(i, oracle.identity) != i) throw std::logic_error("coset table inconsistent");

    out.group = abelian_structure_with_coords(oracle, out.coset_coords);
    return out;
}

BetaReport beta_map(const RingPtr &ring, size_t cap) {
    BetaReport rep;
    AdditiveSubgroup m = m_subgroup(ring);
    rep.domain = m.quotient_group();

    MatrixGroup g = generate_e2(ring, cap);
    GroupAbelianization ab = abelianization(g);
    rep.codomain = ab.group;

    // well-definedness: E12 of every generator (in fact every element) of M
    // lies in the commutator subgroup
    rep.well_defined = true;
    for (size_t idx : m.element_indices()) {
        size_t id = g.id_of(elem_E12(ring->element(idx)));
        if (ab.coset_of[id] != ab.coset_of[0]) {
            rep.well_defined = false;
            break;
        }
    }

    // image and kernel over all of A
    std::set<uint32_t> image;
    std::vector<size_t> kernel_indices;  // y in A with E12(y) in [G,G]
    for (size_t yi = 0; yi < ring->size(); ++yi) {
        uint32_t c = ab.coset_of[g.id_of(elem_E12(ring->element(yi)))];
        image.insert(c);
        if (c == ab.coset_of[0]) kernel_indices.push_back(yi);
    }
    rep.surjective = image.size() == ab.coset_rep.size();

    // kernel = K/M where K = {y : E12(y) in [G,G]}; a finite abelian group
    // under addition of cosets of M
    std::vector<size_t> kreps;
    std::vector<uint8_t> seen(ring->size(), 0);
    for (size_t yi : kernel_indices) {
        size_t r = m.coset_rep(yi);
        if (!seen[r]) {
            seen[r] = 1;
            kreps.push_back(r);
        }
    }
    std::unordered_map<size_t, size_t> pos;
    for (size_t i = 0; i < kreps.size(); ++i) pos[kreps[i]] = i;
    FiniteAbelianOracle ko;
    ko.n = kreps.size();
    ko.identity = pos.at(m.coset_rep(0));
    ko.op = [&](size_t a, size_t b) {
        RingElement s = ring->element(kreps[a]) + ring->element(kreps[b]);
        return pos.at(m.coset_rep(s.index()));
    };
    rep.kernel = abelian_structure_from_orders(ko);
    rep.bijective = rep.surjective && rep.kernel.is_trivial();
    return rep;
}

}  // namespace e2ab
