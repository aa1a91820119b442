#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "e2ab/abelian.hpp"
#include "e2ab/finite_ring.hpp"
#include "e2ab/mat2.hpp"

namespace e2ab {

constexpr size_t kDefaultGroupCap = 200000;

class CapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Finite subgroup of GL2 over a finite ring, enumerated by BFS from its
/// generators. Element ids follow the deterministic BFS order; id 0 is the
/// identity matrix.
class MatrixGroup {
  public:
    MatrixGroup(RingPtr ring, std::vector<Mat2<RingElement>> generators, size_t cap);

    const RingPtr &ring() const { return ring_; }
    size_t size() const { return elements_.size(); }
    const Mat2<RingElement> &element(size_t id) const { return elements_[id]; }
    const std::vector<size_t> &generator_ids() const { return generator_ids_; }

    bool contains(const Mat2<RingElement> &m) const;
    size_t id_of(const Mat2<RingElement> &m) const;  // throws if absent

    size_t mul(size_t x, size_t y) const;
    size_t inv(size_t x) const;

  private:
    RingPtr ring_;
    std::vector<Mat2<RingElement>> elements_;
    std::unordered_map<uint64_t, uint32_t> index_;
    std::vector<size_t> generator_ids_;
    uint64_t key(const Mat2<RingElement> &m) const;
};

/// E2(R): closure of all E12(a), E21(a). Throws CapExceeded past the cap.
MatrixGroup generate_e2(const RingPtr &ring, size_t cap = kDefaultGroupCap);

/// Compares the enumerated group against the full set of determinant-1
/// matrices over the ring.
bool equals_sl2(const MatrixGroup &g);

struct GroupAbelianization {
    AbelianGroup group;
    std::vector<uint32_t> coset_of;              // element id -> coset id
    std::vector<size_t> coset_rep;               // coset id -> canonical element id
    std::vector<std::vector<Int>> coset_coords;  // coset id -> canonical coordinates
    std::vector<size_t> commutator_ids;          // sorted element ids of [G,G]
};

/// Commutator subgroup as the normal closure of generator commutators,
/// quotient structure by order-profile counting, and an explicit projection.
GroupAbelianization abelianization(const MatrixGroup &g);

struct BetaReport {
    AbelianGroup domain;    // A/M
    AbelianGroup codomain;  // E2(R)^ab
    AbelianGroup kernel;
    bool well_defined = false;  // every generator of M lands in [G,G]
    bool surjective = false;
    bool bijective = false;
};

/// The map beta: A/M -> E2(R)^ab induced by y -> E12(y).
BetaReport beta_map(const RingPtr &ring, size_t cap = kDefaultGroupCap);

}  // namespace e2ab
