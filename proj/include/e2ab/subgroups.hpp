#pragma once

#include <optional>
#include <vector>

#include "e2ab/abelian.hpp"
#include "e2ab/finite_ring.hpp"
#include "e2ab/quadratic.hpp"

namespace e2ab {

/// Additive subgroup of a finite ring, stored as a membership mask plus the
/// sorted index list. Closed under addition and negation by construction.
class AdditiveSubgroup {
  public:
    AdditiveSubgroup(RingPtr ring, std::vector<uint8_t> mask);

    const RingPtr &ring() const { return ring_; }
    size_t size() const { return elements_.size(); }
    bool contains(const RingElement &e) const { return mask_[e.index()]; }
    bool contains_index(size_t idx) const { return mask_[idx] != 0; }
    const std::vector<size_t> &element_indices() const { return elements_; }

    /// Canonical representative (minimal index) of the coset e + S.
    size_t coset_rep(size_t element_index) const;
    /// Number of cosets.
    size_t quotient_size() const { return ring_->size() / size(); }

    /// Structure of (additive group of R) / S.
    AbelianGroup quotient_group() const;

  private:
    RingPtr ring_;
    std::vector<uint8_t> mask_;
    std::vector<size_t> elements_;
    mutable std::vector<size_t> coset_rep_;  // lazy
};

/// Additive closure of the given generator indices (always contains 0).
AdditiveSubgroup additive_closure(const RingPtr &ring, const std::vector<size_t> &generator_indices);

/// The subgroup M: additive closure of x(a^2-1), x in R, a a unit, together
/// with 3(b+1)(c+1) over unit pairs. The default entry point runs the
/// generator scans with OpenMP when available; the _serial variant is the
/// reference implementation, kept for testing and benchmarking.
AdditiveSubgroup m_subgroup(const RingPtr &ring);
AdditiveSubgroup m_subgroup_serial(const RingPtr &ring);

/// The subgroup N = M + <de(d+e-3) : d,e in R, 1-de a unit>.
AdditiveSubgroup n_subgroup(const RingPtr &ring);
AdditiveSubgroup n_subgroup_serial(const RingPtr &ring);

AbelianGroup a_mod_m(const RingPtr &ring);
AbelianGroup a_mod_n(const RingPtr &ring);

/// Closed form for commutative local rings: A/m^2, A/m or 0 according to the
/// size of the residue field. Throws RingError on non-local input.
AbelianGroup local_formula(const RingPtr &ring);

/// The unit group of O_d for d < 0 (4, 6 or 2 elements).
std::vector<QuadInt> order_units(const QuadraticOrder &order);

/// Z-generators of M inside O_d, as rows over the basis (1, theta).
/// For d > 0 a fundamental unit must be supplied; the generators are then
/// the ideal (u^2 - 1) plus 3(b+1)(c+1) over b,c in {1,-1,u,-u}.
IntMatrix m_lattice_quadratic(const QuadraticOrder &order,
                              const std::optional<QuadInt> &fundamental_unit = std::nullopt);

/// Same construction from an explicit unit set (used for the stabilization
/// check with enlarged generating sets).
IntMatrix m_lattice_from_units(const QuadraticOrder &order, const std::vector<QuadInt> &units);

}  // namespace e2ab
