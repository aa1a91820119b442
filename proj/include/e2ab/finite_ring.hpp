#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "e2ab/abelian.hpp"

namespace e2ab {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

class RingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    size_t position;
};

/// Element of a FiniteRing: integer coordinates against the ring's additive
/// moduli, always kept reduced. Elements carry their owning ring.
class RingElement {
  public:
    RingElement() = default;
    RingElement(RingPtr ring, std::vector<int64_t> coords);

    const RingPtr &ring() const { return ring_; }
    const std::vector<int64_t> &coords() const { return coords_; }

    RingElement operator+(const RingElement &o) const;
    RingElement operator-(const RingElement &o) const;
    RingElement operator*(const RingElement &o) const;
    RingElement operator-() const;
    bool operator==(const RingElement &o) const;
    bool operator!=(const RingElement &o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_unit() const;
    RingElement inverse() const;  // throws RingError on non-units

    /// Additive/multiplicative identities of the owning ring (for generic
    /// matrix code that only holds elements).
    RingElement zero() const;
    RingElement one() const;

    /// Mixed-radix index in [0, |ring|).
    size_t index() const;

    std::string to_string() const;

  private:
    RingPtr ring_;
    std::vector<int64_t> coords_;
    friend class FiniteRing;
};

/// Finite commutative ring with 1, built as an iterated construction:
/// Z/n, a finite product, or a quotient of R[x] by a monic polynomial.
class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
  public:
    static RingPtr zmod(uint64_t n);
    static RingPtr product(std::vector<RingPtr> factors);
    /// Quotient of base[var] by the monic polynomial with the given
    /// coefficients c0 + c1 x + ... + x^deg (leading 1 implicit,
    /// coeffs.size() == deg).
    static RingPtr poly_quot(RingPtr base, std::vector<RingElement> coeffs, std::string var = "x");
    /// GF(p^k) from the lexicographically least monic irreducible polynomial.
    static RingPtr galois_field(uint64_t p, unsigned k);

    size_t size() const { return size_; }
    const std::vector<int64_t> &moduli() const { return moduli_; }

    RingElement zero() const;
    RingElement one() const;
    /// Image of an integer under Z -> R.
    RingElement from_int(const Int &n) const;
    RingElement element(size_t index) const;
    size_t index_of(const RingElement &e) const;

    /// All invertible elements, in index order. Cached.
    const std::vector<RingElement> &units() const;
    bool is_unit_index(size_t idx) const;

    /// True iff the non-units form an ideal. When local, also fills the
    /// maximal ideal (as an index-sorted element list) on request.
    bool is_local(std::vector<RingElement> *maximal_ideal = nullptr) const;

    std::string spec_string() const { return spec_; }

    ~FiniteRing();

  private:
    FiniteRing() = default;
    enum class Kind { Zmod, Product, PolyQuot };
    Kind kind_;
    uint64_t n_ = 0;                  // Zmod
    std::vector<RingPtr> factors_;    // Product
    std::vector<size_t> offsets_;     // Product: coord offsets per factor
    RingPtr base_;                    // PolyQuot
    std::vector<RingElement> mod_;    // PolyQuot: c0..c_{deg-1}, monic
    std::string var_ = "x";           // PolyQuot
    size_t size_ = 1;
    std::vector<int64_t> moduli_;
    std::string spec_;

    mutable std::vector<RingElement> units_;      // lazy
    mutable std::vector<uint8_t> unit_mask_;      // lazy, by index
    mutable std::vector<size_t> inverse_index_;   // lazy, by index
    void ensure_units() const;

    std::vector<int64_t> mul_coords(const std::vector<int64_t> &a, const std::vector<int64_t> &b) const;
    void reduce(std::vector<int64_t> &c) const;
    friend class RingElement;
};

/// Parses the ring-spec mini-language:
///   spec := atom ('x' atom)*
///   atom := 'Z/' nat | 'GF(' primepower ')' | atom '[' var ']/(' monicpoly ')'
/// Whitespace insignificant. Throws ParseError with position on bad input.
RingPtr parse_ring_spec(const std::string &text);

}  // namespace e2ab
