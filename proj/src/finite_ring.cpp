#include "e2ab/finite_ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace e2ab {

namespace {

int64_t mod_reduce(int64_t v, int64_t m) {
    int64_t r = v % m;
    return r < 0 ? r + m : r;
}

int64_t mod_inverse(int64_t a, int64_t n) {  // n >= 1, gcd(a, n) == 1
    if (n == 1) return 0;
    int64_t t = 0, nt = 1, r = n, nr = mod_reduce(a, n);
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return mod_reduce(t, n);
}

}  // namespace

// ---------------------------------------------------------------- RingElement

RingElement::RingElement(RingPtr ring, std::vector<int64_t> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
    if (coords_.size() != ring_->moduli().size()) throw RingError("RingElement: coordinate width mismatch");
    ring_->reduce(coords_);
}

static void check_same_ring(const RingElement &a, const RingElement &b) {
    if (a.ring().get() != b.ring().get()) throw RingError("elements belong to different rings");
}

RingElement RingElement::operator+(const RingElement &o) const {
    check_same_ring(*this, o);
    std::vector<int64_t> c(coords_.size());
    const auto &m = ring_->moduli();
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod_reduce(coords_[i] + o.coords_[i], m[i]);
    RingElement r;
    r.ring_ = ring_;
    r.coords_ = std::move(c);
    return r;
}

RingElement RingElement::operator-(const RingElement &o) const { return *this + (-o); }

RingElement RingElement::operator-() const {
    std::vector<int64_t> c(coords_.size());
    const auto &m = ring_->moduli();
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod_reduce(-coords_[i], m[i]);
    RingElement r;
    r.ring_ = ring_;
    r.coords_ = std::move(c);
    return r;
}

RingElement RingElement::operator*(const RingElement &o) const {
    check_same_ring(*this, o);
    RingElement r;
    r.ring_ = ring_;
    r.coords_ = ring_->mul_coords(coords_, o.coords_);
    return r;
}

bool RingElement::operator==(const RingElement &o) const {
    check_same_ring(*this, o);
    return coords_ == o.coords_;
}

bool RingElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](int64_t v) { return v == 0; });
}

bool RingElement::is_unit() const { return ring_->is_unit_index(index()); }

RingElement RingElement::inverse() const {
    ring_->ensure_units();
    size_t idx = index();
    if (!ring_->unit_mask_[idx]) throw RingError("inverse of a non-unit");
    return ring_->element(ring_->inverse_index_[idx]);
}

RingElement RingElement::zero() const { return ring_->zero(); }
RingElement RingElement::one() const { return ring_->one(); }

size_t RingElement::index() const { return ring_->index_of(*this); }

std::string RingElement::to_string() const {
    if (coords_.size() == 1) return std::to_string(coords_[0]);
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ",";
        out << coords_[i];
    }
    out << ")";
    return out.str();
}

// ----------------------------------------------------------------- FiniteRing

FiniteRing::~FiniteRing() = default;

RingPtr FiniteRing::zmod(uint64_t n) {
    if (n < 1) throw RingError("Z/n requires n >= 1");
    if (n > (1ull << 31)) throw RingError("Z/n modulus too large");
    auto r = std::shared_ptr<FiniteRing>(new FiniteRing());
    r->kind_ = Kind::Zmod;
    r->n_ = n;
    r->size_ = n;
    r->moduli_ = {static_cast<int64_t>(n)};
    r->spec_ = "Z/" + std::to_string(n);
    return r;
}

RingPtr FiniteRing::product(std::vector<RingPtr> factors) {
    if (factors.empty()) throw RingError("empty product");
    if (factors.size() == 1) return factors[0];
    auto r = std::shared_ptr<FiniteRing>(new FiniteRing());
    r->kind_ = Kind::Product;
    r->factors_ = std::move(factors);
    size_t off = 0;
    std::ostringstream spec;
    for (size_t i = 0; i < r->factors_.size(); ++i) {
        const auto &f = r->factors_[i];
        r->offsets_.push_back(off);
        off += f->moduli().size();
        r->moduli_.insert(r->moduli_.end(), f->moduli().begin(), f->moduli().end());
        if (r->size_ > (100000000ull / std::max<size_t>(f->size(), 1)))
            throw RingError("product ring too large");
        r->size_ *= f->size();
        if (i) spec << " x ";
        spec << f->spec_string();
    }
    r->spec_ = spec.str();
    return r;
}

RingPtr FiniteRing::poly_quot(RingPtr base, std::vector<RingElement> coeffs, std::string var) {
    if (coeffs.empty()) throw RingError("quotient polynomial must have degree >= 1");
    for (const auto &c : coeffs)
        if (c.ring().get() != base.get()) throw RingError("polynomial coefficients not in base ring");
    auto r = std::shared_ptr<FiniteRing>(new FiniteRing());
    r->kind_ = Kind::PolyQuot;
    r->base_ = base;
    r->mod_ = std::move(coeffs);
    r->var_ = var;
    const size_t deg = r->mod_.size();
    r->size_ = 1;
    for (size_t i = 0; i < deg; ++i) {
        r->moduli_.insert(r->moduli_.end(), base->moduli().begin(), base->moduli().end());
        if (r->size_ > 100000000ull / std::max<size_t>(base->size(), 1))
            throw RingError("polynomial quotient ring too large");
        r->size_ *= base->size();
    }
    std::ostringstream spec;
    spec << base->spec_string() << "[" << var << "]/(" << var << "^" << deg;
    for (size_t i = deg; i-- > 0;) {
        const auto &c = r->mod_[i];
        if (c.is_zero()) continue;
        spec << "+";
        if (i == 0 || !(c == base->one())) spec << c.to_string();
        if (i >= 1 && !(c == base->one())) spec << "*";
        if (i == 1)
            spec << var;
        else if (i > 1)
            spec << var << "^" << i;
    }
    spec << ")";
    r->spec_ = spec.str();
    return r;
}

RingPtr FiniteRing::galois_field(uint64_t p, unsigned k) {
    // primality of p
    if (p < 2) throw RingError("GF: characteristic must be prime");
    for (uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) throw RingError("GF: characteristic must be prime");
    if (k == 0) throw RingError("GF: exponent must be >= 1");
    RingPtr fp = zmod(p);
    if (k == 1) return fp;

    // Lexicographically least monic irreducible of degree k over F_p.
    // Polynomials as int64 coefficient vectors c0..c_deg.
    auto poly_mod = [p](std::vector<int64_t> a, const std::vector<int64_t> &b) {
        // remainder of a by monic-normalized b
        int64_t lead_inv = mod_inverse(b.back(), static_cast<int64_t>(p));
        while (a.size() >= b.size() && !a.empty()) {
            if (a.back() == 0) {
                a.pop_back();
                continue;
            }
            int64_t f = mod_reduce(a.back() * lead_inv, static_cast<int64_t>(p));
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = mod_reduce(a[shift + i] - f * b[i], static_cast<int64_t>(p));
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        return a;
    };
    auto irreducible = [&](const std::vector<int64_t> &f) {
        // trial division by every monic polynomial of degree 1..k/2
        for (unsigned d = 1; 2 * d <= k; ++d) {
            std::vector<int64_t> g(d + 1, 0);
            g[d] = 1;
            // iterate over all choices of g[0..d-1]
            uint64_t count = 1;
            for (unsigned i = 0; i < d; ++i) count *= p;
            for (uint64_t idx = 0; idx < count; ++idx) {
                uint64_t t = idx;
                for (unsigned i = 0; i < d; ++i) {
                    g[i] = static_cast<int64_t>(t % p);
                    t /= p;
                }
                if (poly_mod(f, g).empty()) return false;
            }
        }
        return true;
    };
    std::vector<int64_t> f(k + 1, 0);
    f[k] = 1;
    uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
        uint64_t t = idx;
        for (unsigned i = k; i-- > 0;) {  // lexicographic in c_{k-1}..c_0
            f[i] = static_cast<int64_t>(t % p);
            t /= p;
        }
        if (irreducible(f)) {
            std::vector<RingElement> coeffs;
            for (unsigned i = 0; i < k; ++i) coeffs.push_back(fp->from_int(f[i]));
            auto r = poly_quot(fp, coeffs);
            uint64_t q = 1;
            for (unsigned i = 0; i < k; ++i) q *= p;
            const_cast<FiniteRing *>(r.get())->spec_ = "GF(" + std::to_string(q) + ")";
            return r;
        }
    }
    throw RingError("GF: no irreducible polynomial found");  // unreachable
}

void FiniteRing::reduce(std::vector<int64_t> &c) const {
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod_reduce(c[i], moduli_[i]);
}

std::vector<int64_t> FiniteRing::mul_coords(const std::vector<int64_t> &a,
                                            const std::vector<int64_t> &b) const {
    switch (kind_) {
        case Kind::Zmod:
            return {mod_reduce(a[0] * b[0], static_cast<int64_t>(n_))};
        case Kind::Product: {
            std::vector<int64_t> out;
            out.reserve(moduli_.size());
            for (size_t i = 0; i < factors_.size(); ++i) {
                const auto &f = factors_[i];
                size_t w = f->moduli().size(), off = offsets_[i];
                std::vector<int64_t> fa(a.begin() + off, a.begin() + off + w);
                std::vector<int64_t> fb(b.begin() + off, b.begin() + off + w);
                auto fc = f->mul_coords(fa, fb);
                out.insert(out.end(), fc.begin(), fc.end());
            }
            return out;
        }
        case Kind::PolyQuot: {
            const size_t deg = mod_.size();
            const size_t w = base_->moduli().size();
            auto coeff = [&](const std::vector<int64_t> &v, size_t i) {
                return std::vector<int64_t>(v.begin() + i * w, v.begin() + (i + 1) * w);
            };
            // schoolbook product, coefficients in the base ring
            std::vector<std::vector<int64_t>> prod(2 * deg - 1, std::vector<int64_t>(w, 0));
            for (size_t i = 0; i < deg; ++i)
                for (size_t j = 0; j < deg; ++j) {
                    auto t = base_->mul_coords(coeff(a, i), coeff(b, j));
                    auto &dst = prod[i + j];
                    for (size_t c = 0; c < w; ++c)
                        dst[c] = mod_reduce(dst[c] + t[c], base_->moduli()[c]);
                }
            // reduce by the monic modulus: x^deg = -(c0 + ... + c_{deg-1} x^{deg-1})
            for (size_t i = 2 * deg - 2; i >= deg && i < prod.size(); --i) {
                auto lead = prod[i];
                for (size_t j = 0; j < deg; ++j) {
                    auto t = base_->mul_coords(lead, mod_[j].coords());
                    auto &dst = prod[i - deg + j];
                    for (size_t c = 0; c < w; ++c)
                        dst[c] = mod_reduce(dst[c] - t[c], base_->moduli()[c]);
                }
            }
            std::vector<int64_t> out;
            out.reserve(moduli_.size());
            for (size_t i = 0; i < deg; ++i) out.insert(out.end(), prod[i].begin(), prod[i].end());
            return out;
        }
    }
    throw RingError("unreachable");
}

RingElement FiniteRing::zero() const {
    RingElement e;
    e.ring_ = shared_from_this();
    e.coords_.assign(moduli_.size(), 0);
    return e;
}

RingElement FiniteRing::one() const { return from_int(1); }

RingElement FiniteRing::from_int(const Int &n) const {
    RingElement e;
    e.ring_ = shared_from_this();
    switch (kind_) {
        case Kind::Zmod: {
            Int r = n % static_cast<long>(n_);
            if (r < 0) r += static_cast<long>(n_);
            e.coords_ = {r.get_si()};
            break;
        }
        case Kind::Product: {
            for (const auto &f : factors_) {
                auto fe = f->from_int(n);
                e.coords_.insert(e.coords_.end(), fe.coords().begin(), fe.coords().end());
            }
            break;
        }
        case Kind::PolyQuot: {
            auto c0 = base_->from_int(n);
            e.coords_ = c0.coords();
            e.coords_.resize(moduli_.size(), 0);
            break;
        }
    }
    return e;
}

RingElement FiniteRing::element(size_t index) const {
    RingElement e;
    e.ring_ = shared_from_this();
    e.coords_.resize(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) {
        e.coords_[i] = static_cast<int64_t>(index % static_cast<size_t>(moduli_[i]));
        index /= static_cast<size_t>(moduli_[i]);
    }
    return e;
}

size_t FiniteRing::index_of(const RingElement &e) const {
    size_t idx = 0;
    for (size_t i = moduli_.size(); i-- > 0;) idx = idx * moduli_[i] + e.coords()[i];
    return idx;
}

void FiniteRing::ensure_units() const {
    if (!unit_mask_.empty()) return;
    unit_mask_.assign(size_, 0);
    inverse_index_.assign(size_, 0);
    switch (kind_) {
        case Kind::Zmod: {
            for (uint64_t i = 0; i < n_; ++i)
                if (std::gcd(i, n_) == 1 || n_ == 1) {
                    unit_mask_[i] = 1;
                    inverse_index_[i] = static_cast<size_t>(mod_inverse(static_cast<int64_t>(i),
                                                                        static_cast<int64_t>(n_)));
                }
            break;
        }
        case Kind::Product: {
            for (const auto &f : factors_) f->ensure_units();
            for (size_t idx = 0; idx < size_; ++idx) {
                auto e = element(idx);
                bool unit = true;
                std::vector<int64_t> inv_coords;
                for (size_t i = 0; i < factors_.size() && unit; ++i) {
                    const auto &f = factors_[i];
                    size_t w = f->moduli().size(), off = offsets_[i];
                    RingElement fe(f, std::vector<int64_t>(e.coords().begin() + off,
                                                           e.coords().begin() + off + w));
                    size_t fidx = f->index_of(fe);
                    if (!f->unit_mask_[fidx]) {
                        unit = false;
                        break;
                    }
                    auto finv = f->element(f->inverse_index_[fidx]);
                    inv_coords.insert(inv_coords.end(), finv.coords().begin(), finv.coords().end());
                }
                if (unit) {
                    unit_mask_[idx] = 1;
                    RingElement ie;
                    ie.ring_ = shared_from_this();
                    ie.coords_ = std::move(inv_coords);
                    inverse_index_[idx] = index_of(ie);
                }
            }
            break;
        }
        case Kind::PolyQuot: {
            const RingElement id = one();
            for (size_t i = 0; i < size_; ++i) {
                if (unit_mask_[i]) continue;
                auto a = element(i);
                for (size_t j = i; j < size_; ++j) {
                    if (a * element(j) == id) {
                        unit_mask_[i] = 1;
                        inverse_index_[i] = j;
                        unit_mask_[j] = 1;
                        inverse_index_[j] = i;
                        break;
                    }
                }
            }
            break;
        }
    }
    for (size_t i = 0; i < size_; ++i)
        if (unit_mask_[i]) units_.push_back(element(i));
}

const std::vector<RingElement> &FiniteRing::units() const {
    ensure_units();
    return units_;
}

bool FiniteRing::is_unit_index(size_t idx) const {
    ensure_units();
    return unit_mask_[idx] != 0;
}

bool FiniteRing::is_local(std::vector<RingElement> *maximal_ideal) const {
    ensure_units();
    std::vector<RingElement> nonunits;
    for (size_t i = 0; i < size_; ++i)
        if (!unit_mask_[i]) nonunits.push_back(element(i));
    for (size_t i = 0; i < nonunits.size(); ++i)
        for (size_t j = i; j < nonunits.size(); ++j)
            if ((nonunits[i] + nonunits[j]).is_unit()) return false;
    if (maximal_ideal) *maximal_ideal = nonunits;
    return true;
}

}  // namespace e2ab
