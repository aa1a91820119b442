#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "e2ab/mat2.hpp"
#include "e2ab/subgroups.hpp"

namespace e2ab {

/// Formal word in the Steinberg generators x12(r), x21(r), kept unreduced.
/// E is the ring element type (RingElement or QuadInt).
template <class E>
class StWord {
  public:
    struct Letter {
        bool pos12;  // x12 vs x21
        E value;
        int sign;  // +1 or -1 exponent
    };

    StWord() = default;

    const std::vector<Letter> &letters() const { return letters_; }
    size_t size() const { return letters_.size(); }

    StWord operator*(const StWord &o) const {
        StWord w = *this;
        w.letters_.insert(w.letters_.end(), o.letters_.begin(), o.letters_.end());
        return w;
    }

    StWord inverse() const {
        StWord w;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.letters_.push_back({it->pos12, it->value, -it->sign});
        return w;
    }

    static StWord x12(const E &r) { return single(true, r); }
    static StWord x21(const E &r) { return single(false, r); }

    /// w_ij(u) = x_ij(u) x_ji(-u^-1) x_ij(u); u must be a unit.
    static StWord w12(const E &u) { return w_word(true, u); }
    static StWord w21(const E &u) { return w_word(false, u); }

    /// h_ij(u) = w_ij(u) w_ij(-1)
    static StWord h12(const E &u) { return w12(u) * w12(-u.one()); }
    static StWord h21(const E &u) { return w21(u) * w21(-u.one()); }

    /// Steinberg symbol {u,v}_ij = h_ij(uv) h_ij(u)^-1 h_ij(v)^-1
    static StWord steinberg_symbol12(const E &u, const E &v) {
        return h12(u * v) * h12(u).inverse() * h12(v).inverse();
    }
    static StWord steinberg_symbol21(const E &u, const E &v) {
        return h21(u * v) * h21(u).inverse() * h21(v).inverse();
    }

    /// Dennis-Stein symbol <a,b>_12; requires 1 - ab a unit.
    static StWord dennis_stein12(const E &a, const E &b) { return ds_word(true, a, b); }
    static StWord dennis_stein21(const E &a, const E &b) { return ds_word(false, a, b); }

    /// Product of elementary matrices under x_ij(r) -> E_ij(r).
    Mat2<E> theta(const E &sample) const {
        Mat2<E> m = mat2_identity(sample);
        for (const auto &l : letters_) {
            E v = l.sign > 0 ? l.value : -l.value;
            m = m * (l.pos12 ? elem_E12(v) : elem_E21(v));
        }
        return m;
    }

    /// Letterwise image under St(2,A) -> C(A) -> A/M before reduction:
    /// x12(r) -> -r, x21(r) -> r. Reduce the result modulo M afterwards.
    E am_sum(const E &sample) const {
        E s = sample.zero();
        for (const auto &l : letters_) {
            E v = l.pos12 ? -l.value : l.value;
            s = l.sign > 0 ? s + v : s - v;
        }
        return s;
    }

  private:
    std::vector<Letter> letters_;

    static StWord single(bool pos12, const E &r) {
        StWord w;
        w.letters_.push_back({pos12, r, +1});
        return w;
    }
    static StWord w_word(bool pos12, const E &u) {
        if (!u.is_unit()) throw std::invalid_argument("w_ij(u): argument must be a unit");
        return single(pos12, u) * single(!pos12, -u.inverse()) * single(pos12, u);
    }
    static StWord ds_word(bool pos12, const E &a, const E &b) {
        E c = a.one() - a * b;
        if (!c.is_unit()) throw std::invalid_argument("<a,b>: 1 - ab must be a unit");
        E ci = c.inverse();
        StWord h = pos12 ? h12(c) : h21(c);
        return single(!pos12, (-b) * ci) * single(pos12, -a) * single(!pos12, b) *
               single(pos12, a * ci) * h.inverse();
    }
};

using RingWord = StWord<RingElement>;

/// am_sum reduced modulo M: the canonical representative of the coset.
RingElement am_image(const RingWord &word, const AdditiveSubgroup &m);

/// Parses the CLI word literal syntax, e.g. "x12(3) x21(-1) h12(5)^-1",
/// "SS(5,7)", "DS(2,2)". Integer arguments are mapped into the ring.
RingWord parse_word(const std::string &text, const RingPtr &ring);

struct RelationResidueReport {
    size_t alpha_checked = 0;
    size_t beta_checked = 0;
    size_t theta_mismatches = 0;   // matrix sides differ (implementation bug)
    size_t nonzero_residues = 0;   // am_image of lhs*rhs^-1 not 0 mod M
    bool exhaustive = false;
};

/// Checks the Steinberg relations (alpha) and (beta) through both evaluation
/// maps. Exhaustive when the instance space has at most 10^4 points, else
/// `samples` seeded uniform draws.
RelationResidueReport relation_residues(const RingPtr &ring, size_t samples = 1000,
                                        uint64_t seed = 0);

}  // namespace e2ab
