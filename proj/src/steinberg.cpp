#include "e2ab/steinberg.hpp"

#include <cctype>
#include <random>

namespace e2ab {

RingElement am_image(const RingWord &word, const AdditiveSubgroup &m) {
    RingElement s = word.am_sum(m.ring()->zero());
    return m.ring()->element(m.coset_rep(s.index()));
}

namespace {

class WordParser {
  public:
    WordParser(const std::string &text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

    RingWord parse() {
        RingWord w;
        skip_ws();
        while (pos_ < s_.size()) {
            RingWord piece = parse_piece();
            skip_ws();
            if (pos_ + 2 <= s_.size() && s_.compare(pos_, 2, "^-") == 0) {
                pos_ += 2;
                if (pos_ >= s_.size() || s_[pos_] != '1') fail("only exponent -1 is supported");
                ++pos_;
                piece = piece.inverse();
            }
            w = w * piece;
            skip_ws();
        }
        if (w.size() == 0) fail("empty word");
        return w;
    }

  private:
    const std::string &s_;
    RingPtr ring_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string &msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    long parse_int() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        return neg ? -v : v;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    RingWord parse_piece() {
        skip_ws();
        std::string name;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
            name += s_[pos_++];
        expect('(');
        RingElement a = ring_->from_int(parse_int());
        if (name == "x12") {
            expect(')');
            return RingWord::x12(a);
        }
        if (name == "x21") {
            expect(')');
            return RingWord::x21(a);
        }
        if (name == "w12") {
            expect(')');
            return RingWord::w12(a);
        }
        if (name == "w21") {
            expect(')');
            return RingWord::w21(a);
        }
        if (name == "h12") {
            expect(')');
            return RingWord::h12(a);
        }
        if (name == "h21") {
            expect(')');
            return RingWord::h21(a);
        }
        expect(',');
        RingElement b = ring_->from_int(parse_int());
        expect(')');
        if (name == "SS") return RingWord::steinberg_symbol12(a, b);
        if (name == "SS21") return RingWord::steinberg_symbol21(a, b);
        if (name == "DS") return RingWord::dennis_stein12(a, b);
        if (name == "DS21") return RingWord::dennis_stein21(a, b);
        fail("unknown word constructor '" + name + "'");
    }
};

}  // namespace

RingWord parse_word(const std::string &text, const RingPtr &ring) {
    return WordParser(text, ring).parse();
}

RelationResidueReport relation_residues(const RingPtr &ring, size_t samples, uint64_t seed) {
    RelationResidueReport rep;
    AdditiveSubgroup m = m_subgroup(ring);
    const size_t nr = ring->size();
    const auto &units = ring->units();
    const size_t nu = units.size();
    const RingElement z = ring->zero();

    auto check_alpha = [&](bool pos12, const RingElement &r, const RingElement &s) {
        RingWord lhs =
            (pos12 ? RingWord::x12(r) * RingWord::x12(s) : RingWord::x21(r) * RingWord::x21(s));
        RingWord rhs = pos12 ? RingWord::x12(r + s) : RingWord::x21(r + s);
        if (lhs.theta(z) != rhs.theta(z)) ++rep.theta_mismatches;
        if (!am_image(lhs * rhs.inverse(), m).is_zero()) ++rep.nonzero_residues;
        ++rep.alpha_checked;
    };
    auto check_beta = [&](bool pos12, const RingElement &u, const RingElement &r) {
        RingWord w = pos12 ? RingWord::w12(u) : RingWord::w21(u);
        RingWord xr = pos12 ? RingWord::x21(r) : RingWord::x12(r);
        RingWord lhs = w * xr * w.inverse();
        RingElement uru = -(u * r * u);
        RingWord rhs = pos12 ? RingWord::x12(uru) : RingWord::x21(uru);
        if (lhs.theta(z) != rhs.theta(z)) ++rep.theta_mismatches;
        if (!am_image(lhs * rhs.inverse(), m).is_zero()) ++rep.nonzero_residues;
        ++rep.beta_checked;
    };

    const size_t alpha_space = 2 * nr * nr;
    const size_t beta_space = 2 * nu * nr;
    if (alpha_space + beta_space <= 10000) {
        rep.exhaustive = true;
        for (int p = 0; p < 2; ++p)
            for (size_t i = 0; i < nr; ++i)
                for (size_t j = 0; j < nr; ++j)
                    check_alpha(p == 0, ring->element(i), ring->element(j));
        for (int p = 0; p < 2; ++p)
            for (size_t i = 0; i < nu; ++i)
                for (size_t j = 0; j < nr; ++j) check_beta(p == 0, units[i], ring->element(j));
    } else {
        std::mt19937_64 rng(seed);
        auto pick = [&rng](size_t n) { return static_cast<size_t>(rng() % n); };
        for (size_t k = 0; k < samples; ++k) {
            check_alpha(pick(2) == 0, ring->element(pick(nr)), ring->element(pick(nr)));
            check_beta(pick(2) == 0, units[pick(nu)], ring->element(pick(nr)));
        }
    }
    return rep;
}

}  // namespace e2ab
