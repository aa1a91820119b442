#include <cctype>
#include <map>

#include "e2ab/finite_ring.hpp"

namespace e2ab {

namespace {

class RingSpecParser {
  public:
    explicit RingSpecParser(const std::string &text) : s_(text) {}

    RingPtr parse() {
        std::vector<RingPtr> factors;
        factors.push_back(parse_atom());
        for (;;) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == 'x') {
                ++pos_;
                factors.push_back(parse_atom());
            } else {
                break;
            }
        }
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return FiniteRing::product(std::move(factors));
    }

  private:
    const std::string &s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string &msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    uint64_t parse_nat() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected a number");
        uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<uint64_t>(s_[pos_] - '0');
            if (v > (1ull << 40)) fail("number too large");
            ++pos_;
        }
        return v;
    }

    std::string parse_ident() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_])))
            fail("expected an identifier");
        std::string id;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
            id += s_[pos_++];
        return id;
    }

    RingPtr parse_atom() {
        skip_ws();
        RingPtr r;
        if (pos_ < s_.size() && s_[pos_] == 'Z') {
            ++pos_;
            expect('/');
            uint64_t n = parse_nat();
            if (n < 1) fail("modulus must be >= 1");
            r = FiniteRing::zmod(n);
        } else if (s_.compare(pos_, 2, "GF") == 0) {
            pos_ += 2;
            expect('(');
            uint64_t q = parse_nat();
            expect(')');
            if (q < 2) fail("GF argument must be a prime power >= 2");
            uint64_t p = q;
            uint64_t sp = 0;
            for (uint64_t f = 2; f * f <= p; ++f)
                if (p % f == 0) {
                    sp = f;
                    break;
                }
            if (sp == 0) sp = p;
            unsigned k = 0;
            uint64_t t = q;
            while (t % sp == 0) {
                t /= sp;
                ++k;
            }
            if (t != 1) fail("GF argument must be a prime power");
            r = FiniteRing::galois_field(sp, k);
        } else {
            fail("expected 'Z/' or 'GF('");
        }
        while (peek_is('[')) {
            expect('[');
            std::string var = parse_ident();
            expect(']');
            expect('/');
            expect('(');
            r = parse_poly_quot(r, var);
            expect(')');
        }
        return r;
    }

    // monic polynomial in `var` with integer coefficients; returns base[var]/(f)
    RingPtr parse_poly_quot(const RingPtr &base, const std::string &var) {
        std::map<unsigned, Int> coeffs;
        bool first = true;
        for (;;) {
            skip_ws();
            Int sign = 1;
            if (eat('+')) {
            } else if (eat('-')) {
                sign = -1;
            } else if (!first) {
                break;
            }
            first = false;
            skip_ws();
            Int coef = 1;
            bool have_coef = false;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                coef = static_cast<long>(parse_nat());
                have_coef = true;
            }
            unsigned exp = 0;
            skip_ws();
            if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
                eat('*');
                std::string v = parse_ident();
                if (v != var) fail("unknown variable '" + v + "'");
                exp = 1;
                if (eat('^')) exp = static_cast<unsigned>(parse_nat());
            } else if (eat('*')) {
                std::string v = parse_ident();
                if (v != var) fail("unknown variable '" + v + "'");
                exp = 1;
                if (eat('^')) exp = static_cast<unsigned>(parse_nat());
            } else if (!have_coef) {
                fail("expected a polynomial term");
            }
            coeffs[exp] += sign * coef;
        }
        if (coeffs.empty()) fail("empty polynomial");
        unsigned deg = coeffs.rbegin()->first;
        if (deg < 1) fail("quotient polynomial must have degree >= 1");
        RingElement lead = base->from_int(coeffs[deg]);
        if (!(lead == base->one())) fail("quotient polynomial must be monic");
        std::vector<RingElement> cs;
        for (unsigned i = 0; i < deg; ++i) {
            auto it = coeffs.find(i);
            cs.push_back(base->from_int(it == coeffs.end() ? Int(0) : it->second));
        }
        return FiniteRing::poly_quot(base, std::move(cs), var);
    }
};

}  // namespace

RingPtr parse_ring_spec(const std::string &text) { return RingSpecParser(text).parse(); }

}  // namespace e2ab
