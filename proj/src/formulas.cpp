#include "e2ab/formulas.hpp"

#include <stdexcept>

#include "e2ab/steinberg.hpp"
#include "e2ab/subgroups.hpp"

namespace e2ab {

bool is_square_free(long m) { return QuadraticOrder::is_square_free(m); }

namespace {

void require_square_free(long m) {
    if (m < 1) throw std::invalid_argument("m must be a positive integer");
    if (!is_square_free(m)) throw std::invalid_argument("m must be square-free");
}

AbelianGroup cyclic(long n) {
    if (n <= 1) return AbelianGroup{};
    return AbelianGroup{0, {Int(n)}};
}

// Minimal solution of x^2 - d y^2 = +-1 via the continued fraction of
// sqrt(d): the convergent just before the first Q_k = 1, with the sign
// (-1)^period.
void pell_minimal(long d, Int &x, Int &y, int &norm) {
    Int D(d);
    Int a0 = sqrt(D);
    Int P = 0, Q = 1, a = a0;
    Int h_prev = 1, h = a0, k_prev = 0, k = 1;
    for (size_t i = 1;; ++i) {
        P = a * Q - P;
        Q = (D - P * P) / Q;
        if (Q == 1 && i > 0) {
            // one more partial quotient completes the period; the convergent
            // accumulated so far is the solution
            x = h;
            y = k;
            norm = (i % 2 == 0) ? 1 : -1;
            return;
        }
        a = (a0 + P) / Q;
        Int h_next = a * h + h_prev, k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        if (i > 100000) throw std::logic_error("pell_minimal: runaway expansion");
    }
}

}  // namespace

AbelianGroup zinv_ab(long m) {
    require_square_free(m);
    bool two = m % 2 == 0, three = m % 3 == 0;
    if (two && three) return AbelianGroup{};
    if (two) return cyclic(3);
    if (three) return cyclic(4);
    return cyclic(12);
}

AbelianGroup pslinv_ab(long m) {
    require_square_free(m);
    bool two = m % 2 == 0, three = m % 3 == 0;
    if (two && three) return AbelianGroup{};
    if (two) return cyclic(3);
    if (three) return cyclic(2);
    return cyclic(6);
}

FundamentalUnit fundamental_unit(long d) {
    if (d <= 1) throw std::invalid_argument("fundamental_unit: d must be > 1");
    QuadraticOrder order(d);
    Int x, y;
    int n;
    pell_minimal(d, x, y, n);

    if (!order.half_basis()) {
        FundamentalUnit u{order, x, y, n};
        if (abs(u.value().norm()) != 1) throw std::logic_error("fundamental_unit: not a unit");
        return u;
    }

    // d = 1 mod 4: the fundamental unit may be (t + Y sqrt(d))/2 with t, Y
    // odd and u^3 = x + y sqrt(d). Its trace t solves t^3 - 3 n t = 2x.
    Int target = 2 * x;
    Int t_guess;
    mpz_root(t_guess.get_mpz_t(), target.get_mpz_t(), 3);
    for (Int t = t_guess - 2; t <= t_guess + 2; ++t) {
        if (t <= 0) continue;
        if (t * t * t - 3 * n * t != target) continue;
        Int yy2 = t * t - 4 * n;
        if (yy2 % d != 0) continue;
        Int yy = yy2 / d;
        Int Y = sqrt(yy);
        if (Y * Y != yy || Y == 0) continue;
        if ((t - Y) % 2 != 0) continue;
        FundamentalUnit u{order, (t - Y) / 2, Y, n};
        if (abs(u.value().norm()) != 1) continue;
        return u;
    }
    // no half-integer cube root: the Pell unit is fundamental; rebase to omega
    FundamentalUnit u{order, x - y, 2 * y, n};
    if (abs(u.value().norm()) != 1) throw std::logic_error("fundamental_unit: not a unit");
    return u;
}

AbelianGroup od_ab(long d) {
    if (d == 0 || d == 1) throw std::invalid_argument("od_ab: d must not be 0 or 1");
    if (!is_square_free(d < 0 ? -d : d)) throw std::invalid_argument("od_ab: d must be square-free");
    if (d < 0) {
        switch (d) {
            case -1: return AbelianGroup{0, {2, 2}};
            case -2: return AbelianGroup{1, {6}};
            case -3: return AbelianGroup{0, {3}};
            case -7: return AbelianGroup{1, {4}};
            case -11: return AbelianGroup{1, {3}};
            default: return AbelianGroup{1, {12}};
        }
    }
    // Closed form through the fundamental-unit reduction: the ideal part of M
    // is <u^2 - 1> = <u -+ conj(u)> (sign by the norm), and modulo that ideal
    // the unit-pair generators collapse to 6(u-1) and 12. The quotient is
    // evaluated exactly; the coordinatewise gcd shortcut is only valid when
    // the relation subgroup is diagonal (d = 2,3 mod 4 with N(u) = 1).
    FundamentalUnit fu = fundamental_unit(d);
    QuadraticOrder order = fu.order;
    QuadInt u = fu.value();
    QuadInt w = fu.norm == 1 ? u - u.conjugate() : u + u.conjugate();
    QuadInt theta(order, 0, 1), six(order, 6, 0);
    QuadInt g = six * (u - u.one());
    IntMatrix rows(0, 2);
    rows.append_row({w.a(), w.b()});
    QuadInt tw = theta * w;
    rows.append_row({tw.a(), tw.b()});
    rows.append_row({g.a(), g.b()});
    rows.append_row({12, 0});
    return lattice_quotient(2, rows);
}

AbelianGroup od_m_oracle(long d) { return od_m_oracle_extended(d, 1); }

AbelianGroup od_m_oracle_extended(long d, int power_radius) {
    QuadraticOrder order(d);
    if (d < 0) return lattice_quotient(2, m_lattice_quadratic(order));
    QuadInt u = fundamental_unit(d).value();
    std::vector<QuadInt> units;
    QuadInt p = QuadInt(order, 1, 0);
    units.push_back(p);
    units.push_back(-p);
    for (int k = 1; k <= power_radius; ++k) {
        p = p * u;
        QuadInt pi = p.inverse();
        for (const QuadInt &v : {p, -p, pi, -pi}) units.push_back(v);
    }
    return lattice_quotient(2, m_lattice_from_units(order, units));
}

QuadInt exceptional_symbol_image(long d) {
    QuadraticOrder order(d);
    switch (d) {
        case -2: {
            // <-sqrt(-2), sqrt(-2)>, a Dennis-Stein symbol since 1+2 ... 1-ab = -1
            QuadInt s(order, 0, 1);
            return StWord<QuadInt>::dennis_stein12(-s, s).am_sum(s.zero());
        }
        case -7: {
            // <(1+sqrt(-7))/2, (1-sqrt(-7))/2>
            QuadInt x(order, 0, 1);  // omega = (1+sqrt(-7))/2
            return StWord<QuadInt>::dennis_stein12(x, x.conjugate()).am_sum(x.zero());
        }
        case -11: {
            // h(-1) (eps(x) eps(xbar))^3 with x = (1+sqrt(-11))/2, via
            // eps(v) -> v - 3, h(a) -> -3(a-1)
            QuadInt x(order, 0, 1);
            QuadInt three(order, 3, 0), six(order, 6, 0);
            return six + three * (x + x.conjugate() - six);
        }
        default:
            throw std::invalid_argument("exceptional_symbol_image: d must be -2, -7 or -11");
    }
}

AbelianGroup od_refined_ab(long d) {
    QuadraticOrder order(d);
    QuadInt s = exceptional_symbol_image(d);
    IntMatrix rows = m_lattice_quadratic(order);
    rows.append_row({s.a(), s.b()});
    return lattice_quotient(2, rows);
}

}  // namespace e2ab
