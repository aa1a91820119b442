#pragma once

#include "e2ab/abelian.hpp"
#include "e2ab/quadratic.hpp"

namespace e2ab {

/// Fundamental unit u > 1 of a real quadratic order O_d, u = a + b*theta.
struct FundamentalUnit {
    QuadraticOrder order;
    Int a, b;
    int norm;  // N(u), +1 or -1

    QuadInt value() const { return QuadInt(order, a, b); }
};

bool is_square_free(long m);

/// SL2(Z[1/m])^ab = E2(Z[1/m])^ab for square-free m >= 1.
AbelianGroup zinv_ab(long m);

/// PSL2(Z[1/m])^ab for square-free m >= 1.
AbelianGroup pslinv_ab(long m);

/// Fundamental unit by the periodic continued fraction of sqrt(d); for
/// d = 1 mod 4 the Pell solution is reduced to a half-integer unit through
/// the x^2 - d y^2 = +-4 form when one exists.
FundamentalUnit fundamental_unit(long d);

/// E2(O_d)^ab for d < 0 (the six-case table); for d > 0 the closed form for
/// O_d/M through the fundamental-unit reduction (the ideal <u^2-1> plus the
/// collapsed generators 6(u-1), 12), of which E2(O_d)^ab is a quotient.
AbelianGroup od_ab(long d);

/// O_d/M computed independently from lattice generators, no gcd shortcuts.
AbelianGroup od_m_oracle(long d);

/// Same lattice computation with the unit generating set enlarged to
/// {+-u^k : |k| <= power_radius}; used for the stabilization check (d > 0).
AbelianGroup od_m_oracle_extended(long d, int power_radius);

/// The Dennis-Stein / Steinberg symbol image that dies in E2(O_d)^ab for the
/// exceptional d in {-2, -7, -11}; an ordinary integer of O_d.
QuadInt exceptional_symbol_image(long d);

/// Quotient of O_d/M by the class of the exceptional symbol image.
AbelianGroup od_refined_ab(long d);

}  // namespace e2ab
