#pragma once

#include <stdexcept>
#include <string>

namespace e2ab {

/// 2x2 matrix over a ring element type E. E must provide +, -, *, unary -,
/// ==, is_unit(), inverse(), and zero()/one() returning identities of the
/// same ring.
template <class E>
struct Mat2 {
    E a, b, c, d;  // (a b; c d)

    Mat2 operator*(const Mat2 &o) const {
        return Mat2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }

    bool operator==(const Mat2 &o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator!=(const Mat2 &o) const { return !(*this == o); }

    E det() const { return a * d - b * c; }

    bool is_invertible() const { return det().is_unit(); }

    Mat2 inverse() const {
        E dt = det();
        if (!dt.is_unit()) throw std::invalid_argument("Mat2: matrix is not invertible");
        E di = dt.inverse();
        return Mat2{d * di, (-b) * di, (-c) * di, a * di};
    }

    std::string to_string() const {
        return "[" + a.to_string() + " " + b.to_string() + "; " + c.to_string() + " " +
               d.to_string() + "]";
    }
};

template <class E>
Mat2<E> mat2_identity(const E &sample) {
    return Mat2<E>{sample.one(), sample.zero(), sample.zero(), sample.one()};
}

/// E(a) = (a 1; -1 0)
template <class E>
Mat2<E> elem_E(const E &a) {
    return Mat2<E>{a, a.one(), -a.one(), a.zero()};
}

/// D(a) = diag(a, a^-1), a a unit
template <class E>
Mat2<E> elem_D(const E &a) {
    if (!a.is_unit()) throw std::invalid_argument("D(a): argument must be a unit");
    return Mat2<E>{a, a.zero(), a.zero(), a.inverse()};
}

/// E12(a) = (1 a; 0 1)
template <class E>
Mat2<E> elem_E12(const E &a) {
    return Mat2<E>{a.one(), a, a.zero(), a.one()};
}

/// E21(a) = (1 0; a 1)
template <class E>
Mat2<E> elem_E21(const E &a) {
    return Mat2<E>{a.one(), a.zero(), a, a.one()};
}

/// W12(u) = (0 u; -u^-1 0)
template <class E>
Mat2<E> elem_W12(const E &u) {
    if (!u.is_unit()) throw std::invalid_argument("W12(u): argument must be a unit");
    return Mat2<E>{u.zero(), u, -u.inverse(), u.zero()};
}

/// W21(u) = (0 -u^-1; u 0)
template <class E>
Mat2<E> elem_W21(const E &u) {
    if (!u.is_unit()) throw std::invalid_argument("W21(u): argument must be a unit");
    return Mat2<E>{u.zero(), -u.inverse(), u, u.zero()};
}

/// H12(u) = W12(u) W12(-1) = D(u)
template <class E>
Mat2<E> elem_H12(const E &u) {
    return elem_W12(u) * elem_W12(-u.one());
}

/// H21(u) = W21(u) W21(-1) = D(u)^-1
template <class E>
Mat2<E> elem_H21(const E &u) {
    return elem_W21(u) * elem_W21(-u.one());
}

}  // namespace e2ab
