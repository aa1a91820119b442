#pragma once

#include <string>

#include "e2ab/abelian.hpp"

namespace e2ab {

/// Ring of integers O_d of Q(sqrt(d)), d square-free, with Z-basis (1, theta)
/// where theta = sqrt(d) for d = 2,3 mod 4 and theta = (1+sqrt(d))/2 for
/// d = 1 mod 4.
struct QuadraticOrder {
    long d;

    explicit QuadraticOrder(long d);

    bool half_basis() const;  // theta = (1+sqrt(d))/2
    bool operator==(const QuadraticOrder &) const = default;

    static bool is_square_free(long d);
};

/// Exact element s + t*theta of a quadratic order.
class QuadInt {
  public:
    QuadInt(QuadraticOrder order, Int s, Int t) : ord_(order), s_(std::move(s)), t_(std::move(t)) {}

    const QuadraticOrder &order() const { return ord_; }
    const Int &a() const { return s_; }  // coefficient of 1
    const Int &b() const { return t_; }  // coefficient of theta

    QuadInt operator+(const QuadInt &o) const;
    QuadInt operator-(const QuadInt &o) const;
    QuadInt operator*(const QuadInt &o) const;
    QuadInt operator-() const;
    bool operator==(const QuadInt &o) const;
    bool operator!=(const QuadInt &o) const { return !(*this == o); }

    QuadInt conjugate() const;
    Int norm() const;   // x * conj(x), always an integer
    Int trace() const;  // x + conj(x)

    bool is_zero() const { return s_ == 0 && t_ == 0; }
    bool is_unit() const;
    QuadInt inverse() const;  // units only

    QuadInt zero() const { return QuadInt(ord_, 0, 0); }
    QuadInt one() const { return QuadInt(ord_, 1, 0); }

    std::string to_string() const;

  private:
    QuadraticOrder ord_;
    Int s_, t_;
    void check_order(const QuadInt &o) const;
};

}  // namespace e2ab
