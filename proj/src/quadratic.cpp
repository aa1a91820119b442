#include "e2ab/quadratic.hpp"

#include <sstream>
#include <stdexcept>

namespace e2ab {

QuadraticOrder::QuadraticOrder(long d) : d(d) {
    if (d == 0 || d == 1) throw std::invalid_argument("QuadraticOrder: d must not be 0 or 1");
    if (!is_square_free(d)) throw std::invalid_argument("QuadraticOrder: d must be square-free");
}

bool QuadraticOrder::half_basis() const { return ((d % 4) + 4) % 4 == 1; }

bool QuadraticOrder::is_square_free(long d) {
    if (d < 0) d = -d;
    if (d == 0) return false;
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

void QuadInt::check_order(const QuadInt &o) const {
    if (!(ord_ == o.ord_)) throw std::invalid_argument("QuadInt: mixed quadratic orders");
}

QuadInt QuadInt::operator+(const QuadInt &o) const {
    check_order(o);
    return QuadInt(ord_, s_ + o.s_, t_ + o.t_);
}

QuadInt QuadInt::operator-(const QuadInt &o) const {
    check_order(o);
    return QuadInt(ord_, s_ - o.s_, t_ - o.t_);
}

QuadInt QuadInt::operator-() const { return QuadInt(ord_, -s_, -t_); }

QuadInt QuadInt::operator*(const QuadInt &o) const {
    check_order(o);
    const Int d = ord_.d;
    Int cross = s_ * o.t_ + t_ * o.s_;
    if (ord_.half_basis()) {
        // theta^2 = (d-1)/4 + theta
        Int tt = t_ * o.t_;
        return QuadInt(ord_, s_ * o.s_ + tt * ((d - 1) / 4), cross + tt);
    }
    return QuadInt(ord_, s_ * o.s_ + t_ * o.t_ * d, cross);
}

bool QuadInt::operator==(const QuadInt &o) const {
    check_order(o);
    return s_ == o.s_ && t_ == o.t_;
}

QuadInt QuadInt::conjugate() const {
    if (ord_.half_basis()) return QuadInt(ord_, s_ + t_, -t_);
    return QuadInt(ord_, s_, -t_);
}

Int QuadInt::norm() const {
    const Int d = ord_.d;
    if (ord_.half_basis()) return s_ * s_ + s_ * t_ + t_ * t_ * ((1 - d) / 4);
    return s_ * s_ - t_ * t_ * d;
}

Int QuadInt::trace() const {
    if (ord_.half_basis()) return 2 * s_ + t_;
    return 2 * s_;
}

bool QuadInt::is_unit() const {
    Int n = norm();
    return n == 1 || n == -1;
}

QuadInt QuadInt::inverse() const {
    Int n = norm();
    if (n == 1) return conjugate();
    if (n == -1) return -conjugate();
    throw std::invalid_argument("QuadInt: inverse of a non-unit");
}

std::string QuadInt::to_string() const {
    std::ostringstream out;
    const char *theta = ord_.half_basis() ? "w" : "sqrt(d)";
    out << s_.get_str();
    if (t_ != 0) {
        out << (t_ > 0 ? "+" : "-");
        Int at = abs(t_);
        if (at != 1) out << at.get_str() << "*";
        out << theta;
    }
    return out.str();
}

}  // namespace e2ab
