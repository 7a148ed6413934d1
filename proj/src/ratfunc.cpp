#include "kolchin/ratfunc.hpp"

#include <stdexcept>

namespace kolchin {

RatFunc::RatFunc(int nvars) : num_(nvars), den_(MultiPoly::constant(nvars, Rat(1))) {}

RatFunc::RatFunc(MultiPoly numerator)
    : num_(std::move(numerator)), den_(MultiPoly::constant(num_.nvars(), Rat(1))) {}

RatFunc::RatFunc(MultiPoly numerator, MultiPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (num_.nvars() != den_.nvars()) {
        throw std::invalid_argument("RatFunc: mixed variable counts");
    }
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

RatFunc RatFunc::constant(int nvars, const Rat& c) {
    return RatFunc(MultiPoly::constant(nvars, c));
}

RatFunc RatFunc::variable(int nvars, int index) {
    return RatFunc(MultiPoly::variable(nvars, index));
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.nvars(), Rat(1));
        return;
    }
    MultiPoly g = MultiPoly::gcd(num_, den_);
    if (!g.is_constant() || g.constant_value() != 1) {
        num_ = MultiPoly::div_exact(num_, g);
        den_ = MultiPoly::div_exact(den_, g);
    }
    Rat lead = den_.terms().begin()->second;
    if (lead != 1) {
        Rat inv = Rat(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

bool RatFunc::is_polynomial() const {
    return den_.is_constant() && den_.constant_value() == 1;
}

bool RatFunc::is_constant() const {
    return num_.is_constant() && is_polynomial();
}

Rat RatFunc::constant_value() const {
    if (!is_constant()) throw std::domain_error("constant_value of a non-constant");
    return num_.constant_value();
}

RatFunc RatFunc::operator+(const RatFunc& rhs) const {
    return RatFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFunc RatFunc::operator-(const RatFunc& rhs) const {
    return RatFunc(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RatFunc RatFunc::operator*(const RatFunc& rhs) const {
    return RatFunc(num_ * rhs.num_, den_ * rhs.den_);
}

RatFunc RatFunc::operator/(const RatFunc& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(num_ * rhs.den_, den_ * rhs.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc RatFunc::derivative(int var) const {
    if (is_polynomial()) return RatFunc(num_.derivative(var));
    return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                   den_ * den_);
}

std::string RatFunc::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace kolchin
