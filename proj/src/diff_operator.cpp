#include "kolchin/diff_operator.hpp"

#include <sstream>
#include <stdexcept>

namespace kolchin {

DiffOperator::DiffOperator(int m) : m_(m) {
    if (m < 0) throw std::invalid_argument("DiffOperator: negative derivation count");
}

DiffOperator DiffOperator::coefficient(int m, RatFunc c) {
    if (c.nvars() != m) throw std::invalid_argument("coefficient: wrong variable count");
    DiffOperator op(m);
    op.add_term(ExponentVector(std::vector<int>(static_cast<size_t>(m), 0)), c);
    return op;
}

DiffOperator DiffOperator::derivation(int m, int i) {
    DiffOperator op(m);
    op.add_term(unit_vector(m, i), RatFunc::constant(m, Rat(1)));
    return op;
}

DiffOperator DiffOperator::monomial(int m, ExponentVector theta, RatFunc c) {
    if (theta.dim() != m || c.nvars() != m) {
        throw std::invalid_argument("monomial: dimension mismatch");
    }
    DiffOperator op(m);
    op.add_term(theta, c);
    return op;
}

DiffOperator DiffOperator::identity(int m) {
    return coefficient(m, RatFunc::constant(m, Rat(1)));
}

void DiffOperator::add_term(const ExponentVector& theta, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(theta);
    if (it == terms_.end()) {
        terms_.emplace(theta, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int DiffOperator::order() const {
    int d = -1;
    for (const auto& [theta, c] : terms_) d = std::max(d, theta.ord());
    return d;
}

DiffOperator DiffOperator::operator+(const DiffOperator& rhs) const {
    if (m_ != rhs.m_) throw std::invalid_argument("operator mismatch: derivation counts");
    DiffOperator out = *this;
    for (const auto& [theta, c] : rhs.terms_) out.add_term(theta, c);
    return out;
}

DiffOperator DiffOperator::operator-(const DiffOperator& rhs) const {
    return *this + (-rhs);
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator out(m_);
    for (const auto& [theta, c] : terms_) out.terms_.emplace(theta, -c);
    return out;
}

namespace {

// Iterated partial derivative d^beta(c).
RatFunc iterated_derivative(const RatFunc& c, const ExponentVector& beta) {
    RatFunc out = c;
    for (int i = 0; i < beta.dim(); ++i) {
        for (int k = 0; k < beta[i]; ++k) {
            if (out.is_zero()) return out;
            out = out.derivative(i + 1);
        }
    }
    return out;
}

Rat multi_binomial(const ExponentVector& e, const ExponentVector& beta) {
    Int prod = 1;
    for (int i = 0; i < e.dim(); ++i) {
        prod *= binomial(Int(e[i]), static_cast<unsigned long>(beta[i]));
    }
    return Rat(prod);
}

}  // namespace

DiffOperator DiffOperator::operator*(const DiffOperator& rhs) const {
    if (m_ != rhs.m_) throw std::invalid_argument("operator mismatch: derivation counts");
    DiffOperator out(m_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            // d^ea (cb d^eb) = sum_{beta <= ea} C(ea, beta) d^beta(cb) d^{ea - beta + eb}
            std::vector<int> beta(static_cast<size_t>(m_), 0);
            while (true) {
                ExponentVector bv(beta);
                RatFunc deriv = iterated_derivative(cb, bv);
                if (!deriv.is_zero()) {
                    RatFunc coeff = ca * deriv * RatFunc::constant(m_, multi_binomial(ea, bv));
                    std::vector<int> theta(ea.entries);
                    for (size_t i = 0; i < theta.size(); ++i) {
                        theta[i] = theta[i] - beta[i] + eb[static_cast<int>(i)];
                    }
                    out.add_term(ExponentVector(std::move(theta)), coeff);
                }
                // odometer over 0 <= beta <= ea
                size_t pos = 0;
                while (pos < beta.size()) {
                    if (beta[pos] < ea[static_cast<int>(pos)]) {
                        ++beta[pos];
                        break;
                    }
                    beta[pos] = 0;
                    ++pos;
                }
                if (pos == beta.size()) break;
            }
        }
    }
    return out;
}

DiffOperator DiffOperator::pow(unsigned long k) const {
    DiffOperator out = identity(m_);
    for (unsigned long i = 0; i < k; ++i) out = out * *this;
    return out;
}

RatFunc DiffOperator::apply(const RatFunc& f) const {
    if (f.nvars() != m_) throw std::invalid_argument("apply: wrong variable count");
    RatFunc out(m_);
    for (const auto& [theta, c] : terms_) {
        out = out + c * iterated_derivative(f, theta);
    }
    return out;
}

ExponentVector DiffOperator::leader() const {
    if (is_zero()) throw std::domain_error("leader of the zero operator");
    return terms_.begin()->first;
}

std::string DiffOperator::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [theta, c] : terms_) {
        std::ostringstream mono;
        bool any = false;
        for (int i = 0; i < theta.dim(); ++i) {
            if (theta[i] == 0) continue;
            if (any) mono << "*";
            mono << "d" << (i + 1);
            if (theta[i] > 1) mono << "^" << theta[i];
            any = true;
        }

        // Pull a leading minus out of single-term coefficients so the terms
        // splice with +/- between them.
        std::string body;
        bool negative = false;
        if (!any) {
            if (c.is_polynomial() && c.num().terms().size() > 1) {
                body = "(" + c.to_string() + ")";
            } else {
                std::string cs = c.to_string();
                // Single-term coefficients expose their sign up front.
                if (!cs.empty() && cs[0] == '-') {
                    negative = true;
                    cs = cs.substr(1);
                }
                body = cs;
            }
        } else if (c.is_polynomial() && c.num().terms().size() == 1) {
            Rat coeff = c.num().terms().begin()->second;
            negative = coeff < 0;
            MultiPoly mag = negative ? -c.num() : c.num();
            if (mag.is_constant() && mag.constant_value() == 1) {
                body = mono.str();
            } else {
                body = mag.to_string() + "*" + mono.str();
            }
        } else {
            body = "(" + c.to_string() + ")*" + mono.str();
        }

        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        os << body;
    }
    return os.str();
}

RatFunc derive_coeff(int i, const RatFunc& c) {
    if (i < 1 || i > c.nvars()) throw std::out_of_range("derive_coeff: index out of range");
    return c.derivative(i);
}

DiffOperator compose_sequence(const std::vector<DiffOperator>& factors,
                              CompositionOrder order) {
    if (factors.empty()) throw std::invalid_argument("compose_sequence: no factors");
    if (order == CompositionOrder::LeftToRight) {
        DiffOperator acc = factors.front();
        for (size_t i = 1; i < factors.size(); ++i) acc = acc * factors[i];
        return acc;
    }
    DiffOperator acc = factors.back();
    for (size_t i = factors.size() - 1; i-- > 0;) acc = acc * factors[i];
    return acc;
}

FactorizationCheck verify_factorization(const DiffOperator& target,
                                        const std::vector<DiffOperator>& factors) {
    FactorizationCheck out;
    out.product_ltr = compose_sequence(factors, CompositionOrder::LeftToRight);
    out.product_rtl = compose_sequence(factors, CompositionOrder::RightToLeft);
    out.residual_ltr = target - out.product_ltr;
    out.residual_rtl = target - out.product_rtl;
    out.match_ltr = out.residual_ltr.is_zero();
    out.match_rtl = out.residual_rtl.is_zero();
    return out;
}

}  // namespace kolchin
