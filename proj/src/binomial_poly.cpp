#include "kolchin/binomial_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace kolchin {

namespace {

// Dense univariate polynomial over Rat in the monomial basis; helpers for
// moving between the binomial and standard bases.
using StdPoly = std::vector<Rat>;

void std_trim(StdPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void std_add_scaled(StdPoly& acc, const StdPoly& p, const Rat& scale) {
    if (acc.size() < p.size()) acc.resize(p.size(), Rat(0));
    for (size_t i = 0; i < p.size(); ++i) acc[i] += p[i] * scale;
    std_trim(acc);
}

// Multiply by the linear factor (t + c).
StdPoly std_mul_linear(const StdPoly& p, const Rat& c) {
    StdPoly out(p.size() + 1, Rat(0));
    for (size_t i = 0; i < p.size(); ++i) {
        out[i + 1] += p[i];
        out[i] += p[i] * c;
    }
    std_trim(out);
    return out;
}

// C(t + offset, i) = (t + offset)(t + offset - 1)...(t + offset - i + 1) / i!
StdPoly falling_binomial(const Rat& offset, int i) {
    StdPoly out{Rat(1)};
    for (int j = 0; j < i; ++j) {
        out = std_mul_linear(out, offset - j);
    }
    Rat inv_fact = make_rat(1, factorial(static_cast<unsigned long>(i)));
    for (auto& c : out) c *= inv_fact;
    return out;
}

}  // namespace

void NumericalPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

NumericalPolynomial NumericalPolynomial::from_binomial_coeffs(std::vector<Int> coeffs) {
    NumericalPolynomial p;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

NumericalPolynomial NumericalPolynomial::constant(Int value) {
    return from_binomial_coeffs({std::move(value)});
}

NumericalPolynomial NumericalPolynomial::simplex(int m) {
    if (m < 0) throw std::invalid_argument("simplex: negative dimension");
    std::vector<Int> coeffs(static_cast<size_t>(m) + 1, Int(0));
    coeffs.back() = 1;
    return from_binomial_coeffs(std::move(coeffs));
}

NumericalPolynomial NumericalPolynomial::shifted_simplex(int m, std::int64_t shift) {
    if (m < 0) throw std::invalid_argument("shifted_simplex: negative dimension");
    // C(t - shift + m, m) in the standard basis, then rewrite.
    StdPoly p = falling_binomial(Rat(static_cast<long>(m - shift)), m);
    return from_standard(p);
}

NumericalPolynomial NumericalPolynomial::from_standard(const std::vector<Rat>& std_coeffs) {
    StdPoly rest = std_coeffs;
    std_trim(rest);
    std::vector<Int> coeffs(rest.size(), Int(0));
    while (!rest.empty()) {
        int d = static_cast<int>(rest.size()) - 1;
        // C(t+d, d) has leading standard coefficient 1/d!.
        Rat top = rest.back() * factorial(static_cast<unsigned long>(d));
        if (top.get_den() != 1) {
            throw std::invalid_argument(
                "from_standard: no integer binomial-basis expansion");
        }
        coeffs[static_cast<size_t>(d)] = top.get_num();
        std_add_scaled(rest, falling_binomial(Rat(d), d), -top);
        if (static_cast<int>(rest.size()) - 1 >= d) {
            throw std::logic_error("from_standard: degree did not drop");
        }
    }
    return from_binomial_coeffs(std::move(coeffs));
}

std::vector<Rat> NumericalPolynomial::standard_coeffs() const {
    StdPoly out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        std_add_scaled(out, falling_binomial(Rat(static_cast<long>(i)), static_cast<int>(i)),
                       Rat(coeffs_[i]));
    }
    return out;
}

const Int& NumericalPolynomial::leading_coeff() const {
    if (is_zero()) throw std::domain_error("leading_coeff of the zero polynomial");
    return coeffs_.back();
}

Int NumericalPolynomial::evaluate(const Int& t) const {
    if (t < 0) throw std::invalid_argument("evaluate: negative argument");
    Int acc = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        acc += coeffs_[i] * binomial(t + static_cast<long>(i), static_cast<unsigned long>(i));
    }
    return acc;
}

NumericalPolynomial NumericalPolynomial::operator+(const NumericalPolynomial& rhs) const {
    std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return from_binomial_coeffs(std::move(out));
}

NumericalPolynomial NumericalPolynomial::operator-(const NumericalPolynomial& rhs) const {
    return *this + (-rhs);
}

NumericalPolynomial NumericalPolynomial::operator-() const {
    std::vector<Int> out = coeffs_;
    for (auto& c : out) c = -c;
    return from_binomial_coeffs(std::move(out));
}

std::string NumericalPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = coeffs_[static_cast<size_t>(i)];
        if (a == 0) continue;
        Int mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "C(t+" << i << "," << i << ")";
        }
    }
    return os.str();
}

EventualComparison compare_eventual(const NumericalPolynomial& p,
                                    const NumericalPolynomial& q) {
    NumericalPolynomial diff = p - q;
    if (diff.is_zero()) return {EventualOrder::Equal, 0};

    EventualComparison cmp;
    cmp.order = diff.leading_coeff() > 0 ? EventualOrder::Greater : EventualOrder::Less;

    int d = diff.degree();
    if (d == 0) {
        cmp.threshold = 0;
        return cmp;
    }
    // For t >= 0 and i < d, C(t+i,i) <= C(t+d-1,d-1), so the lower-order part
    // is bounded by S * C(t+d-1,d-1) with S the sum of its absolute
    // coefficients, while the top term is |a_d| * C(t+d-1,d-1) * (t+d)/d.
    // The sign is locked in as soon as |a_d| * (t+d) > S * d.
    Int s = 0;
    const auto& coeffs = diff.binomial_coeffs();
    for (int i = 0; i < d; ++i) s += abs(coeffs[static_cast<size_t>(i)]);
    Int lead = abs(diff.leading_coeff());
    Int threshold;
    mpz_fdiv_q(threshold.get_mpz_t(), Int(s * d).get_mpz_t(), lead.get_mpz_t());
    threshold = threshold - d + 1;
    if (threshold < 0) threshold = 0;
    cmp.threshold = threshold;
    return cmp;
}

bool valid_invariants(const InvariantPair& p) {
    if (p.tau < -1) return false;
    if (p.tau == -1) return p.alpha == 0;
    return p.alpha >= 1;
}

InvariantPair invariants_of(const NumericalPolynomial& p) {
    if (p.is_zero()) return InvariantPair{};
    if (p.leading_coeff() < 0) {
        throw std::domain_error("invariants_of: negative leading coefficient");
    }
    return InvariantPair{p.degree(), p.leading_coeff()};
}

}  // namespace kolchin
