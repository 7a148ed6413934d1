#include "kolchin/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kolchin {

bool MonomialGreater::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("MultiPoly: negative variable count");
}

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
    MultiPoly p(nvars);
    p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 1 || index > nvars) {
        throw std::invalid_argument("MultiPoly::variable: index out of range");
    }
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(index - 1)] = 1;
    MultiPoly p(nvars);
    p.add_term(e, Rat(1));
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, std::vector<int> exps, const Rat& c) {
    if (static_cast<int>(exps.size()) != nvars) {
        throw std::invalid_argument("MultiPoly::monomial: wrong exponent length");
    }
    for (int e : exps) {
        if (e < 0) throw std::invalid_argument("MultiPoly::monomial: negative exponent");
    }
    MultiPoly p(nvars);
    p.add_term(exps, c);
    return p;
}

void MultiPoly::add_term(const std::vector<int>& exps, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

Rat MultiPoly::constant_value() const {
    if (!is_constant()) throw std::domain_error("constant_value of a non-constant");
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& lead = terms_.begin()->first;  // graded order: the top term is maximal
    return std::accumulate(lead.begin(), lead.end(), 0);
}

int MultiPoly::degree_in(int var) const {
    if (var < 1 || var > nvars_) throw std::invalid_argument("degree_in: bad variable");
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var - 1)]);
    return d;
}

namespace {
void check_same_vars(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars()) {
        throw std::invalid_argument("polynomials over different variable counts");
    }
}
}  // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    check_same_vars(*this, rhs);
    MultiPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
    check_same_vars(*this, rhs);
    MultiPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    check_same_vars(*this, rhs);
    MultiPoly out(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            std::vector<int> e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 1 || var > nvars_) throw std::out_of_range("derivative: bad variable");
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<size_t>(var - 1)];
        if (k == 0) continue;
        std::vector<int> e2(e);
        e2[static_cast<size_t>(var - 1)] -= 1;
        out.add_term(e2, c * k);
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool negative = c < 0;
        Rat mag = negative ? Rat(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        std::ostringstream mono;
        bool any_var = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) mono << "*";
            mono << "x" << (i + 1);
            if (e[i] > 1) mono << "^" << e[i];
            any_var = true;
        }
        if (!any_var) {
            os << rat_to_string(mag);
        } else if (mag == 1) {
            os << mono.str();
        } else {
            os << rat_to_string(mag) << "*" << mono.str();
        }
    }
    return os.str();
}

MultiPoly MultiPoly::div_exact(const MultiPoly& a, const MultiPoly& b) {
    check_same_vars(a, b);
    if (b.is_zero()) throw std::domain_error("div_exact: division by zero");
    MultiPoly q(a.nvars());
    MultiPoly r = a;
    const auto& [be, bc] = *b.terms().begin();
    while (!r.is_zero()) {
        const auto& [re, rc] = *r.terms().begin();
        std::vector<int> diff(re);
        for (size_t i = 0; i < diff.size(); ++i) {
            diff[i] -= be[i];
            if (diff[i] < 0) throw std::domain_error("div_exact: not divisible");
        }
        Rat c = rc / bc;
        q.add_term(diff, c);
        r = r - MultiPoly::monomial(a.nvars(), diff, c) * b;
    }
    return q;
}

namespace {

// Univariate view in variable v (1-based): degree -> coefficient polynomial
// with the v-exponent cleared.
std::vector<MultiPoly> uni_view(const MultiPoly& p, int v) {
    std::vector<MultiPoly> coeffs(static_cast<size_t>(std::max(0, p.degree_in(v)) + 1),
                                  MultiPoly(p.nvars()));
    for (const auto& [e, c] : p.terms()) {
        int d = e[static_cast<size_t>(v - 1)];
        std::vector<int> rest(e);
        rest[static_cast<size_t>(v - 1)] = 0;
        coeffs[static_cast<size_t>(d)] =
            coeffs[static_cast<size_t>(d)] + MultiPoly::monomial(p.nvars(), rest, c);
    }
    return coeffs;
}

MultiPoly v_power(int nvars, int v, int k) {
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(v - 1)] = k;
    return MultiPoly::monomial(nvars, e, Rat(1));
}

MultiPoly lead_coeff_in(const MultiPoly& p, int v) {
    auto u = uni_view(p, v);
    return u.back();
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_in(const MultiPoly& p, int v) {
    MultiPoly c(p.nvars());
    for (const auto& coeff : uni_view(p, v)) {
        if (!coeff.is_zero()) c = gcd_rec(c, coeff);
    }
    return c;
}

MultiPoly primitive_part(const MultiPoly& p, int v) {
    if (p.is_zero()) return p;
    return MultiPoly::div_exact(p, content_in(p, v));
}

MultiPoly make_monic(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rat(1) / p.terms().begin()->second);
}

// Plain monic Euclid for polynomials that involve only the variable v.
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, int v) {
    auto dense = [&](const MultiPoly& p) {
        std::vector<Rat> out(static_cast<size_t>(p.degree_in(v) + 1), Rat(0));
        for (const auto& [e, c] : p.terms()) out[static_cast<size_t>(e[static_cast<size_t>(v - 1)])] = c;
        return out;
    };
    auto trim = [](std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    std::vector<Rat> f = dense(a), g = dense(b);
    trim(f);
    trim(g);
    while (!g.empty()) {
        Rat inv = Rat(1) / g.back();
        for (auto& c : g) c *= inv;
        while (f.size() >= g.size()) {
            Rat lead = f.back();
            size_t off = f.size() - g.size();
            for (size_t i = 0; i < g.size(); ++i) f[off + i] -= lead * g[i];
            trim(f);
        }
        std::swap(f, g);
    }
    MultiPoly out(a.nvars());
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        std::vector<int> e(static_cast<size_t>(a.nvars()), 0);
        e[static_cast<size_t>(v - 1)] = static_cast<int>(i);
        out = out + MultiPoly::monomial(a.nvars(), e, f[i]);
    }
    return out;
}

// Pseudo-remainder of f by g in variable v, with the content stripped after
// every elimination step; only unit multiples matter to the gcd loop and the
// stripping keeps coefficient growth in check.
MultiPoly prem(const MultiPoly& f, const MultiPoly& g, int v) {
    MultiPoly r = f;
    const int dg = g.degree_in(v);
    const MultiPoly lg = lead_coeff_in(g, v);
    while (!r.is_zero() && r.degree_in(v) >= dg) {
        const int dr = r.degree_in(v);
        const MultiPoly lr = lead_coeff_in(r, v);
        r = lg * r - lr * v_power(r.nvars(), v, dr - dg) * g;
        if (!r.is_zero()) r = make_monic(primitive_part(r, v));
    }
    return r;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;

    int v = 0;
    for (int i = a.nvars(); i >= 1; --i) {
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
            v = i;
            break;
        }
    }
    if (v == 0) return MultiPoly::constant(a.nvars(), Rat(1));  // both constants

    bool only_v = true;
    for (int i = 1; i <= a.nvars() && only_v; ++i) {
        if (i != v && (a.degree_in(i) > 0 || b.degree_in(i) > 0)) only_v = false;
    }
    if (only_v) return univariate_gcd(a, b, v);

    const MultiPoly ca = content_in(a, v);
    const MultiPoly cb = content_in(b, v);
    MultiPoly f = MultiPoly::div_exact(a, ca);
    MultiPoly g = MultiPoly::div_exact(b, cb);
    if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);

    while (!g.is_zero()) {
        MultiPoly r = primitive_part(prem(f, g, v), v);
        f = g;
        g = r;
    }
    return gcd_rec(ca, cb) * f;
}

}  // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
    check_same_vars(a, b);
    return make_monic(gcd_rec(a, b));
}

}  // namespace kolchin
