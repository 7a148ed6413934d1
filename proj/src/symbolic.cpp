#include "kolchin/symbolic.hpp"

#include <sstream>
#include <stdexcept>

namespace kolchin {

std::strong_ordering symbol_compare(const DerivedSymbol& a, const DerivedSymbol& b) {
    if (auto c = a.member <=> b.member; c != 0) return c;
    if (auto c = a.coord <=> b.coord; c != 0) return c;
    return a.deriv.entries <=> b.deriv.entries;
}

bool SymMonomialGreater::operator()(const SymMonomial& a, const SymMonomial& b) const {
    int da = 0, db = 0;
    for (const auto& [s, k] : a) da += k;
    for (const auto& [s, k] : b) db += k;
    if (da != db) return da > db;
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (auto c = symbol_compare(ia->first, ib->first); c != 0) return c < 0;
        if (ia->second != ib->second) return ia->second > ib->second;
    }
    return ib != b.end();
}

SymPoly SymPoly::constant(Int c) {
    SymPoly p;
    p.add_term(SymMonomial{}, c);
    return p;
}

SymPoly SymPoly::symbol(DerivedSymbol s) {
    SymPoly p;
    SymMonomial mono;
    mono.emplace(std::move(s), 1);
    p.add_term(mono, 1);
    return p;
}

Int SymPoly::constant_term() const {
    auto it = terms_.find(SymMonomial{});
    return it == terms_.end() ? Int(0) : it->second;
}

void SymPoly::add_term(const SymMonomial& mono, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymPoly SymPoly::operator+(const SymPoly& rhs) const {
    SymPoly out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

SymPoly SymPoly::operator-(const SymPoly& rhs) const {
    SymPoly out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
    return out;
}

SymPoly SymPoly::operator-() const {
    SymPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

SymPoly SymPoly::operator*(const SymPoly& rhs) const {
    SymPoly out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            SymMonomial prod = ma;
            for (const auto& [s, k] : mb) prod[s] += k;
            out.add_term(prod, ca * cb);
        }
    }
    return out;
}

SymPoly SymPoly::derive(int d, const KillRule& kill) const {
    SymPoly out;
    for (const auto& [mono, c] : terms_) {
        for (const auto& [sym, power] : mono) {
            if (d < 1 || d > sym.deriv.dim()) {
                throw std::out_of_range("derive: derivation index out of range");
            }
            DerivedSymbol bumped = sym;
            bumped.deriv.entries[static_cast<size_t>(d - 1)] += 1;
            if (kill(bumped)) continue;

            SymMonomial rest = mono;
            auto it = rest.find(sym);
            if (it->second == 1) {
                rest.erase(it);
            } else {
                it->second -= 1;
            }
            rest[bumped] += 1;
            out.add_term(rest, c * power);
        }
    }
    return out;
}

std::string SymPoly::to_string(const SymbolNames& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        Int mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mono.empty()) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        bool first_sym = true;
        for (const auto& [sym, power] : mono) {
            if (!first_sym) os << "*";
            first_sym = false;
            const std::string& base =
                names.names.at(static_cast<size_t>(sym.member)).at(static_cast<size_t>(sym.coord));
            if (sym.deriv.is_zero()) {
                os << base;
            } else {
                bool any = false;
                for (int i = 0; i < sym.deriv.dim(); ++i) {
                    if (sym.deriv[i] == 0) continue;
                    if (any) os << "*";
                    os << "d" << (i + 1);
                    if (sym.deriv[i] > 1) os << "^" << sym.deriv[i];
                    any = true;
                }
                os << "(" << base << ")";
            }
            if (power > 1) os << "^" << power;
        }
    }
    return os.str();
}

}  // namespace kolchin
