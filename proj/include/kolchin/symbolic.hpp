#pragma once

#include "kolchin/lattice.hpp"
#include "kolchin/numeric.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace kolchin {

/// A formal derivative theta(coordinate) of one matrix coordinate of one
/// abstract group member. The zero multi-index is the coordinate itself.
struct DerivedSymbol {
    int member = 0;
    int coord = 0;
    ExponentVector deriv;

    bool operator==(const DerivedSymbol&) const = default;
};

std::strong_ordering symbol_compare(const DerivedSymbol& a, const DerivedSymbol& b);

struct SymbolLess {
    bool operator()(const DerivedSymbol& a, const DerivedSymbol& b) const {
        return symbol_compare(a, b) < 0;
    }
};

using SymMonomial = std::map<DerivedSymbol, int, SymbolLess>;  // symbol -> power >= 1

struct SymMonomialGreater {
    bool operator()(const SymMonomial& a, const SymMonomial& b) const;
};

/// Decides whether a freshly derived symbol is annihilated by the ambient
/// constraint system.
using KillRule = std::function<bool(const DerivedSymbol&)>;

/// Rendering table: names[member][coord].
struct SymbolNames {
    std::vector<std::vector<std::string>> names;
};

/// Polynomial with exact integer coefficients in derived coordinate symbols.
class SymPoly {
public:
    using TermMap = std::map<SymMonomial, Int, SymMonomialGreater>;

    SymPoly() = default;
    static SymPoly constant(Int c);
    static SymPoly symbol(DerivedSymbol s);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Int constant_term() const;

    SymPoly operator+(const SymPoly& rhs) const;
    SymPoly operator-(const SymPoly& rhs) const;
    SymPoly operator*(const SymPoly& rhs) const;
    SymPoly operator-() const;
    bool operator==(const SymPoly&) const = default;

    /// Formal derivation d_d (1-based) via the Leibniz rule. Symbols whose
    /// incremented multi-index the rule kills are dropped on the spot.
    SymPoly derive(int d, const KillRule& kill) const;

    std::string to_string(const SymbolNames& names) const;

private:
    TermMap terms_;

    void add_term(const SymMonomial& mono, const Int& c);
};

}  // namespace kolchin
