#include "kolchin/unipotent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace kolchin {

std::string to_string(ConstraintMode mode) {
    return mode == ConstraintMode::Componentwise ? "componentwise" : "literal";
}

ConstraintMode constraint_mode_from_string(const std::string& s) {
    if (s == "componentwise") return ConstraintMode::Componentwise;
    if (s == "literal" || s == "literal-composed") return ConstraintMode::LiteralComposed;
    throw std::invalid_argument("unknown constraint mode '" + s + "'");
}

void UnipotentGroupSpec::validate() const {
    if (k < 2) throw std::invalid_argument("spec: matrix size must be at least 2");
    if (m < 1) throw std::invalid_argument("spec: at least one derivation required");
    const size_t expected = static_cast<size_t>(k) * (k - 1) / 2;
    if (coords.size() != expected) {
        throw std::invalid_argument("spec: coordinates must cover the strict upper triangle");
    }
    std::set<std::pair<int, int>> seen;
    std::set<std::string> names;
    for (const auto& c : coords) {
        if (c.row < 1 || c.col > k || c.row >= c.col) {
            throw std::invalid_argument("spec: position outside the strict upper triangle");
        }
        if (!seen.emplace(c.row, c.col).second) {
            throw std::invalid_argument("spec: duplicate position");
        }
        if (c.name.empty() || !names.emplace(c.name).second) {
            throw std::invalid_argument("spec: coordinate names must be unique and nonempty");
        }
        for (int d : c.ann) {
            if (d < 1 || d > m) throw std::invalid_argument("spec: annihilator index out of range");
        }
        if (!std::is_sorted(c.ann.begin(), c.ann.end()) ||
            std::adjacent_find(c.ann.begin(), c.ann.end()) != c.ann.end()) {
            throw std::invalid_argument("spec: annihilator sets must be sorted and duplicate-free");
        }
    }
}

int UnipotentGroupSpec::coord_index(int row, int col) const {
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].row == row && coords[i].col == col) return static_cast<int>(i);
    }
    return -1;
}

int UnipotentGroupSpec::coord_named(const std::string& name) const {
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

UnipotentGroupSpec UnipotentGroupSpec::from_json(const nlohmann::json& j) {
    UnipotentGroupSpec spec;
    spec.k = j.at("k").get<int>();
    spec.m = j.at("m").get<int>();
    for (const auto& c : j.at("coords")) {
        CoordinateConstraint cc;
        cc.row = c.at("pos").at(0).get<int>();
        cc.col = c.at("pos").at(1).get<int>();
        cc.name = c.at("name").get<std::string>();
        if (c.contains("ann")) cc.ann = c.at("ann").get<std::vector<int>>();
        std::sort(cc.ann.begin(), cc.ann.end());
        spec.coords.push_back(std::move(cc));
    }
    if (j.contains("mode")) {
        spec.mode = constraint_mode_from_string(j.at("mode").get<std::string>());
    }
    std::sort(spec.coords.begin(), spec.coords.end(),
              [](const CoordinateConstraint& a, const CoordinateConstraint& b) {
                  return std::pair(a.row, a.col) < std::pair(b.row, b.col);
              });
    spec.validate();
    return spec;
}

nlohmann::ordered_json UnipotentGroupSpec::to_json() const {
    nlohmann::ordered_json j;
    j["k"] = k;
    j["m"] = m;
    j["coords"] = nlohmann::ordered_json::array();
    for (const auto& c : coords) {
        nlohmann::ordered_json jc;
        jc["pos"] = {c.row, c.col};
        jc["name"] = c.name;
        jc["ann"] = c.ann;
        j["coords"].push_back(std::move(jc));
    }
    j["mode"] = to_string(mode);
    return j;
}

SymbolicElement::SymbolicElement(int k) : k_(k), entries_(static_cast<size_t>(k) * k) {
    if (k < 1) throw std::invalid_argument("SymbolicElement: bad size");
    for (int i = 1; i <= k; ++i) at(i, i) = SymPoly::constant(1);
}

const SymPoly& SymbolicElement::at(int row, int col) const {
    return entries_[static_cast<size_t>(row - 1) * k_ + (col - 1)];
}

SymPoly& SymbolicElement::at(int row, int col) {
    return entries_[static_cast<size_t>(row - 1) * k_ + (col - 1)];
}

SymbolicElement generic_element(const UnipotentGroupSpec& spec, int member,
                                const std::set<int>& killed) {
    SymbolicElement e(spec.k);
    for (size_t i = 0; i < spec.coords.size(); ++i) {
        if (killed.count(static_cast<int>(i))) continue;
        const auto& c = spec.coords[i];
        DerivedSymbol s{member, static_cast<int>(i),
                        ExponentVector(std::vector<int>(static_cast<size_t>(spec.m), 0))};
        e.at(c.row, c.col) = SymPoly::symbol(std::move(s));
    }
    return e;
}

SymbolicElement identity_element(int k) { return SymbolicElement(k); }

SymbolicElement multiply(const SymbolicElement& a, const SymbolicElement& b) {
    if (a.size() != b.size()) throw std::invalid_argument("multiply: size mismatch");
    const int k = a.size();
    SymbolicElement out(k);
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            SymPoly acc;
            for (int l = 1; l <= k; ++l) {
                acc = acc + a.at(i, l) * b.at(l, j);
            }
            out.at(i, j) = acc;
        }
    }
    return out;
}

SymbolicElement inverse(const SymbolicElement& a) {
    const int k = a.size();
    // a = 1 + n with n strictly upper, so the Neumann series is finite:
    // a^{-1} = 1 - n + n^2 - ... +- n^{k-1}.
    SymbolicElement n(k);
    for (int i = 1; i <= k; ++i) n.at(i, i) = SymPoly();
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) n.at(i, j) = a.at(i, j);
    }
    SymbolicElement out(k);
    SymbolicElement power = n;
    int sign = -1;
    for (int step = 1; step < k; ++step) {
        for (int i = 1; i <= k; ++i) {
            for (int j = 1; j <= k; ++j) {
                out.at(i, j) = sign > 0 ? out.at(i, j) + power.at(i, j)
                                        : out.at(i, j) - power.at(i, j);
            }
        }
        power = multiply(power, n);
        sign = -sign;
    }
    return out;
}

SymbolicElement commutator(const SymbolicElement& a, const SymbolicElement& b) {
    return multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
}

KillRule kill_rule(const UnipotentGroupSpec& spec, ConstraintMode mode) {
    std::vector<std::vector<int>> ann_sets;
    ann_sets.reserve(spec.coords.size());
    for (const auto& c : spec.coords) ann_sets.push_back(c.ann);
    return [ann_sets, mode](const DerivedSymbol& s) {
        const auto& ann = ann_sets.at(static_cast<size_t>(s.coord));
        if (ann.empty()) return false;  // free coordinate
        if (mode == ConstraintMode::Componentwise) {
            for (int d : ann) {
                if (s.deriv[d - 1] >= 1) return true;
            }
            return false;
        }
        // Literal reading: only the composed operator (and anything above it
        // in the product order) annihilates.
        for (int d : ann) {
            if (s.deriv[d - 1] < 1) return false;
        }
        return true;
    };
}

namespace {

std::string stem_swap(const std::string& coord_name, const std::string& prefix) {
    size_t i = 0;
    while (i < coord_name.size() && std::isalpha(static_cast<unsigned char>(coord_name[i]))) ++i;
    return prefix + coord_name.substr(i);
}

}  // namespace

SymbolNames member_names(const UnipotentGroupSpec& spec,
                         const std::vector<std::string>& prefixes) {
    SymbolNames out;
    for (const auto& prefix : prefixes) {
        std::vector<std::string> row;
        row.reserve(spec.coords.size());
        for (const auto& c : spec.coords) row.push_back(stem_swap(c.name, prefix));
        out.names.push_back(std::move(row));
    }
    return out;
}

ClosureReport check_closure(const UnipotentGroupSpec& spec) {
    return check_closure(spec, spec.mode);
}

ClosureReport check_closure(const UnipotentGroupSpec& spec, ConstraintMode mode,
                            const std::set<int>& killed) {
    spec.validate();
    const KillRule kill = kill_rule(spec, mode);
    const SymbolicElement product =
        multiply(generic_element(spec, 0, killed), generic_element(spec, 1, killed));

    for (const auto& c : spec.coords) {
        if (c.ann.empty()) continue;
        const SymPoly& entry = product.at(c.row, c.col);
        if (mode == ConstraintMode::Componentwise) {
            for (int d : c.ann) {
                SymPoly residual = entry.derive(d, kill);
                if (!residual.is_zero()) {
                    return {false,
                            ClosureViolation{c.row, c.col, "d" + std::to_string(d), residual}};
                }
            }
        } else {
            SymPoly residual = entry;
            std::ostringstream label;
            for (size_t i = 0; i < c.ann.size(); ++i) {
                if (i) label << "*";
                label << "d" << c.ann[i];
                residual = residual.derive(c.ann[i], kill);
            }
            if (!residual.is_zero()) {
                return {false, ClosureViolation{c.row, c.col, label.str(), residual}};
            }
        }
    }
    return {true, std::nullopt};
}

OmegaPolynomial coordinate_omega(const UnipotentGroupSpec& spec, int coord) {
    if (coord < 0 || coord >= static_cast<int>(spec.coords.size())) {
        throw std::out_of_range("coordinate_omega: bad coordinate index");
    }
    const auto& ann = spec.coords[static_cast<size_t>(coord)].ann;
    std::vector<ExponentVector> leaders;
    if (!ann.empty()) {
        if (spec.mode == ConstraintMode::Componentwise) {
            for (int d : ann) leaders.push_back(unit_vector(spec.m, d));
        } else {
            std::vector<int> composed(static_cast<size_t>(spec.m), 0);
            for (int d : ann) composed[static_cast<size_t>(d - 1)] = 1;
            leaders.emplace_back(std::move(composed));
        }
    }
    return omega_E(LeaderSet(spec.m, std::move(leaders)));
}

OmegaPolynomial group_omega(const UnipotentGroupSpec& spec) {
    OmegaPolynomial out;
    for (size_t i = 0; i < spec.coords.size(); ++i) {
        OmegaPolynomial w = coordinate_omega(spec, static_cast<int>(i));
        out.poly = out.poly + w.poly;
        out.threshold = std::max(out.threshold, w.threshold);
    }
    return out;
}

namespace {

// First killed-position entry of e that fails to vanish, rendered.
std::optional<std::string> nonvanishing_entry(const UnipotentGroupSpec& spec,
                                              const SymbolicElement& e,
                                              const std::set<int>& killed,
                                              const SymbolNames& names,
                                              const char* what) {
    for (int idx : killed) {
        const auto& c = spec.coords[static_cast<size_t>(idx)];
        const SymPoly& entry = e.at(c.row, c.col);
        if (!entry.is_zero()) {
            std::ostringstream os;
            os << what << " entry (" << c.row << "," << c.col << ") = "
               << entry.to_string(names);
            return os.str();
        }
    }
    return std::nullopt;
}

}  // namespace

SubgroupCheck subgroup_from_kill(const UnipotentGroupSpec& spec, const std::set<int>& killed) {
    for (int idx : killed) {
        if (idx < 0 || idx >= static_cast<int>(spec.coords.size())) {
            throw std::out_of_range("subgroup_from_kill: bad coordinate index");
        }
    }
    const SymbolNames names = member_names(spec, {"u", "h", "g"});
    SubgroupCheck out;

    const SymbolicElement a = generic_element(spec, 0, killed);
    const SymbolicElement b = generic_element(spec, 1, killed);

    out.is_subgroup = true;
    if (auto fail = nonvanishing_entry(spec, multiply(a, b), killed, names, "product")) {
        out.is_subgroup = false;
        out.subgroup_failure = *fail;
    } else if (auto inv_fail =
                   nonvanishing_entry(spec, inverse(a), killed, names, "inverse")) {
        out.is_subgroup = false;
        out.subgroup_failure = *inv_fail;
    }

    const SymbolicElement g = generic_element(spec, 2);
    const SymbolicElement conj = multiply(multiply(g, a), inverse(g));
    out.is_normal = true;
    if (auto fail = nonvanishing_entry(spec, conj, killed, names, "conjugate")) {
        out.is_normal = false;
        out.normal_failure = *fail;
    }
    return out;
}

ComponentResult n_connected_component(const UnipotentGroupSpec& spec, int n) {
    spec.validate();
    if (n < 0) throw std::invalid_argument("n_connected_component: negative n");
    if (spec.mode != ConstraintMode::Componentwise) {
        throw std::invalid_argument(
            "n_connected_component: componentwise constraint mode required");
    }
    const int nc = static_cast<int>(spec.coords.size());
    if (nc > 20) throw std::invalid_argument("n_connected_component: too many coordinates");

    // Per-coordinate omegas are reused across all 2^nc - 1 candidates.
    std::vector<NumericalPolynomial> coord_polys;
    coord_polys.reserve(static_cast<size_t>(nc));
    for (int i = 0; i < nc; ++i) coord_polys.push_back(coordinate_omega(spec, i).poly);

    ComponentResult out;
    out.n = n;
    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask < (1u << nc); ++mask) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    std::set<int> kept_union;
    for (unsigned mask : masks) {
        ComponentCandidate cand;
        NumericalPolynomial quotient_poly;
        for (int i = 0; i < nc; ++i) {
            if (mask & (1u << i)) {
                cand.killed.insert(i);
                quotient_poly = quotient_poly + coord_polys[static_cast<size_t>(i)];
            }
        }
        const SubgroupCheck check = subgroup_from_kill(spec, cand.killed);
        cand.is_subgroup = check.is_subgroup;
        cand.is_normal = check.is_normal;
        cand.quotient = invariants_of(quotient_poly);
        cand.kept = cand.is_subgroup && cand.is_normal && cand.quotient.tau < n;
        if (cand.kept) kept_union.insert(cand.killed.begin(), cand.killed.end());
        out.audit.push_back(std::move(cand));
    }
    out.killed.assign(kept_union.begin(), kept_union.end());
    return out;
}

}  // namespace kolchin
