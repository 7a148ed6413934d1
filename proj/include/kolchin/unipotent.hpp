#pragma once

#include "kolchin/invariants.hpp"
#include "kolchin/symbolic.hpp"

#include "json.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kolchin {

/// How a coordinate's annihilator set {d ...} is read as equations:
/// componentwise imposes d(u) = 0 for every listed derivation, literal
/// imposes only the single composed equation (d_a d_b ...)(u) = 0.
enum class ConstraintMode { Componentwise, LiteralComposed };

std::string to_string(ConstraintMode mode);
ConstraintMode constraint_mode_from_string(const std::string& s);

struct CoordinateConstraint {
    int row = 0, col = 0;        // 1-based strictly-upper position
    std::string name;
    std::vector<int> ann;        // annihilating derivation indices, sorted, 1-based
};

/// Upper-unitriangular matrix shape with one differential constraint set per
/// strictly-upper coordinate.
struct UnipotentGroupSpec {
    int k = 0;                   // matrix size
    int m = 0;                   // number of derivations
    std::vector<CoordinateConstraint> coords;  // row-major over the upper triangle
    ConstraintMode mode = ConstraintMode::Componentwise;

    void validate() const;       // throws std::invalid_argument
    int coord_index(int row, int col) const;   // -1 when absent
    int coord_named(const std::string& name) const;

    static UnipotentGroupSpec from_json(const nlohmann::json& j);
    nlohmann::ordered_json to_json() const;
};

/// k x k matrix of symbolic polynomials with unit diagonal.
class SymbolicElement {
public:
    explicit SymbolicElement(int k);

    int size() const { return k_; }
    const SymPoly& at(int row, int col) const;  // 1-based
    SymPoly& at(int row, int col);

    bool operator==(const SymbolicElement&) const = default;

private:
    int k_;
    std::vector<SymPoly> entries_;
};

/// Fresh generic member with the listed coordinates pinned to zero.
SymbolicElement generic_element(const UnipotentGroupSpec& spec, int member,
                                const std::set<int>& killed = {});
SymbolicElement identity_element(int k);

SymbolicElement multiply(const SymbolicElement& a, const SymbolicElement& b);
SymbolicElement inverse(const SymbolicElement& a);
SymbolicElement commutator(const SymbolicElement& a, const SymbolicElement& b);

/// Annihilation test for derived symbols under the spec's constraints.
KillRule kill_rule(const UnipotentGroupSpec& spec, ConstraintMode mode);

/// Rendering table for members; each coordinate name has its leading
/// alphabetic stem swapped for the member's prefix ("u12" + "h" -> "h12").
SymbolNames member_names(const UnipotentGroupSpec& spec,
                         const std::vector<std::string>& prefixes);

struct ClosureViolation {
    int row = 0, col = 0;
    std::string constraint;  // "d1" or the composed "d1*d2"
    SymPoly residual;
};

struct ClosureReport {
    bool ok = true;
    std::optional<ClosureViolation> violation;  // first one in row-major order
};

/// Applies every coordinate constraint to the symbolic product of two
/// generic members and checks that the residuals vanish. A nonempty killed
/// set restricts both members to the corresponding coordinate-kill subgroup.
ClosureReport check_closure(const UnipotentGroupSpec& spec);
ClosureReport check_closure(const UnipotentGroupSpec& spec, ConstraintMode mode,
                            const std::set<int>& killed = {});

/// Kolchin polynomial of a single coordinate's solution set, per the spec's
/// constraint mode.
OmegaPolynomial coordinate_omega(const UnipotentGroupSpec& spec, int coord);

/// Sum over all coordinates (the shape splits as a product variety).
OmegaPolynomial group_omega(const UnipotentGroupSpec& spec);

struct SubgroupCheck {
    bool is_subgroup = false;
    bool is_normal = false;
    std::string subgroup_failure;  // first nonvanishing entry, rendered
    std::string normal_failure;
};

/// Candidate obtained by pinning the listed coordinates to zero; closure
/// under product and inverse plus invariance under conjugation by a generic
/// element are checked symbolically.
SubgroupCheck subgroup_from_kill(const UnipotentGroupSpec& spec,
                                 const std::set<int>& killed);

struct ComponentCandidate {
    std::set<int> killed;
    bool is_subgroup = false;
    bool is_normal = false;
    InvariantPair quotient;  // invariants of the sum of killed coordinate omegas
    bool kept = false;
};

struct ComponentResult {
    int n = 0;
    std::vector<int> killed;  // union over the kept family, sorted
    std::vector<ComponentCandidate> audit;
};

/// Intersection of all normal coordinate-kill subgroups H with
/// tau(G/H) < n, reported as the union of their killed coordinates. The
/// result is relative to the coordinate-kill family; componentwise mode
/// only.
ComponentResult n_connected_component(const UnipotentGroupSpec& spec, int n);

}  // namespace kolchin
