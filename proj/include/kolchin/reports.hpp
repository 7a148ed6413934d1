#pragma once

#include "kolchin/diff_operator.hpp"
#include "kolchin/invariants.hpp"
#include "kolchin/unipotent.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace kolchin::reports {

using Json = nlohmann::ordered_json;

// Every command produces a JSON report; the human-readable form is rendered
// from that JSON and never computed separately.

Json omega_report(const LeaderSet& leaders);
Json invariants_from_coeffs(const std::vector<Int>& coeffs);
Json invariants_from_systems(const std::vector<LeaderSet>& systems);
Json oracle_report(const LeaderSet& leaders, std::int64_t lo, std::int64_t hi);

Json operator_json(const DiffOperator& op);
Json compose_report(const std::vector<DiffOperator>& factors);
Json apply_report(const DiffOperator& op, const RatFunc& argument);
Json leader_report(const DiffOperator& op);
Json factorization_report(const DiffOperator& target, const std::vector<DiffOperator>& factors);

Json group_check_report(const UnipotentGroupSpec& spec, ConstraintMode mode,
                        const std::vector<std::string>& members);
Json commutator_report(const UnipotentGroupSpec& spec, const std::vector<std::string>& members);
Json component_report(const UnipotentGroupSpec& spec, int n);

std::string render_text(const std::string& command, const Json& report);

/// 0 for success or a verified Match/Ok, 1 for a Mismatch or Violation.
int exit_code(const std::string& command, const Json& report);

}  // namespace kolchin::reports
