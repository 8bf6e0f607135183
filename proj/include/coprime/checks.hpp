#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coprime/graph.hpp"
#include "coprime/group.hpp"

namespace coprime {

enum class CheckStatus { holds, fails, not_applicable };

struct CheckResult {
  std::string name;
  std::string group;
  CheckStatus status = CheckStatus::holds;
  std::string witness;  // filled in when status == fails
  std::map<std::string, std::string> details;

  bool ok() const { return status != CheckStatus::fails; }
  const char* status_text() const;
};

// Structural facts about end vertices of coprime graphs, run as executable
// checks. Each check takes the group together with its graph; checks whose
// precondition needs |G| >= 3 (or >= 2) throw degenerate_group on smaller
// groups, while run_full_suite converts that into a not_applicable row.

// E_G = {x != e : rad(|x|) = rad(|G|)}; needs |G| >= 3.
CheckResult check_rad_characterization(const FiniteGroup&, const CoprimeGraph&);

// phi(|x|) <= |E_G| for every end vertex x; needs |G| >= 3.
CheckResult check_phi_bound(const FiniteGroup&, const CoprimeGraph&);

// When phi(|x|) = |E_G| for an end vertex x: |x| is squarefree and <x> is
// the unique cyclic subgroup of its order; needs |G| >= 3.
CheckResult check_unique_cyclic(const FiniteGroup&, const CoprimeGraph&);

// E_G has an element of prime-power order iff G is a p-group, and then
// |G| = |E_G| + 1.
CheckResult check_prime_power_equivalence(const FiniteGroup&, const CoprimeGraph&);

// |E_G| is odd iff G is a 2-group, and odd values have the form 2^n - 1.
CheckResult check_parity(const FiniteGroup&, const CoprimeGraph&);

// C_G(x) is the union of <y> over end vertices y in C_G(x), for each end
// vertex x.
CheckResult check_centralizer_union(const FiniteGroup&, const CoprimeGraph&);

// For even |E_G| = 2n >= 2: |G| <= 2n(Mn - n + 1) with M = max_phi_inverse(2n).
// Odd or empty E_G is reported not_applicable.
CheckResult check_order_bound_even(const FiniteGroup&, const CoprimeGraph&);

// When E_G lies inside a single cyclic subgroup <x> (x can then be taken
// among the end vertices): |G| <= |x| phi(|x|); reports whether the bound
// is met exactly. Needs |G| >= 3; not_applicable when the premise fails.
CheckResult check_cyclic_containment_bound(const FiniteGroup&, const CoprimeGraph&);

// Graph-engine invariants: compressed adjacency vs. the quadratic pairwise
// gcd oracle (for |G| <= 256), diameter <= 2, identity adjacent to all,
// star shape iff p-group (with |E_G| = |G| - 1 in the star case).
CheckResult check_graph_oracle(const FiniteGroup&, const CoprimeGraph&);
CheckResult check_graph_diameter(const FiniteGroup&, const CoprimeGraph&);
CheckResult check_identity_universal(const FiniteGroup&, const CoprimeGraph&);
CheckResult check_star_iff_p_group(const FiniteGroup&, const CoprimeGraph&);

// 2n(Mn - n + 1) where M = max_phi_inverse(2n); the order bound attached to
// |E_G| = 2n. Throws invalid_parameter for n = 0.
uint64_t general_order_bound(uint64_t n);

// Edge set by direct pairwise gcd over element orders, bypassing the class
// compression. Quadratic; kept as the independent route the graph engine is
// checked against.
std::vector<std::pair<uint32_t, uint32_t>> brute_force_edges(const FiniteGroup&);

// Every check above (in a fixed order), never aborting on failure.
std::vector<CheckResult> run_full_suite(const FiniteGroup&);

}  // namespace coprime
