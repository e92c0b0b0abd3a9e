#pragma once

#include <optional>
#include <vector>

#include "braids/garside.hpp"
#include "braids/periodic.hpp"
#include "braids/tubular.hpp"

namespace braids {

// Product of the interior braids along one orbit, in orbit order.
BraidWord orbit_interior_product(const TubularDecomposition& d, const std::vector<int>& orbit);

// The transfusion element: trivial tubular part, interior at orbit entry u
// equal to the suffix product of the interiors from u to the orbit's last
// tube. Conjugating by it empties every tube except the last one per orbit.
TubularDecomposition mu_element(const TubularDecomposition& d);

struct NuResult {
  TubularDecomposition nu;       // trivial tubular part, one conjugator per orbit
  std::vector<BraidWord> kappa;  // canonical class representative per orbit
};

// For a decomposition whose interiors are trivial away from the last tube of
// each orbit: the element whose conjugation replaces every last-tube interior
// by the canonical representative of its class. Conjugate orbits receive
// equal representatives. Empty when a summit enumeration exceeds the budget.
std::optional<NuResult> nu_element(const TubularDecomposition& d_prime,
                                   long long budget = 10000);

struct RegularFormResult {
  TubularDecomposition regular;
  BraidWord conjugator;          // ambient witness: conj^{-1} embed(d) conj = embed(regular)
  std::vector<BraidWord> kappa;  // canonical interior representative per orbit
};

// Conjugates d into regular form via mu and the canonical-representative
// conjugations nu. Empty when a summit enumeration exceeds the budget.
std::optional<RegularFormResult> to_regular_form(const TubularDecomposition& d,
                                                 long long budget = 10000);

enum class Check { Yes, No, Unknown };

Check is_regular_form(const TubularDecomposition& d, long long budget = 10000);

// (sigma_i delta^s)^r resp. (sigma_i gamma^s)^r on m strands: commutes with
// the standard power and swaps its point orbits i and i+1.
BraidWord orbit_swap_element(StandardElement kind, long long s, int r, int i, int m);

// Conjugacy of braids in regular form over a common curve system, assumed to
// be the canonical reduction system of both. Certificates are ambient.
ConjugacyResult regular_conjugacy_test(const RegularFormResult& a, const RegularFormResult& b,
                                       long long budget = 10000);

}  // namespace braids
