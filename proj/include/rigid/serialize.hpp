#pragma once

#include "json.hpp"
#include "rigid/equations.hpp"
#include "rigid/free_solvable.hpp"
#include "rigid/linalg.hpp"
#include "rigid/wreath.hpp"

namespace rigid {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json bigint_json(const BigInt& x);
BigInt bigint_from_json(const Json& j);

/// {m, n} for the trivial group, {m, n, vec} for class 1, and
/// {m, n, top, coords} with coords a list of ring elements otherwise.
Json to_json(const SolvableElement& e);
SolvableElement solvable_from_json(const Json& j);

/// [{coeff, element}, ...] in key order.
Json to_json(const SolvableRing& r);
SolvableRing ring_from_json(const Json& j, const SolvableAmbient& ambient);

/// {top, coords}.
Json to_json(const SplitMatrix<SolvableElement>& p);

/// {m, level, vec} at level 0, {m, level, top, base: [{at, vec}]} above.
Json to_json(const WreathElement& w);
WreathElement wreath_from_json(const Json& j);

/// [{exps, num, den}, ...].
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j, std::size_t variables);

/// {variables, rows: [[poly, ...], ...]}.
Json to_json(const LaurentMatrix& m);
LaurentMatrix laurent_matrix_from_json(const Json& j);

Json to_json(const PrincipalDimension& d);

/// {params: {m, n, radius, variables}, count, assignments}.
Json to_json(const SolutionSet& s);

}  // namespace rigid
