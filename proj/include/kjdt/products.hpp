#pragma once

// Tableau products built from K-rectification. Neither product is
// associative in general.

#include "kjdt/tableau.hpp"

namespace kjdt {

/// K-rectification of T placed southwest of U, corner to corner.
IncreasingTableau odot(const IncreasingTableau& t, const IncreasingTableau& u);

/// Z <- x, defined as Z odot [x].
IncreasingTableau hecke_insert(const IncreasingTableau& z, int x);

/// Inserts the row reading word of W into Z letter by letter.
IncreasingTableau diamond(const IncreasingTableau& z, const IncreasingTableau& w);

}  // namespace kjdt
