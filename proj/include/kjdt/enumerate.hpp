#pragma once

// Backtracking enumerators over the tableau families. Fillings are produced in
// row-major box order with values tried in increasing order, so two runs give
// the same sequence.

#include <functional>
#include <vector>

#include "kjdt/tableau.hpp"

namespace kjdt {

/// Worker `index` of `count` keeps the subtrees whose first-box choice has
/// position index mod count. The union over all workers is the full stream.
struct EnumerationSlice {
  int index = 0;
  int count = 1;
};

/// Contiguous alphabet {1, ..., m}.
std::vector<int> alphabet_upto(int m);

/// Calls `visit` for each increasing filling of `shape` with values from
/// `alphabet`; with `surjective`, only fillings using every letter.
void for_each_increasing(const SkewShape& shape, const std::vector<int>& alphabet, bool surjective,
                         const std::function<void(const IncreasingTableau&)>& visit,
                         EnumerationSlice slice = {});

std::vector<IncreasingTableau> enumerate_increasing(const SkewShape& shape, const std::vector<int>& alphabet,
                                                    bool surjective);

/// Removable corners of the outer shape that lie in the skew region.
std::vector<Box> markable_corners(const SkewShape& shape);

/// Every augmented tableau on `shape` whose numeric part uses exactly the
/// letters of `alphabet`.
void for_each_augmented(const SkewShape& shape, const std::vector<int>& alphabet,
                        const std::function<void(const AugmentedTableau&)>& visit);

std::vector<AugmentedTableau> enumerate_augmented(const SkewShape& shape, const std::vector<int>& alphabet);

/// Set-valued tableaux of shape `nu` with letter i used exactly content[i-1] times.
void for_each_set_valued(const Partition& nu, const std::vector<int>& content,
                         const std::function<void(const SetValuedTableau&)>& visit);

std::vector<SetValuedTableau> enumerate_set_valued(const Partition& nu, const std::vector<int>& content);

}  // namespace kjdt
