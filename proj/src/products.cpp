#include "kjdt/products.hpp"

#include "kjdt/jdt.hpp"

namespace kjdt {

IncreasingTableau odot(const IncreasingTableau& t, const IncreasingTableau& u) {
  if (!t.shape().is_straight() || !u.shape().is_straight())
    throw ShapeError("tableau products take straight-shape tableaux");
  const SkewShape shape = star(t.shape().outer(), u.shape().outer());
  std::vector<std::vector<int>> rows = u.rows();
  rows.insert(rows.end(), t.rows().begin(), t.rows().end());
  return krect(IncreasingTableau(shape, std::move(rows)));
}

IncreasingTableau hecke_insert(const IncreasingTableau& z, int x) {
  if (x <= 0) throw TableauError("inserted letters must be positive");
  return odot(z, IncreasingTableau::straight({{x}}));
}

IncreasingTableau diamond(const IncreasingTableau& z, const IncreasingTableau& w) {
  if (!z.shape().is_straight() || !w.shape().is_straight())
    throw ShapeError("tableau products take straight-shape tableaux");
  IncreasingTableau out = z;
  for (int letter : row_reading_word(w)) out = hecke_insert(out, letter);
  return out;
}

}  // namespace kjdt
