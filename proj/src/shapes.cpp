#include "kjdt/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace kjdt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ShapeError("partition parts must be positive: " + to_string());
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ShapeError("partition parts must be weakly decreasing: " + to_string());
  }
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0) throw ShapeError("negative rectangle dimensions");
  if (rows == 0 || cols == 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_rectangle() const {
  return parts_.empty() || parts_.front() == parts_.back();
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int r = 1; r <= other.length(); ++r)
    if (other.row(r) > row(r)) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> cols(static_cast<std::size_t>(width()), 0);
  for (int len : parts_)
    for (int c = 0; c < len; ++c) ++cols[static_cast<std::size_t>(c)];
  return Partition(std::move(cols));
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int r = 1; r <= length(); ++r)
    for (int c = 1; c <= row(r); ++c) out.push_back({r, c});
  return out;
}

std::vector<Box> Partition::removable_corners() const {
  std::vector<Box> out;
  for (int r = 1; r <= length(); ++r)
    if (row(r + 1) < row(r)) out.push_back({r, row(r)});
  return out;
}

std::vector<Box> Partition::addable_corners() const {
  std::vector<Box> out;
  for (int r = 1; r <= length() + 1; ++r)
    if (r == 1 || row(r - 1) > row(r)) out.push_back({r, row(r) + 1});
  return out;
}

Partition Partition::with_box(Box b) const {
  std::vector<int> p = parts_;
  if (b.row == length() + 1 && b.col == 1) {
    p.push_back(1);
  } else if (b.row >= 1 && b.row <= length() && b.col == row(b.row) + 1) {
    p[static_cast<std::size_t>(b.row - 1)] += 1;
  } else {
    throw ShapeError("box is not addable to " + to_string());
  }
  return Partition(std::move(p));
}

Partition Partition::without_box(Box b) const {
  if (!contains(b) || b.col != row(b.row) || row(b.row + 1) >= b.col)
    throw ShapeError("box is not removable from " + to_string());
  std::vector<int> p = parts_;
  p[static_cast<std::size_t>(b.row - 1)] -= 1;
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ']';
  return os.str();
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw ShapeError("inner shape " + inner_.to_string() + " is not contained in " + outer_.to_string());
}

std::vector<Box> SkewShape::boxes() const {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int r = 1; r <= outer_.length(); ++r)
    for (int c = inner_.row(r) + 1; c <= outer_.row(r); ++c) out.push_back({r, c});
  return out;
}

std::string SkewShape::to_string() const {
  if (is_straight()) return outer_.to_string();
  return outer_.to_string() + "/" + inner_.to_string();
}

AmbientRectangle::AmbientRectangle(int k_, int n_) : k(k_), n(n_) {
  if (k < 0 || n < k) throw ShapeError("ambient rectangle needs 0 <= k <= n");
}

void AmbientRectangle::require_fit(const Partition& p, const char* what) const {
  if (!fits(p))
    throw ShapeError(std::string(what) + " " + p.to_string() + " does not fit the " +
                     std::to_string(rows()) + "x" + std::to_string(cols()) + " rectangle");
}

DirectSumFrame::DirectSumFrame(int k1_, int n1_, int k2_, int n2_) : k1(k1_), n1(n1_), k2(k2_), n2(n2_) {
  if (k1 <= 0 || k2 <= 0 || n1 <= k1 || n2 <= k2)
    throw ShapeError("frame needs 0 < k1 < n1 and 0 < k2 < n2");
}

DirectSumFrame DirectSumFrame::minimal_for(const Partition& lambda, const Partition& mu, const Partition& nu) {
  int k1 = std::max(1, lambda.length());
  int k2 = std::max(1, mu.length());
  int c1 = std::max(1, lambda.width());
  int c2 = std::max(1, mu.width());
  if (nu.length() > k1 + k2) k1 = nu.length() - k2;
  if (nu.width() > c1 + c2) c1 = nu.width() - c2;
  return {k1, k1 + c1, k2, k2 + c2};
}

Partition dual_in_rectangle(const Partition& lambda, const AmbientRectangle& rect) {
  rect.require_fit(lambda, "partition");
  std::vector<int> parts;
  for (int i = 1; i <= rect.rows(); ++i) parts.push_back(rect.cols() - lambda.row(rect.rows() + 1 - i));
  return Partition(std::move(parts));
}

SkewShape star(const Partition& lambda, const Partition& mu) {
  std::vector<int> outer;
  for (int r = 1; r <= mu.length(); ++r) outer.push_back(lambda.width() + mu.row(r));
  for (int part : lambda.parts()) outer.push_back(part);
  return {Partition(std::move(outer)), Partition::rectangle(mu.length(), lambda.width())};
}

Partition dagger(const Partition& lambda, const Partition& mu, const DirectSumFrame& frame) {
  frame.first().require_fit(lambda, "lambda");
  frame.second().require_fit(mu, "mu");
  std::vector<int> rows;
  const int offset = frame.n1 - frame.k1;
  for (int r = 1; r <= frame.k2; ++r) rows.push_back(offset + mu.row(r));
  for (int part : lambda.parts()) rows.push_back(part);
  return Partition(std::move(rows));
}

Partition oslash(const Partition& mu, const Partition& lambda, const DirectSumFrame& frame) {
  frame.first().require_fit(lambda, "lambda");
  frame.second().require_fit(mu, "mu");
  std::vector<int> rows;
  const int offset = frame.n2 - frame.k2;
  for (int r = 1; r <= frame.k1; ++r) rows.push_back(offset + lambda.row(r));
  for (int part : mu.parts()) rows.push_back(part);
  return Partition(std::move(rows));
}

Partition omega(const DirectSumFrame& frame) {
  std::vector<int> rows(static_cast<std::size_t>(frame.k1), frame.n() - frame.k());
  rows.insert(rows.end(), static_cast<std::size_t>(frame.k2), frame.n2 - frame.k2);
  return Partition(std::move(rows));
}

std::vector<Partition> rook_strip_contractions(const Partition& nu) {
  // A rook strip can only use removable corners, and any set of them works.
  const std::vector<Box> corners = nu.removable_corners();
  std::vector<Partition> out;
  const std::size_t subsets = std::size_t{1} << corners.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<int> parts = nu.vec();
    for (std::size_t i = 0; i < corners.size(); ++i)
      if (mask & (std::size_t{1} << i)) parts[static_cast<std::size_t>(corners[i].row - 1)] -= 1;
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a > b;
  });
  return out;
}

std::vector<int> boundary_word(const Partition& lambda, const AmbientRectangle& rect) {
  rect.require_fit(lambda, "partition");
  std::vector<int> downs;
  int r = 0;
  int c = rect.cols();
  for (int step = 1; step <= rect.n; ++step) {
    if (r < rect.rows() && (c == 0 || lambda.row(r + 1) >= c)) {
      downs.push_back(step);
      ++r;
    } else {
      --c;
    }
  }
  return downs;
}

Partition from_boundary_word(const std::vector<int>& downs, const AmbientRectangle& rect) {
  if (static_cast<int>(downs.size()) != rect.rows())
    throw ShapeError("boundary word must have exactly k down steps");
  std::vector<int> parts;
  int c = rect.cols();
  std::size_t next = 0;
  for (int step = 1; step <= rect.n; ++step) {
    if (next < downs.size() && downs[next] == step) {
      parts.push_back(c);
      ++next;
    } else {
      if (c == 0) throw ShapeError("boundary word walks outside the rectangle");
      --c;
    }
  }
  if (next != downs.size()) throw ShapeError("boundary word entries must be increasing and within 1..n");
  return Partition(std::move(parts));
}

std::vector<Box> inner_corners(const SkewShape& shape) { return shape.inner().removable_corners(); }

std::vector<Box> outer_corners(const SkewShape& shape, const AmbientRectangle& ambient) {
  ambient.require_fit(shape.outer(), "outer shape");
  std::vector<Box> out;
  for (Box b : shape.outer().addable_corners())
    if (ambient.contains(b)) out.push_back(b);
  return out;
}

std::vector<Partition> partitions_in_rectangle(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int cap) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int v = 1; v <= cap; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(cols);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = std::min(remaining, cap); v >= 1; --v) {
      cur.push_back(v);
      rec(remaining - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace kjdt
