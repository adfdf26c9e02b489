#include "tropocat/finset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tropocat/error.hpp"

namespace tropocat {

FinSet::FinSet(std::size_t n, std::vector<std::string> names) : size(n), labels(std::move(names)) {
  if (!labels.empty()) {
    if (labels.size() != size) {
      throw Error(ErrorCode::InvalidArgument, "label count does not match FinSet size");
    }
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) {
      throw Error(ErrorCode::InvalidArgument, "FinSet labels must be distinct");
    }
  }
}

namespace {

std::size_t root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void unite(std::vector<std::size_t>& parent, std::size_t a, std::size_t b) {
  a = root(parent, a);
  b = root(parent, b);
  if (a == b) return;
  if (a < b) {
    parent[b] = a;
  } else {
    parent[a] = b;
  }
}

// Converts a union-find forest (with npos for non-members) into the compressed
// minimum-representative form.
std::vector<std::size_t> compress(std::vector<std::size_t> parent) {
  for (std::size_t x = 0; x < parent.size(); ++x) {
    if (parent[x] != PresentedSet::npos) parent[x] = root(parent, x);
  }
  return parent;
}

}  // namespace

PresentedSet::PresentedSet(std::size_t l, std::span<const std::size_t> members,
                           std::span<const std::pair<std::size_t, std::size_t>> identify)
    : rep_(l, npos) {
  for (std::size_t x : members) {
    if (x >= l) throw Error(ErrorCode::InvalidArgument, "presented set member out of range");
    rep_[x] = x;
  }
  for (auto [a, b] : identify) {
    if (!contains(a) || !contains(b)) {
      throw Error(ErrorCode::InvalidArgument, "relation on elements outside X");
    }
    unite(rep_, a, b);
  }
  rep_ = compress(std::move(rep_));
}

PresentedSet PresentedSet::discrete(std::size_t k) {
  PresentedSet p;
  p.rep_.resize(k);
  std::iota(p.rep_.begin(), p.rep_.end(), std::size_t{0});
  return p;
}

std::size_t PresentedSet::find(std::size_t x) const {
  if (!contains(x)) throw Error(ErrorCode::InvalidArgument, "element not in presented set");
  return rep_[x];
}

std::vector<std::size_t> PresentedSet::classes() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < rep_.size(); ++x) {
    if (rep_[x] == x) out.push_back(x);
  }
  return out;
}

std::size_t PresentedSet::class_count() const {
  std::size_t n = 0;
  for (std::size_t x = 0; x < rep_.size(); ++x) n += rep_[x] == x;
  return n;
}

PresentedSet glue(const PresentedSet& p, const PresentedSet& q, std::span<const std::size_t> i,
                  std::span<const std::size_t> j) {
  if (i.size() != j.size()) {
    throw Error(ErrorCode::FootMismatch, "gluing maps have different domains");
  }
  const std::size_t shift = p.universe();
  std::vector<std::size_t> parent(shift + q.universe(), PresentedSet::npos);
  std::copy(p.rep_.begin(), p.rep_.end(), parent.begin());
  for (std::size_t y = 0; y < q.universe(); ++y) {
    if (q.rep_[y] != PresentedSet::npos) parent[shift + y] = shift + q.rep_[y];
  }
  for (std::size_t a = 0; a < i.size(); ++a) {
    unite(parent, p.find(i[a]), shift + q.find(j[a]));
  }
  PresentedSet out;
  out.rep_ = compress(std::move(parent));
  return out;
}

Cospan::Cospan(FinSet left, FinSet right, PresentedSet apex, std::vector<std::size_t> left_map,
               std::vector<std::size_t> right_map)
    : left_(std::move(left)),
      right_(std::move(right)),
      apex_(std::move(apex)),
      left_map_(std::move(left_map)),
      right_map_(std::move(right_map)) {
  if (left_map_.size() != left_.size || right_map_.size() != right_.size) {
    throw Error(ErrorCode::InvalidArgument, "feet map size does not match feet");
  }
  for (auto& x : left_map_) x = apex_.find(x);
  for (auto& x : right_map_) x = apex_.find(x);
}

Cospan Cospan::from_classes(std::size_t left, std::size_t right, std::size_t classes,
                            std::vector<std::size_t> left_map, std::vector<std::size_t> right_map) {
  return Cospan(FinSet(left), FinSet(right), PresentedSet::discrete(classes), std::move(left_map),
                std::move(right_map));
}

Cospan Cospan::identity(std::size_t n) {
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return from_classes(n, n, n, id, id);
}

Cospan compose(const Cospan& c1, const Cospan& c2) {
  if (c1.right_size() != c2.left_size()) {
    throw Error(ErrorCode::FootMismatch, "cannot compose: middle feet have sizes " +
                                             std::to_string(c1.right_size()) + " and " +
                                             std::to_string(c2.left_size()));
  }
  PresentedSet apex = glue(c1.apex(), c2.apex(), c1.right_map(), c2.left_map());
  const std::size_t shift = c1.apex().universe();
  std::vector<std::size_t> right = c2.right_map();
  for (auto& x : right) x += shift;
  return Cospan(c1.left(), c2.right(), std::move(apex), c1.left_map(), std::move(right));
}

Cospan tensor(const Cospan& a, const Cospan& b) {
  // Gluing along the empty set is the disjoint union of presented sets.
  PresentedSet apex = glue(a.apex(), b.apex(), {}, {});
  const std::size_t shift = a.apex().universe();
  std::vector<std::size_t> left = a.left_map();
  std::vector<std::size_t> right = a.right_map();
  for (auto x : b.left_map()) left.push_back(x + shift);
  for (auto x : b.right_map()) right.push_back(x + shift);
  return Cospan(FinSet(a.left_size() + b.left_size()), FinSet(a.right_size() + b.right_size()),
                std::move(apex), std::move(left), std::move(right));
}

std::vector<std::size_t> canonical_class_order(const Cospan& c) {
  const auto& rep = c.apex().representatives();
  std::vector<char> seen(rep.size(), 0);
  std::vector<std::size_t> order;
  auto visit = [&](std::size_t x) {
    if (!seen[x]) {
      seen[x] = 1;
      order.push_back(x);
    }
  };
  for (auto x : c.left_map()) visit(x);
  for (auto x : c.right_map()) visit(x);
  for (auto x : c.apex().classes()) visit(x);
  return order;
}

Cospan canonicalize(const Cospan& c) {
  auto order = canonical_class_order(c);
  std::vector<std::size_t> index(c.apex().universe(), PresentedSet::npos);
  for (std::size_t k = 0; k < order.size(); ++k) index[order[k]] = k;
  std::vector<std::size_t> left, right;
  left.reserve(c.left_size());
  right.reserve(c.right_size());
  for (auto x : c.left_map()) left.push_back(index[x]);
  for (auto x : c.right_map()) right.push_back(index[x]);
  return Cospan::from_classes(c.left_size(), c.right_size(), order.size(), std::move(left),
                              std::move(right));
}

CospanClassification classify(const Cospan& c) {
  CospanClassification out;
  const auto& rep = c.apex().representatives();
  std::vector<char> hit(rep.size(), 0), hit_right(rep.size(), 0);
  for (auto x : c.left_map()) hit[x] = 1;
  for (auto x : c.right_map()) hit[x] = hit_right[x] = 1;
  auto classes = c.apex().classes();
  out.is_connected = classes.size() == 1;
  out.is_reduced = true;
  out.is_positive_boundary = true;
  for (auto x : classes) {
    if (!hit[x]) {
      out.is_reduced = false;
      out.closed_classes.push_back(x);
    }
    if (!hit_right[x]) out.is_positive_boundary = false;
  }
  return out;
}

Cospan symmetry(std::size_t a, std::size_t b) {
  std::vector<std::size_t> left(a + b), right(a + b);
  std::iota(left.begin(), left.end(), std::size_t{0});
  // right foot k of b ⊗ a: first b of them are the old second block.
  for (std::size_t k = 0; k < b; ++k) right[k] = a + k;
  for (std::size_t k = 0; k < a; ++k) right[b + k] = k;
  return Cospan::from_classes(a + b, a + b, a + b, std::move(left), std::move(right));
}

}  // namespace tropocat
