#include "tropocat/axioms.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>

#include "tropocat/error.hpp"

namespace tropocat {

void TrialConfig::validate() const {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (max_feet < 1 || max_apex < 1 || max_label < 1) {
    throw Error(ErrorCode::InvalidArgument, "max_feet, max_apex and max_label must be >= 1");
  }
  if (exhaustive && !exhaustive_range()) {
    throw Error(ErrorCode::InvalidArgument,
                "exhaustive runs need max_feet <= 3, max_apex <= 3, max_label <= 1");
  }
}

namespace {

using Element = WeightingMonoid::Element;

std::vector<Element> allowed_labels(const WeightingMonoid& monoid, std::int64_t max_label,
                                    bool need_A1) {
  std::vector<Element> out;
  const Element hi = monoid.clamp(max_label);
  for (Element v = 0; v <= hi; ++v) {
    if (!monoid.contains(v)) continue;
    if (need_A1 && !monoid.in_A1(v)) continue;
    out.push_back(v);
  }
  if (out.empty()) out.push_back(need_A1 ? monoid.min_A1() : monoid.zero());
  return out;
}

Element draw_label(Rng& rng, const WeightingMonoid& monoid, std::int64_t max_label, bool need_A1) {
  auto options = allowed_labels(monoid, max_label, need_A1);
  return options[rng.below(options.size())];
}

std::vector<Element> draw_labels(Rng& rng, const WeightingMonoid& monoid, std::int64_t max_label,
                                 const std::vector<std::size_t>& feet) {
  std::vector<Element> labels;
  labels.reserve(feet.size());
  for (auto f : feet) labels.push_back(draw_label(rng, monoid, max_label, f <= 1));
  return labels;
}

WeightedCospan relabel(const WeightedCospan& shape, std::vector<Element> labels) {
  return WeightedCospan(shape.left_size(), shape.right_size(), shape.left_map(), shape.right_map(),
                        std::move(labels));
}

// Splits a morphism of (m1 ⊔ m2) -> (n1 ⊔ n2) into its two blocks, or nullopt
// when some class is hit by feet from both blocks.
std::optional<std::pair<WeightedCospan, WeightedCospan>> split_blocks(const WeightedCospan& p,
                                                                      std::size_t m1,
                                                                      std::size_t n1) {
  const std::size_t k = p.class_count();
  std::vector<int> block(k, -1);
  auto mark = [&](std::size_t cls, int b) {
    if (block[cls] == -1) block[cls] = b;
    return block[cls] == b;
  };
  for (std::size_t a = 0; a < p.left_size(); ++a) {
    if (!mark(p.left_map()[a], a < m1 ? 0 : 1)) return std::nullopt;
  }
  for (std::size_t a = 0; a < p.right_size(); ++a) {
    if (!mark(p.right_map()[a], a < n1 ? 0 : 1)) return std::nullopt;
  }
  if (std::find(block.begin(), block.end(), -1) != block.end()) return std::nullopt;
  std::vector<std::size_t> local(k);
  std::array<std::vector<Element>, 2> labels;
  for (std::size_t c = 0; c < k; ++c) {
    local[c] = labels[block[c]].size();
    labels[block[c]].push_back(p.labels()[c]);
  }
  std::array<std::vector<std::size_t>, 2> lm, rm;
  for (std::size_t a = 0; a < p.left_size(); ++a) {
    lm[a < m1 ? 0 : 1].push_back(local[p.left_map()[a]]);
  }
  for (std::size_t a = 0; a < p.right_size(); ++a) {
    rm[a < n1 ? 0 : 1].push_back(local[p.right_map()[a]]);
  }
  return std::make_pair(
      WeightedCospan(m1, n1, lm[0], rm[0], labels[0]),
      WeightedCospan(p.left_size() - m1, p.right_size() - n1, lm[1], rm[1], labels[1]));
}

// Calls visit(labels) for every labelling of `feet.size()` classes with values
// from the allowed sets.
void for_each_labelling(const std::vector<std::size_t>& feet, const WeightingMonoid& monoid,
                        std::int64_t max_label,
                        const std::function<void(const std::vector<Element>&)>& visit) {
  std::vector<std::vector<Element>> options;
  for (auto f : feet) options.push_back(allowed_labels(monoid, max_label, f <= 1));
  std::vector<Element> current(feet.size());
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == feet.size()) {
      visit(current);
      return;
    }
    for (auto v : options[pos]) {
      current[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
}

template <typename Trial>
void run_random(Report& report, const TrialConfig& cfg, Trial&& trial) {
  std::vector<std::optional<Counterexample>> found(cfg.trials);
  parallel_for(cfg.trials, [&](std::size_t i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    found[i] = trial(rng, i);
  });
  report.random_trials = cfg.trials;
  for (auto& f : found) {
    if (f) report.counterexamples.push_back(std::move(*f));
  }
}

template <typename Case>
void run_cases(Report& report, std::size_t cases, Case&& body) {
  std::vector<std::vector<Counterexample>> found(cases);
  parallel_for(cases, [&](std::size_t i) { found[i] = body(i); });
  for (auto& f : found) {
    for (auto& c : f) report.counterexamples.push_back(std::move(c));
  }
}

Report make_report(const char* name, const TrialConfig& cfg, const WeightingMonoid& monoid) {
  cfg.validate();
  Report r;
  r.check = name;
  r.monoid = monoid.name();
  r.seed = cfg.seed;
  return r;
}

Counterexample witness(std::string property, std::size_t trial, std::vector<WeightedCospan> inputs,
                       std::vector<std::size_t> sizes = {}, int diagram = 0) {
  Counterexample c;
  c.property = std::move(property);
  c.trial = trial;
  c.inputs = std::move(inputs);
  c.sizes = std::move(sizes);
  c.diagram = diagram;
  return c;
}

}  // namespace

WeightedCospan random_weighted_cospan(Rng& rng, const WeightingMonoid& monoid, std::size_t left,
                                      std::size_t right, std::size_t max_apex,
                                      std::int64_t max_label, bool force_closed) {
  const std::size_t feet = left + right;
  std::size_t hit_bound = std::min(feet, max_apex);
  if (force_closed && hit_bound == max_apex && hit_bound > 0 && feet > 0) --hit_bound;
  std::size_t classes = 0;
  std::vector<std::size_t> assignment(feet);
  if (feet > 0) {
    classes = hit_bound == 0 ? 1 : 1 + rng.below(hit_bound);
    for (auto& a : assignment) a = rng.below(classes);
  }
  std::vector<std::size_t> hits(classes, 0);
  for (auto a : assignment) ++hits[a];
  const bool has_closed = std::find(hits.begin(), hits.end(), 0) != hits.end();
  if (force_closed && !has_closed) {
    const std::size_t room = max_apex > classes ? max_apex - classes : 1;
    classes += 1 + rng.below(room);
  }
  std::vector<std::size_t> lm(assignment.begin(), assignment.begin() + left);
  std::vector<std::size_t> rm(assignment.begin() + left, assignment.end());
  std::vector<std::size_t> feet_per(classes, 0);
  for (auto a : assignment) ++feet_per[a];
  auto labels = draw_labels(rng, monoid, max_label, feet_per);
  return WeightedCospan(left, right, std::move(lm), std::move(rm), std::move(labels));
}

WeightedCospan random_connected(Rng& rng, const WeightingMonoid& monoid, std::size_t left,
                                std::size_t right, std::int64_t max_label) {
  Element label = draw_label(rng, monoid, max_label, left + right <= 1);
  return WeightedCospan(left, right, std::vector<std::size_t>(left, 0),
                        std::vector<std::size_t>(right, 0), {label});
}

std::vector<WeightedCospan> all_weighted_cospans(const WeightingMonoid& monoid, std::size_t left,
                                                 std::size_t right, std::size_t max_apex,
                                                 std::int64_t max_label) {
  const std::size_t feet = left + right;
  std::vector<WeightedCospan> out;
  std::vector<std::size_t> assignment(feet);
  const auto closed_options = allowed_labels(monoid, max_label, true);

  // Restricted growth strings enumerate feet-to-class maps in canonical order.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t blocks) {
    if (pos == feet) {
      std::vector<std::size_t> feet_per(blocks, 0);
      for (auto a : assignment) ++feet_per[a];
      for (std::size_t closed = 0; blocks + closed <= max_apex; ++closed) {
        // Closed labels as a nondecreasing sequence.
        std::vector<std::size_t> idx(closed, 0);
        while (true) {
          for_each_labelling(feet_per, monoid, max_label, [&](const std::vector<Element>& hit) {
            std::vector<Element> labels = hit;
            for (auto i : idx) labels.push_back(closed_options[i]);
            out.emplace_back(left, right,
                             std::vector<std::size_t>(assignment.begin(), assignment.begin() + left),
                             std::vector<std::size_t>(assignment.begin() + left, assignment.end()),
                             std::move(labels));
          });
          // next nondecreasing index tuple
          std::size_t p = closed;
          while (p > 0 && idx[p - 1] + 1 == closed_options.size()) --p;
          if (p == 0) break;
          ++idx[p - 1];
          for (std::size_t q = p; q < closed; ++q) idx[q] = idx[p - 1];
        }
      }
      return;
    }
    for (std::size_t c = 0; c <= blocks && c < max_apex; ++c) {
      assignment[pos] = c;
      rec(pos + 1, std::max(blocks, c + 1));
    }
  };
  rec(0, 0);
  return out;
}

bool associativity_holds(const WeightedCospan& w1, const WeightedCospan& w2,
                         const WeightedCospan& w3, const WeightingMonoid& monoid) {
  return compose_weighted(compose_weighted(w1, w2, monoid), w3, monoid) ==
         compose_weighted(w1, compose_weighted(w2, w3, monoid), monoid);
}

bool euler_additivity_holds(const WeightedCospan& w1, const WeightedCospan& w2,
                            const WeightingMonoid& monoid) {
  return euler_characteristic(compose_weighted(w1, w2, monoid), monoid) ==
         euler_characteristic(w1, monoid) + euler_characteristic(w2, monoid);
}

bool pb_functoriality_holds(const WeightedCospan& w1, const WeightedCospan& w2,
                            const WeightingMonoid& monoid) {
  const auto composite = compose_weighted(w1, w2, monoid);
  if (!(pb_genus_functor(composite, monoid) ==
        pb_genus_functor(w1, monoid) + pb_genus_functor(w2, monoid))) {
    return false;
  }
  for (const WeightedCospan* w : {&w1, &w2, &composite}) {
    if (classify(w->cospan()).is_positive_boundary &&
        !(monoid.to_group(pb_genus_positive(*w, monoid)) == pb_genus_functor(*w, monoid))) {
      return false;
    }
  }
  if (classify(w1.cospan()).is_positive_boundary && classify(w2.cospan()).is_positive_boundary) {
    if (!classify(composite.cospan()).is_positive_boundary) return false;
    if (pb_genus_positive(composite, monoid) !=
        monoid.add(pb_genus_positive(w1, monoid), pb_genus_positive(w2, monoid))) {
      return false;
    }
  }
  return true;
}

bool closed_decomposition_holds(const WeightedCospan& w, const WeightingMonoid& monoid) {
  if (w.left_size() != 0 || w.right_size() != 0) return false;
  // Connected generators: one closed class each.
  std::vector<WeightedCospan> pieces;
  for (auto l : w.labels()) {
    auto piece = WeightedCospan::closed({l});
    if (!classify(piece.cospan()).is_connected || !is_stable(piece, monoid)) return false;
    pieces.push_back(piece);
  }
  WeightedCospan forward = WeightedCospan::closed({});
  for (const auto& p : pieces) forward = tensor(forward, p);
  WeightedCospan backward = WeightedCospan::closed({});
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) backward = tensor(backward, *it);
  if (!(forward == w) || !(backward == w)) return false;
  // The multiset of generators is recovered from the product.
  auto multiset = w.labels();
  std::sort(multiset.begin(), multiset.end());
  return split_reduced_closed(forward).closed == multiset;
}

bool reduced_closed_bijection_holds(const WeightedCospan& w) {
  auto split = split_reduced_closed(w);
  if (!classify(split.reduced.cospan()).is_reduced) return false;
  auto joined = join_reduced_closed(split.reduced, split.closed);
  if (!(joined == w)) return false;
  auto again = split_reduced_closed(joined);
  return again.reduced == split.reduced && again.closed == split.closed;
}

bool pullback_holds(const WeightedCospan& w1, const WeightedCospan& w2,
                    const WeightingMonoid& monoid, std::int64_t max_label) {
  if (!classify(w1.cospan()).is_reduced || !classify(w2.cospan()).is_reduced) {
    throw Error(ErrorCode::InvalidArgument, "pullback axiom is stated for reduced morphisms");
  }
  auto product = tensor(w1, w2);
  if (!classify(product.cospan()).is_reduced) return false;
  auto split = split_blocks(product, w1.left_size(), w1.right_size());
  if (!split || !(split->first == w1) || !(split->second == w2)) return false;
  if (max_label > 2) return true;

  std::int64_t bound = max_label;
  for (const WeightedCospan* w : {&w1, &w2}) {
    for (auto l : w->labels()) bound = std::max(bound, l);
  }
  std::size_t lifts = 0;
  auto feet1 = w1.feet_per_class();
  auto feet2 = w2.feet_per_class();
  for_each_labelling(feet1, monoid, bound, [&](const std::vector<Element>& l1) {
    auto lift1 = relabel(w1, l1);
    for_each_labelling(feet2, monoid, bound, [&](const std::vector<Element>& l2) {
      if (tensor(lift1, relabel(w2, l2)) == product) ++lifts;
    });
  });
  return lifts == 1;
}

namespace {

// Every reduced morphism over a disjoint union of reduced cospans splits, and
// the split recombines to it.
bool pullback_lift_holds(const WeightedCospan& p, std::size_t m1, std::size_t n1) {
  auto split = split_blocks(p, m1, n1);
  if (!split) return true;  // not over a disjoint union: outside the pullback
  if (!classify(split->first.cospan()).is_reduced ||
      !classify(split->second.cospan()).is_reduced) {
    return false;
  }
  return tensor(split->first, split->second) == p;
}

bool objects_decompose(std::size_t n) {
  WeightedCospan product = WeightedCospan::identity(0);
  for (std::size_t i = 0; i < n; ++i) product = tensor(product, WeightedCospan::identity(1));
  return product == WeightedCospan::identity(n);
}

bool closed_uniqueness_holds(const WeightedCospan& a, const WeightedCospan& b) {
  auto la = a.labels(), lb = b.labels();
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  return (la == lb) == (a == b);
}

}  // namespace

WeightedCospan surgery_P() { return WeightedCospan(1, 2, {0}, {0, 0}, {0}); }

WeightedCospan surgery_T(const WeightingMonoid& monoid) {
  return WeightedCospan(0, 1, {}, {0}, {monoid.alpha()});
}

bool surgery_diagram_holds(int diagram, const WeightedCospan& morphism, std::size_t m,
                           std::size_t n, const WeightingMonoid& monoid) {
  using W = WeightedCospan;
  const W P = surgery_P();
  auto id = [](std::size_t k) { return W::identity(k); };
  auto then = [&](const W& a, const W& b) { return compose_weighted(a, b, monoid); };
  switch (diagram) {
    case 1: {  // U : A ⊗ M -> B ⊗ N
      const W& U = morphism;
      W top = then(tensor(P, id(m)), tensor(id(1), U));
      W bottom = then(U, tensor(P, id(n)));
      return top == bottom;
    }
    case 2: {  // V : A ⊗ B ⊗ M -> N
      const W& V = morphism;
      W top = then(tensor(P, id(1 + m)), tensor(id(1), V));
      W swap_first = then(tensor(tensor(id(1), P), id(m)),
                          tensor(weighted_symmetry(1, 1), id(1 + m)));
      W bottom = then(swap_first, tensor(id(1), V));
      return top == bottom;
    }
    case 3: {  // W : M -> A ⊗ B ⊗ N
      const W& Wm = morphism;
      W right = then(then(Wm, tensor(tensor(id(1), P), id(n))),
                     tensor(weighted_symmetry(1, 1), id(1 + n)));
      W left = then(Wm, tensor(P, id(1 + n)));
      return right == left;
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "surgery diagrams are numbered 1..3");
  }
}

bool replay(const Counterexample& c, const WeightingMonoid& monoid, std::int64_t max_label) {
  const auto& in = c.inputs;
  if (c.property == "associativity") return associativity_holds(in.at(0), in.at(1), in.at(2), monoid);
  if (c.property == "euler_additivity") return euler_additivity_holds(in.at(0), in.at(1), monoid);
  if (c.property == "pb_functoriality") return pb_functoriality_holds(in.at(0), in.at(1), monoid);
  if (c.property == "closed_decomposition") return closed_decomposition_holds(in.at(0), monoid);
  if (c.property == "closed_uniqueness") return closed_uniqueness_holds(in.at(0), in.at(1));
  if (c.property == "object_decomposition") return objects_decompose(c.sizes.at(0));
  if (c.property == "reduced_closed_bijection") return reduced_closed_bijection_holds(in.at(0));
  if (c.property == "pullback") return pullback_holds(in.at(0), in.at(1), monoid, max_label);
  if (c.property == "pullback_lift") return pullback_lift_holds(in.at(0), c.sizes.at(0), c.sizes.at(1));
  if (c.property == "surgery") {
    return surgery_diagram_holds(c.diagram, in.at(0), c.sizes.at(0), c.sizes.at(1), monoid);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown property '" + c.property + "'");
}

// ---------------------------------------------------------------------------

Report check_associativity(const TrialConfig& cfg, const WeightingMonoid& monoid) {
  Report report = make_report("associativity", cfg, monoid);
  run_random(report, cfg, [&](Rng& rng, std::size_t i) -> std::optional<Counterexample> {
    std::size_t s[4];
    for (auto& x : s) x = rng.below(cfg.max_feet + 1);
    const bool force = i % 4 == 0;
    auto w1 = random_weighted_cospan(rng, monoid, s[0], s[1], cfg.max_apex, cfg.max_label, force);
    auto w2 = random_weighted_cospan(rng, monoid, s[1], s[2], cfg.max_apex, cfg.max_label, false);
    auto w3 = random_weighted_cospan(rng, monoid, s[2], s[3], cfg.max_apex, cfg.max_label, force);
    if (associativity_holds(w1, w2, w3, monoid)) return std::nullopt;
    return witness("associativity", i, {w1, w2, w3});
  });
  if (!cfg.exhaustive_range()) return report;

  // Every cospan with at most max_feet feet in total.
  const std::size_t F = cfg.max_feet;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<WeightedCospan>> hom;
  for (std::size_t a = 0; a <= F; ++a) {
    for (std::size_t b = 0; a + b <= F; ++b) {
      hom[{a, b}] = all_weighted_cospans(monoid, a, b, cfg.max_apex, cfg.max_label);
    }
  }
  struct Case {
    std::size_t a, b, c, d, first;
  };
  std::vector<Case> cases;
  for (std::size_t a = 0; a <= F; ++a)
    for (std::size_t b = 0; a + b <= F; ++b)
      for (std::size_t c = 0; b + c <= F; ++c)
        for (std::size_t d = 0; c + d <= F; ++d)
          for (std::size_t i = 0; i < hom[{a, b}].size(); ++i) cases.push_back({a, b, c, d, i});

  std::vector<std::size_t> counts(cases.size(), 0);
  run_cases(report, cases.size(), [&](std::size_t idx) {
    std::vector<Counterexample> bad;
    const Case& k = cases[idx];
    const auto& w1 = hom.at({k.a, k.b})[k.first];
    const auto& H2 = hom.at({k.b, k.c});
    const auto& H3 = hom.at({k.c, k.d});
    for (const auto& w2 : H2) {
      auto left12 = compose_weighted(w1, w2, monoid);
      for (const auto& w3 : H3) {
        ++counts[idx];
        auto lhs = compose_weighted(left12, w3, monoid);
        auto rhs = compose_weighted(w1, compose_weighted(w2, w3, monoid), monoid);
        if (!(lhs == rhs)) bad.push_back(witness("associativity", idx, {w1, w2, w3}));
      }
    }
    return bad;
  });
  for (auto c : counts) report.exhaustive_cases += c;
  return report;
}

Report check_axiom_decomposition(const TrialConfig& cfg, const WeightingMonoid& monoid) {
  Report report = make_report("axiom_decomposition", cfg, monoid);
  auto closed_sample = [&](Rng& rng) {
    std::size_t k = rng.below(cfg.max_apex + 1);
    std::vector<Element> labels;
    for (std::size_t i = 0; i < k; ++i) labels.push_back(draw_label(rng, monoid, cfg.max_label, true));
    return WeightedCospan::closed(std::move(labels));
  };
  run_random(report, cfg, [&](Rng& rng, std::size_t i) -> std::optional<Counterexample> {
    const std::size_t n = rng.below(cfg.max_feet + 1);
    if (!objects_decompose(n)) {
      auto c = witness("object_decomposition", i, {});
      c.sizes = {n};
      return c;
    }
    auto w = closed_sample(rng);
    if (!closed_decomposition_holds(w, monoid)) return witness("closed_decomposition", i, {w});
    // Same multiset in a shuffled order must give the same morphism.
    auto shuffled = w.labels();
    for (std::size_t j = shuffled.size(); j > 1; --j) std::swap(shuffled[j - 1], shuffled[rng.below(j)]);
    auto w_shuffled = WeightedCospan::closed(shuffled);
    if (!closed_uniqueness_holds(w, w_shuffled)) {
      return witness("closed_uniqueness", i, {w, w_shuffled});
    }
    auto other = closed_sample(rng);
    if (!closed_uniqueness_holds(w, other)) return witness("closed_uniqueness", i, {w, other});
    return std::nullopt;
  });
  if (cfg.exhaustive_range()) {
    auto all = all_weighted_cospans(monoid, 0, 0, cfg.max_apex, cfg.max_label);
    run_cases(report, all.size(), [&](std::size_t i) {
      std::vector<Counterexample> bad;
      if (!closed_decomposition_holds(all[i], monoid)) {
        bad.push_back(witness("closed_decomposition", i, {all[i]}));
      }
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (!closed_uniqueness_holds(all[i], all[j])) {
          bad.push_back(witness("closed_uniqueness", i, {all[i], all[j]}));
        }
      }
      return bad;
    });
    report.exhaustive_cases = all.size() * (all.size() + 1);
  }
  return report;
}

Report check_axiom_product(const TrialConfig& cfg, const WeightingMonoid& monoid) {
  Report report = make_report("axiom_product", cfg, monoid);
  const std::int64_t lift_bound = std::min<std::int64_t>(cfg.max_label, 2);
  run_random(report, cfg, [&](Rng& rng, std::size_t i) -> std::optional<Counterexample> {
    // (iii)
    const std::size_t m = rng.below(cfg.max_feet + 1), n = rng.below(cfg.max_feet + 1);
    auto w = random_weighted_cospan(rng, monoid, m, n, cfg.max_apex, cfg.max_label, i % 4 == 0);
    if (!reduced_closed_bijection_holds(w)) return witness("reduced_closed_bijection", i, {w});
    // (iv): reduced inputs only; non-reduced samples are filtered here.
    std::size_t s[4];
    for (auto& x : s) x = rng.below(cfg.max_feet + 1);
    auto a = split_reduced_closed(
                 random_weighted_cospan(rng, monoid, s[0], s[1], cfg.max_apex, lift_bound, false))
                 .reduced;
    auto b = split_reduced_closed(
                 random_weighted_cospan(rng, monoid, s[2], s[3], cfg.max_apex, lift_bound, false))
                 .reduced;
    if (!is_stable(a, monoid) || !is_stable(b, monoid)) return std::nullopt;
    if (!pullback_holds(a, b, monoid, lift_bound)) return witness("pullback", i, {a, b});
    // Labels assigned on the product's classes directly, then split.
    auto shape = tensor(a, b);
    auto p = relabel(shape, draw_labels(rng, monoid, cfg.max_label, shape.feet_per_class()));
    if (!pullback_lift_holds(p, s[0], s[1])) {
      auto c = witness("pullback_lift", i, {p});
      c.sizes = {s[0], s[1]};
      return c;
    }
    return std::nullopt;
  });
  if (cfg.exhaustive_range()) {
    std::vector<WeightedCospan> all;
    std::vector<std::pair<std::size_t, std::size_t>> reduced_sizes;
    std::vector<WeightedCospan> reduced;
    for (std::size_t m = 0; m <= cfg.max_feet; ++m) {
      for (std::size_t n = 0; m + n <= cfg.max_feet; ++n) {
        for (auto& w : all_weighted_cospans(monoid, m, n, cfg.max_apex, cfg.max_label)) {
          if (classify(w.cospan()).is_reduced) reduced.push_back(w);
          all.push_back(std::move(w));
        }
      }
    }
    run_cases(report, all.size(), [&](std::size_t i) {
      std::vector<Counterexample> bad;
      if (!reduced_closed_bijection_holds(all[i])) {
        bad.push_back(witness("reduced_closed_bijection", i, {all[i]}));
      }
      return bad;
    });
    run_cases(report, reduced.size(), [&](std::size_t i) {
      std::vector<Counterexample> bad;
      for (const auto& b : reduced) {
        if (!pullback_holds(reduced[i], b, monoid, cfg.max_label)) {
          bad.push_back(witness("pullback", i, {reduced[i], b}));
        }
      }
      return bad;
    });
    report.exhaustive_cases = all.size() + reduced.size() * reduced.size();
  }
  return report;
}

Report check_surgery_diagrams(const TrialConfig& cfg, const WeightingMonoid& monoid) {
  Report report = make_report("surgery_diagrams", cfg, monoid);
  auto check = [&](std::size_t idx, int diagram, std::size_t m, std::size_t n,
                   const WeightedCospan& f) -> std::optional<Counterexample> {
    if (surgery_diagram_holds(diagram, f, m, n, monoid)) return std::nullopt;
    auto c = witness("surgery", idx, {f}, {m, n}, diagram);
    c.detail = "diagram " + std::to_string(diagram) + " does not commute";
    return c;
  };
  auto shape = [](int diagram, std::size_t m, std::size_t n) -> std::pair<std::size_t, std::size_t> {
    switch (diagram) {
      case 1: return {1 + m, 1 + n};
      case 2: return {2 + m, n};
      default: return {m, 2 + n};
    }
  };
  run_random(report, cfg, [&](Rng& rng, std::size_t i) -> std::optional<Counterexample> {
    const int diagram = 1 + static_cast<int>(i % 3);
    const std::size_t m = rng.below(cfg.max_feet + 1), n = rng.below(cfg.max_feet + 1);
    auto [l, r] = shape(diagram, m, n);
    return check(i, diagram, m, n, random_connected(rng, monoid, l, r, cfg.max_label));
  });
  if (cfg.exhaustive_range()) {
    std::size_t idx = 0;
    for (int diagram = 1; diagram <= 3; ++diagram) {
      for (std::size_t m = 0; m <= cfg.max_feet; ++m) {
        for (std::size_t n = 0; n <= cfg.max_feet; ++n) {
          auto [l, r] = shape(diagram, m, n);
          for (auto label : allowed_labels(monoid, cfg.max_label, l + r <= 1)) {
            WeightedCospan f(l, r, std::vector<std::size_t>(l, 0), std::vector<std::size_t>(r, 0),
                             {label});
            if (auto c = check(idx, diagram, m, n, f)) report.counterexamples.push_back(*c);
            ++idx;
          }
        }
      }
    }
    report.exhaustive_cases = idx;
  }
  return report;
}

Report check_euler_additivity(const TrialConfig& cfg, const WeightingMonoid& monoid) {
  Report report = make_report("euler_additivity", cfg, monoid);
  run_random(report, cfg, [&](Rng& rng, std::size_t i) -> std::optional<Counterexample> {
    std::size_t s[3];
    for (auto& x : s) x = rng.below(cfg.max_feet + 1);
    auto w1 = random_weighted_cospan(rng, monoid, s[0], s[1], cfg.max_apex, cfg.max_label, i % 4 == 0);
    auto w2 = random_weighted_cospan(rng, monoid, s[1], s[2], cfg.max_apex, cfg.max_label, false);
    if (euler_additivity_holds(w1, w2, monoid)) return std::nullopt;
    return witness("euler_additivity", i, {w1, w2});
  });
  return report;
}

Report check_pb_functoriality(const TrialConfig& cfg, const WeightingMonoid& monoid) {
  Report report = make_report("pb_functoriality", cfg, monoid);
  run_random(report, cfg, [&](Rng& rng, std::size_t i) -> std::optional<Counterexample> {
    std::size_t s[3];
    for (auto& x : s) x = rng.below(cfg.max_feet + 1);
    auto w1 = random_weighted_cospan(rng, monoid, s[0], s[1], cfg.max_apex, cfg.max_label, i % 4 == 0);
    auto w2 = random_weighted_cospan(rng, monoid, s[1], s[2], cfg.max_apex, cfg.max_label, false);
    // Half the trials use positive-boundary morphisms so the A-valued branch
    // is exercised.
    if (i % 2 == 1) {
      auto make_pb = [&](std::size_t left, std::size_t right) {
        const std::size_t r = std::max<std::size_t>(right, 1);
        std::vector<std::size_t> rm(r), lm(left);
        const std::size_t k = 1 + rng.below(std::min(r, cfg.max_apex));
        for (std::size_t j = 0; j < r; ++j) rm[j] = j < k ? j : rng.below(k);
        for (auto& x : lm) x = rng.below(k);
        std::vector<std::size_t> feet(k, 0);
        for (auto x : lm) ++feet[x];
        for (auto x : rm) ++feet[x];
        return WeightedCospan(left, r, lm, rm, draw_labels(rng, monoid, cfg.max_label, feet));
      };
      w1 = make_pb(s[0], s[1]);
      w2 = make_pb(w1.right_size(), s[2]);
    }
    if (pb_functoriality_holds(w1, w2, monoid)) return std::nullopt;
    return witness("pb_functoriality", i, {w1, w2});
  });
  return report;
}

}  // namespace tropocat
