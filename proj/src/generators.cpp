#include "chainrr/generators.hpp"

#include <algorithm>
#include <string>

#include "chainrr/closure.hpp"
#include "chainrr/literals.hpp"

namespace chainrr {

namespace {

void require_ctx(const ChainContext& ctx, const GeneratingSet& b) {
  if (b.ctx != ctx) {
    fail(ErrorKind::ContextMismatch, "generating set built over a different context");
  }
  for (const auto& t : b.elements) {
    if (t.ctx() != ctx) {
      fail(ErrorKind::ContextMismatch, "generating set element over a different context");
    }
  }
}

// ker beta has interval blocks with exactly m = |Y| of them.
bool has_interval_kernel_of_full_rank(const ChainContext& ctx, const Transformation& t) {
  auto cls = classify(kernel(t));
  return cls.tag == FamilyTag::Q && cls.l == ctx.m();
}

// Restrictions that are permutations of Y; only these can ever multiply to a
// permutation, so membership questions about permutations may drop the rest.
std::vector<YMap> permutation_restrictions(const std::vector<Transformation>& ts,
                                           std::size_t skip = SIZE_MAX) {
  std::vector<YMap> out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i == skip) {
      continue;
    }
    YMap r = restrict_to_y(ts[i]);
    if (r.is_permutation()) {
      out.push_back(std::move(r));
    }
  }
  return out;
}

bool ymap_set_contains(const std::vector<YMap>& set, const YMap& target) {
  return std::find(set.begin(), set.end(), target) != set.end();
}

}  // namespace

void GeneratingSet::add(Transformation t, std::string label) {
  if (t.ctx() != ctx) {
    fail(ErrorKind::ContextMismatch, "element over a different context");
  }
  if (!contains(t)) {
    elements.push_back(std::move(t));
    labels.push_back(std::move(label));
  }
}

bool GeneratingSet::contains(const Transformation& t) const {
  return std::find(elements.begin(), elements.end(), t) != elements.end();
}

Transformation build_eta(const ChainContext& ctx) {
  const int n = ctx.n();
  const int m = ctx.m();
  std::vector<int> images(static_cast<std::size_t>(n));
  if (m == 1) {
    std::fill(images.begin(), images.end(), ctx.y_at(1));
    return Transformation(ctx, std::move(images));
  }
  const bool ends_in_y = ctx.one_in_y() && ctx.n_in_y();
  const int fallback = ctx.one_in_y() ? ctx.y_at(2) : ctx.y_at(1);
  for (int x = 1; x <= n; ++x) {
    int image = 0;
    for (int i = 1; i < m; ++i) {
      if (ctx.y_at(i) <= x && x < ctx.y_at(i + 1)) {
        image = ctx.y_at(i + 1);
        break;
      }
    }
    if (image == 0) {
      if (x == ctx.y_at(m)) {
        image = ctx.y_at(1);
      } else if (!ends_in_y) {
        image = fallback;  // x below a_1 or above a_m
      } else {
        fail(ErrorKind::RangeViolation, "rotation map left a point uncovered");
      }
    }
    images[static_cast<std::size_t>(x) - 1] = image;
  }
  return Transformation(ctx, std::move(images));
}

Transformation build_alpha_p(const ChainContext& ctx, const Partition& p) {
  const int m = ctx.m();
  if (p.n() != ctx.n()) {
    fail(ErrorKind::ContextMismatch, "partition over a different chain");
  }
  auto cls = classify(p);
  if (cls.tag != FamilyTag::P || cls.l != m) {
    fail(ErrorKind::WrongClass, "kernel " + format_partition(p) + " is not an m-block member "
                                "of the endpoints-joined family (class " +
                                std::string(to_string(cls.tag)) + ", " + std::to_string(cls.l) +
                                " blocks)");
  }
  const bool shifted = ctx.one_in_y() && ctx.n_in_y();
  std::vector<int> images(static_cast<std::size_t>(ctx.n()));
  for (int x = 1; x <= ctx.n(); ++x) {
    int i = p.label_of(x) + 1;  // 1-based block index, blocks ordered by minimum
    int target = shifted ? (i < m ? i + 1 : 1) : i;
    images[static_cast<std::size_t>(x) - 1] = ctx.y_at(target);
  }
  return Transformation(ctx, std::move(images));
}

GeneratingSet canonical_a(const ChainContext& ctx) {
  if (!(1 < ctx.m() && ctx.m() < ctx.n())) {
    fail(ErrorKind::HypothesisViolation,
         "canonical relative generators need 1 < m < n, got m=" + std::to_string(ctx.m()) +
             " n=" + std::to_string(ctx.n()));
  }
  GeneratingSet out(ctx);
  out.add(build_eta(ctx), "eta");
  for (const auto& p : enumerate_p(ctx.n(), ctx.m())) {
    out.add(build_alpha_p(ctx, p), "alpha[" + format_partition(p) + "]");
  }
  return out;
}

Transformation kernel_witness(const Transformation& beta) {
  const auto& ctx = beta.ctx();
  if (!is_orientation_preserving(beta)) {
    fail(ErrorKind::HypothesisViolation, "kernel witness needs an orientation-preserving map");
  }
  if (beta.rank() != ctx.m()) {
    fail(ErrorKind::HypothesisViolation, "kernel witness needs rank m, got rank " +
                                             std::to_string(beta.rank()));
  }
  Partition ker = kernel(beta);
  auto cls = classify(ker);
  if (cls.tag == FamilyTag::P) {
    return build_alpha_p(ctx, ker);
  }
  // Interval kernel: blocks in chain order onto a_1..a_m.
  std::vector<int> images(static_cast<std::size_t>(ctx.n()));
  for (int x = 1; x <= ctx.n(); ++x) {
    images[static_cast<std::size_t>(x) - 1] = ctx.y_at(ker.label_of(x) + 1);
  }
  return Transformation(ctx, std::move(images));
}

CanonicalB canonical_b_t_mod_op(const ChainContext& ctx) {
  const int m = ctx.m();
  if (m >= ctx.n()) {
    fail(ErrorKind::HypothesisViolation,
         "relative generators over the orientation-preserving semigroup need m < n");
  }
  CanonicalB out(ctx);
  auto family = enumerate_r(ctx.n(), m);
  std::optional<std::size_t> designated;
  if (m >= 3) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      bool transversal = true;
      for (const auto& block : family[i].blocks()) {
        int hits = 0;
        for (int x : block) {
          hits += ctx.in_y(x) ? 1 : 0;
        }
        if (hits != 1) {
          transversal = false;
          break;
        }
      }
      if (transversal) {
        designated = i;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Partition& p = family[i];
    std::vector<int> images(static_cast<std::size_t>(ctx.n()));
    if (designated && *designated == i) {
      // Swap the targets of the blocks holding a_1 and a_2; fix the rest.
      for (int x = 1; x <= ctx.n(); ++x) {
        int block_of_x = p.label_of(x);
        int target = 0;
        for (int j = 1; j <= m; ++j) {
          if (p.label_of(ctx.y_at(j)) == block_of_x) {
            target = (j == 1) ? 2 : (j == 2 ? 1 : j);
            break;
          }
        }
        images[static_cast<std::size_t>(x) - 1] = ctx.y_at(target);
      }
      out.transposition_index = out.set.size();
    } else {
      for (int x = 1; x <= ctx.n(); ++x) {
        images[static_cast<std::size_t>(x) - 1] = ctx.y_at(p.label_of(x) + 1);
      }
    }
    out.set.add(Transformation(ctx, std::move(images)), "beta[" + format_partition(p) + "]");
  }
  return out;
}

std::uint64_t relrank_op_mod_o(const ChainContext& ctx) {
  const int m = ctx.m();
  const int n = ctx.n();
  if (m == 1) {
    return 0;
  }
  if (m >= n) {
    fail(ErrorKind::HypothesisViolation, "relative rank formula needs 1 < m < n");
  }
  std::uint64_t base = binomial(n - 1, m);
  return (ctx.one_in_y() && ctx.n_in_y()) ? base + 1 : base;
}

std::uint64_t relrank_t_mod_op(const ChainContext& ctx) {
  const int m = ctx.m();
  if (m == 1) {
    return 0;
  }
  return stirling2(ctx.n(), m) - binomial(ctx.n(), m);
}

MinRelgenReport check_min_relgen_op_mod_o(const ChainContext& ctx, const GeneratingSet& b) {
  require_ctx(ctx, b);
  if (!(1 < ctx.m() && ctx.m() < ctx.n())) {
    fail(ErrorKind::HypothesisViolation, "characterization needs 1 < m < n");
  }
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    if (!is_orientation_preserving(b.elements[i])) {
      fail(ErrorKind::ElementNotInOP, "element " + b.labels[i] + " is not orientation-preserving");
    }
  }

  std::vector<std::size_t> tilde, rest;
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    (has_interval_kernel_of_full_rank(ctx, b.elements[i]) ? tilde : rest).push_back(i);
  }

  auto family = enumerate_p(ctx.n(), ctx.m());
  for (const auto& p : family) {
    bool covered = false;
    for (std::size_t i : rest) {
      if (kernel(b.elements[i]) == p) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      return {false, "i", "kernel " + format_partition(p) + " not covered"};
    }
  }
  if (rest.size() != family.size()) {
    return {false, "ii",
            std::to_string(rest.size()) + " elements outside B~, expected " +
                std::to_string(family.size())};
  }

  const YMap eta_on_y = restrict_to_y(build_eta(ctx));
  auto generated = ymap_monoid_closure(permutation_restrictions(b.elements));
  if (!ymap_set_contains(generated, eta_on_y)) {
    return {false, "iii", "rotation restriction not generated"};
  }
  for (std::size_t skip : tilde) {
    auto gens = permutation_restrictions(b.elements, skip);
    if (ymap_set_contains(ymap_monoid_closure(gens), eta_on_y)) {
      return {false, "iii", "element " + b.labels[skip] + " is removable"};
    }
  }
  return {true, "", ""};
}

MinRelgenReport check_min_relgen_t_mod_op(const ChainContext& ctx, const GeneratingSet& b) {
  require_ctx(ctx, b);
  const YMap eta_on_y = restrict_to_y(build_eta(ctx));

  auto with_eta = permutation_restrictions(b.elements);
  with_eta.push_back(eta_on_y);
  if (!contains_all_permutations(ctx, ymap_monoid_closure(with_eta))) {
    return {false, "iii", "restrictions with the rotation do not generate all Y-permutations"};
  }

  auto family = enumerate_r(ctx.n(), ctx.m());
  std::vector<Partition> kernels;
  kernels.reserve(b.elements.size());
  for (const auto& t : b.elements) {
    kernels.push_back(kernel(t));
  }
  // Elements usable for the covering part, grouped per required kernel.
  std::vector<std::vector<std::size_t>> groups(family.size());
  for (std::size_t k = 0; k < family.size(); ++k) {
    for (std::size_t i = 0; i < kernels.size(); ++i) {
      if (kernels[i] == family[k]) {
        groups[k].push_back(i);
      }
    }
    if (groups[k].empty()) {
      return {false, "i", "kernel " + format_partition(family[k]) + " not covered"};
    }
  }
  if (b.elements.size() < family.size()) {
    return {false, "ii",
            "only " + std::to_string(b.elements.size()) + " elements for " +
                std::to_string(family.size()) + " required kernels"};
  }

  auto removal_keeps_generation = [&](std::size_t skip) {
    auto gens = permutation_restrictions(b.elements, skip);
    gens.push_back(eta_on_y);
    return contains_all_permutations(ctx, ymap_monoid_closure(gens));
  };

  // Candidate complements B \ B~ pick exactly one element per required
  // kernel (the groups are disjoint, so picks never collide).
  std::vector<std::size_t> pick(family.size(), 0);
  std::string last_witness;
  while (true) {
    std::vector<char> in_complement(b.elements.size(), 0);
    for (std::size_t k = 0; k < family.size(); ++k) {
      in_complement[groups[k][pick[k]]] = 1;
    }
    // Every gamma whose kernel appears in B~ must be essential.
    bool ok = true;
    for (std::size_t i = 0; i < b.elements.size() && ok; ++i) {
      if (in_complement[i]) {
        continue;
      }
      for (std::size_t g = 0; g < b.elements.size() && ok; ++g) {
        if (kernels[g] == kernels[i] && removal_keeps_generation(g)) {
          ok = false;
          last_witness = "element " + b.labels[g] + " is removable";
        }
      }
    }
    if (ok) {
      return {true, "", ""};
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == groups[k].size()) {
      pick[k] = 0;
      ++k;
    }
    if (k == pick.size()) {
      break;
    }
  }
  return {false, "iii", last_witness};
}

}  // namespace chainrr
