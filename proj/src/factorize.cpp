#include "chainrr/factorize.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "chainrr/closure.hpp"
#include "chainrr/literals.hpp"
#include "chainrr/partition.hpp"

namespace chainrr {

namespace {

Transformation from_block_values(const ChainContext& ctx, const Partition& p,
                                 const std::vector<int>& value_of_label) {
  std::vector<int> images(static_cast<std::size_t>(ctx.n()));
  for (int x = 1; x <= ctx.n(); ++x) {
    images[static_cast<std::size_t>(x) - 1] =
        value_of_label[static_cast<std::size_t>(p.label_of(x))];
  }
  return Transformation(ctx, std::move(images));
}

int eta_power_on_y(const YMap& eta_on_y, int value, int power) {
  for (int i = 0; i < power; ++i) {
    value = eta_on_y.apply(value);
  }
  return value;
}

WordFactor base_o_factor(Transformation t) {
  std::string label = "o" + format_image_list(t.images());
  return {std::move(t), FactorTag::BaseO, 1, std::move(label)};
}

WordFactor base_op_factor(Transformation t) {
  std::string label = "op" + format_image_list(t.images());
  return {std::move(t), FactorTag::BaseOP, 1, std::move(label)};
}

WordFactor generator_a_factor(Transformation t) {
  std::string label = "alpha[" + format_partition(kernel(t)) + "]";
  return {std::move(t), FactorTag::GeneratorA, 1, std::move(label)};
}

void append_eta(std::vector<WordFactor>& factors, const Transformation& eta, int power) {
  if (power <= 0) {
    return;
  }
  if (!factors.empty() && factors.back().tag == FactorTag::EtaPower) {
    factors.back().power += power;
    return;
  }
  factors.push_back({eta, FactorTag::EtaPower, power, "eta"});
}

// Non-convex block that is not a prefix-gap-suffix union holding both chain
// ends; every partition outside the interval and endpoints-joined families
// has one.
bool is_distinguished_block(const std::vector<int>& block, int n) {
  if (is_convex(block)) {
    return false;
  }
  if (block.front() != 1 || block.back() != n) {
    return true;
  }
  std::size_t gaps = 0;
  for (std::size_t i = 1; i < block.size(); ++i) {
    if (block[i] != block[i - 1] + 1) {
      ++gaps;
    }
  }
  return gaps != 1;
}

// Refine ker into an m-block partition outside both structured families,
// splitting the blocks other than the distinguished one first (leftmost
// cut); falls back to a scan of the full family when the cut strategy does
// not land in it.
Partition refine_to_r(const Partition& ker, int m) {
  const int n = ker.n();
  auto blocks = ker.blocks();
  std::size_t dist = blocks.size();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (is_distinguished_block(blocks[i], n)) {
      dist = i;
      break;
    }
  }
  if (dist < blocks.size()) {
    auto pieces = blocks;
    while (static_cast<int>(pieces.size()) < m) {
      std::size_t cut = pieces.size();
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i != dist && pieces[i].size() >= 2 &&
            (cut == pieces.size() || pieces[i].front() < pieces[cut].front())) {
          cut = i;
        }
      }
      if (cut == pieces.size()) {
        break;
      }
      std::vector<int> head = {pieces[cut].front()};
      pieces[cut].erase(pieces[cut].begin());
      pieces.push_back(std::move(head));
    }
    if (static_cast<int>(pieces.size()) == m) {
      Partition candidate = Partition::from_blocks(n, pieces);
      if (classify(candidate).tag == FamilyTag::R && candidate.refines(ker)) {
        return candidate;
      }
    }
  }
  for (const auto& p : enumerate_r(n, m)) {
    if (p.refines(ker)) {
      return p;
    }
  }
  fail(ErrorKind::InfeasibleRefinement,
       "no m-block refinement of " + format_partition(ker) + " outside the structured families");
}

struct LiftedGens {
  std::vector<YMap> maps;
  std::vector<Transformation> sources;
  std::vector<std::string> labels;
  std::vector<bool> is_eta;
};

LiftedGens permutation_generators(const GeneratingSet& b, const Transformation& eta) {
  LiftedGens out;
  auto add = [&](const YMap& restriction, const Transformation& source, const std::string& label,
                 bool eta_flag) {
    if (!restriction.is_permutation()) {
      return;
    }
    for (const auto& existing : out.maps) {
      if (existing == restriction) {
        return;
      }
    }
    out.maps.push_back(restriction);
    out.sources.push_back(source);
    out.labels.push_back(label);
    out.is_eta.push_back(eta_flag);
  };
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    add(restrict_to_y(b.elements[i]), b.elements[i], b.labels[i], false);
  }
  add(restrict_to_y(eta), eta, "eta", true);
  return out;
}

}  // namespace

const char* to_string(FactorTag tag) {
  switch (tag) {
    case FactorTag::BaseO: return "BaseO";
    case FactorTag::BaseOP: return "BaseOP";
    case FactorTag::GeneratorA: return "GeneratorA";
    case FactorTag::GeneratorB: return "GeneratorB";
    case FactorTag::EtaPower: return "EtaPower";
  }
  return "?";
}

Transformation Word::product() const {
  if (factors.empty()) {
    fail(ErrorKind::InvalidArity, "the empty word has no product in the restricted semigroup");
  }
  Transformation acc = factors.front().map;
  for (int i = 1; i < factors.front().power; ++i) {
    acc = compose(acc, factors.front().map);
  }
  for (std::size_t f = 1; f < factors.size(); ++f) {
    for (int i = 0; i < factors[f].power; ++i) {
      acc = compose(acc, factors[f].map);
    }
  }
  return acc;
}

std::string Word::display() const {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) {
      out += " * ";
    }
    if (f.tag == FactorTag::EtaPower && f.power > 1) {
      out += "eta^" + std::to_string(f.power);
    } else {
      out += f.label;
    }
  }
  return out;
}

Word factor_op_over_o(const Transformation& beta) {
  const ChainContext& ctx = beta.ctx();
  const int m = ctx.m();
  if (!(1 < m && m < ctx.n())) {
    fail(ErrorKind::HypothesisViolation, "factorization needs 1 < m < n");
  }
  if (!is_orientation_preserving(beta)) {
    fail(ErrorKind::HypothesisViolation,
         format_transformation(beta) + " is not orientation-preserving");
  }
  if (is_order_preserving(beta)) {
    return {{base_o_factor(beta)}};
  }

  const Transformation eta = build_eta(ctx);
  const YMap eta_on_y = restrict_to_y(eta);
  const int rank = beta.rank();

  if (rank == m) {
    Transformation theta = kernel_witness(beta);
    // The block theta sends to a_1 is sent by beta to a_{r+1}.
    int x0 = 0;
    for (int x = 1; x <= ctx.n(); ++x) {
      if (theta(x) == ctx.y_at(1)) {
        x0 = x;
        break;
      }
    }
    int r = ctx.y_index(beta(x0)) - 1;
    Word word;
    if (classify(kernel(theta)).tag == FamilyTag::P) {
      word.factors.push_back(generator_a_factor(theta));
    } else {
      word.factors.push_back(base_o_factor(theta));
    }
    append_eta(word.factors, eta, r == 0 ? m : r);
    return word;
  }

  Partition ker = kernel(beta);
  auto cls = classify(ker);
  if (cls.tag == FamilyTag::R) {
    fail(ErrorKind::HypothesisViolation,
         "orientation-preserving maps cannot have a kernel outside the structured families");
  }
  if (cls.tag == FamilyTag::P) {
    Partition refined = refine_to_p(ker, m);
    Transformation theta = build_alpha_p(ctx, refined);
    // Transversal: block minima of ker theta.
    std::vector<int> transversal;
    for (const auto& block : refined.blocks()) {
      transversal.push_back(block.front());
    }
    // theta followed by k rotations is a bijection T -> Y; find the rotation
    // count aligning it with beta at the bottom of the image.
    int a = *std::min_element(beta.images().begin(), beta.images().end());
    auto beta_at_rotated_preimage = [&](int k, int y_value) {
      for (int t : transversal) {
        if (eta_power_on_y(eta_on_y, theta(t), k) == y_value) {
          return beta(t);
        }
      }
      fail(ErrorKind::InfeasibleRefinement, "rotated transversal misses a Y value");
    };
    int chosen_k = 0;
    for (int k = 1; k <= m; ++k) {
      if (beta_at_rotated_preimage(k, ctx.y_at(1)) == a &&
          beta_at_rotated_preimage(k + 1, ctx.y_at(1)) != a) {
        chosen_k = k;
        break;
      }
    }
    if (chosen_k == 0) {
      fail(ErrorKind::InfeasibleRefinement, "no rotation aligns the refined kernel with " +
                                                format_transformation(beta));
    }
    // f agrees on Y with the partial inverse composed with beta and extends
    // order-preservingly between consecutive Y values.
    std::vector<int> f_on_y(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
      f_on_y[static_cast<std::size_t>(i) - 1] = beta_at_rotated_preimage(chosen_k, ctx.y_at(i));
    }
    std::vector<int> f_images(static_cast<std::size_t>(ctx.n()));
    for (int x = 1; x <= ctx.n(); ++x) {
      int value;
      if (x < ctx.y_at(1)) {
        value = f_on_y.front();
      } else if (x >= ctx.y_at(m)) {
        value = f_on_y.back();
      } else {
        value = f_on_y.front();
        for (int i = 1; i < m; ++i) {
          if (ctx.y_at(i) <= x && x < ctx.y_at(i + 1)) {
            value = f_on_y[static_cast<std::size_t>(i) - 1];
            break;
          }
        }
      }
      f_images[static_cast<std::size_t>(x) - 1] = value;
    }
    Word word;
    word.factors.push_back(generator_a_factor(theta));
    append_eta(word.factors, eta, chosen_k);
    word.factors.push_back(base_o_factor(Transformation(ctx, std::move(f_images))));
    return word;
  }

  // Interval kernel of deficient rank: peel off an order-preserving factor
  // and recurse on a map whose kernel joins the endpoints.
  auto blocks = ker.blocks();
  const int i = cls.l;
  std::vector<int> block_values(static_cast<std::size_t>(i));
  for (int j = 0; j < i; ++j) {
    block_values[static_cast<std::size_t>(j)] = beta(blocks[static_cast<std::size_t>(j)].front());
  }
  std::vector<int> phi_values(static_cast<std::size_t>(i));
  for (int j = 0; j < i; ++j) {
    phi_values[static_cast<std::size_t>(j)] = ctx.y_at(j + 2);
  }
  Transformation phi = from_block_values(ctx, ker, phi_values);
  std::vector<int> nu_images(static_cast<std::size_t>(ctx.n()));
  for (int x = 1; x <= ctx.n(); ++x) {
    int value = block_values[static_cast<std::size_t>(i) - 1];
    for (int j = 2; j <= i; ++j) {
      if (ctx.y_at(j) <= x && x < ctx.y_at(j + 1)) {
        value = block_values[static_cast<std::size_t>(j) - 2];
        break;
      }
    }
    nu_images[static_cast<std::size_t>(x) - 1] = value;
  }
  Transformation nu(ctx, std::move(nu_images));
  Word word;
  word.factors.push_back(base_o_factor(std::move(phi)));
  Word tail = factor_op_over_o(nu);
  for (auto& f : tail.factors) {
    word.factors.push_back(std::move(f));
  }
  return word;
}

namespace {

Word factor_r_kernel(const Transformation& gamma, const GeneratingSet& b,
                     const Transformation& eta) {
  const ChainContext& ctx = gamma.ctx();
  const int k = gamma.rank();
  Partition ker = kernel(gamma);
  Partition target = (k == ctx.m()) ? ker : refine_to_r(ker, ctx.m());

  std::size_t lambda_idx = b.elements.size();
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    if (kernel(b.elements[i]) == target) {
      lambda_idx = i;
      break;
    }
  }
  if (lambda_idx == b.elements.size()) {
    fail(ErrorKind::HypothesisViolation,
         "no supplied element has kernel " + format_partition(target));
  }
  const Transformation& lambda = b.elements[lambda_idx];

  std::vector<int> y_values = gamma.images();
  std::sort(y_values.begin(), y_values.end());
  y_values.erase(std::unique(y_values.begin(), y_values.end()), y_values.end());

  // Lambda's image value on each of its blocks, bucketed by the gamma value
  // of the block it refines into.
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(k));
  for (const auto& block : target.blocks()) {
    int lambda_value = lambda(block.front());
    int gamma_value = gamma(block.front());
    auto it = std::lower_bound(y_values.begin(), y_values.end(), gamma_value);
    buckets[static_cast<std::size_t>(it - y_values.begin())].push_back(lambda_value);
  }
  for (auto& bucket : buckets) {
    std::sort(bucket.begin(), bucket.end());
  }

  // Interval partition of X whose i-th part holds exactly |bucket_i| values
  // of Y: boundaries sit right after the last Y value assigned to each part.
  std::vector<int> part_end(static_cast<std::size_t>(k));
  int consumed = 0;
  for (int i = 0; i < k; ++i) {
    consumed += static_cast<int>(buckets[static_cast<std::size_t>(i)].size());
    part_end[static_cast<std::size_t>(i)] = (i == k - 1) ? ctx.n() : ctx.y_at(consumed);
  }

  // The Y-permutation matching each bucket onto its part's Y values in order.
  std::vector<int> sigma_images(static_cast<std::size_t>(ctx.m()));
  consumed = 0;
  for (int i = 0; i < k; ++i) {
    for (int value : buckets[static_cast<std::size_t>(i)]) {
      sigma_images[static_cast<std::size_t>(ctx.y_index(value)) - 1] = ctx.y_at(++consumed);
    }
  }
  YMap sigma(ctx, std::move(sigma_images));

  LiftedGens gens = permutation_generators(b, eta);
  auto indices = permutation_word(sigma, gens.maps);

  std::vector<int> nu_images(static_cast<std::size_t>(ctx.n()));
  {
    int part = 0;
    for (int x = 1; x <= ctx.n(); ++x) {
      while (x > part_end[static_cast<std::size_t>(part)]) {
        ++part;
      }
      nu_images[static_cast<std::size_t>(x) - 1] = y_values[static_cast<std::size_t>(part)];
    }
  }

  Word word;
  word.factors.push_back(
      {lambda, FactorTag::GeneratorB, 1, b.labels[lambda_idx]});
  for (std::size_t idx : indices) {
    if (gens.is_eta[idx]) {
      append_eta(word.factors, eta, 1);
    } else {
      word.factors.push_back({gens.sources[idx], FactorTag::GeneratorB, 1, gens.labels[idx]});
    }
  }
  word.factors.push_back(base_op_factor(Transformation(ctx, std::move(nu_images))));
  return word;
}

}  // namespace

Word factor_t_over_op(const Transformation& gamma, const GeneratingSet& b) {
  const ChainContext& ctx = gamma.ctx();
  if (b.ctx != ctx) {
    fail(ErrorKind::ContextMismatch, "generating set over a different context");
  }
  if (!covers_required_kernels(RelrankTask::TOverOp, ctx, b.elements)) {
    fail(ErrorKind::HypothesisViolation,
         "the supplied set does not cover every required kernel");
  }
  if (!generates_symmetric_group_on_y(ctx, b.elements)) {
    fail(ErrorKind::HypothesisViolation,
         "the supplied restrictions with the rotation do not generate all Y-permutations");
  }
  if (is_orientation_preserving(gamma)) {
    return {{base_op_factor(gamma)}};
  }

  const Transformation eta = build_eta(ctx);
  Partition ker = kernel(gamma);
  auto cls = classify(ker);
  if (cls.tag == FamilyTag::R) {
    return factor_r_kernel(gamma, b, eta);
  }

  // Structured kernel: split off an orientation-preserving map with the same
  // kernel, leaving a factor whose kernel escapes both families.
  const int k = cls.l;
  std::vector<int> rho1_values(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    rho1_values[static_cast<std::size_t>(j)] = ctx.y_at(j + 1);
  }
  Transformation rho1 = from_block_values(ctx, ker, rho1_values);

  // Blocks of the second factor: one per image point of rho1, each holding
  // its image point.  Nearest-image-point-below assignment first, then a
  // systematic scan for an assignment outside the structured families.
  std::vector<int> image_pts(rho1_values);
  std::sort(image_pts.begin(), image_pts.end());
  std::vector<int> free_pts;
  for (int x = 1; x <= ctx.n(); ++x) {
    if (!std::binary_search(image_pts.begin(), image_pts.end(), x)) {
      free_pts.push_back(x);
    }
  }
  auto assignment_partition = [&](const std::vector<int>& digits) {
    std::vector<int> labels(static_cast<std::size_t>(ctx.n()), -1);
    for (int j = 0; j < k; ++j) {
      labels[static_cast<std::size_t>(image_pts[static_cast<std::size_t>(j)]) - 1] = j;
    }
    for (std::size_t i = 0; i < free_pts.size(); ++i) {
      labels[static_cast<std::size_t>(free_pts[i]) - 1] = digits[i];
    }
    return Partition(ctx.n(), std::move(labels));
  };
  std::vector<int> digits(free_pts.size(), 0);
  for (std::size_t i = 0; i < free_pts.size(); ++i) {
    int below = 0;
    for (int j = 0; j < k; ++j) {
      if (image_pts[static_cast<std::size_t>(j)] < free_pts[i]) {
        below = j;
      }
    }
    digits[i] = below;
  }
  Partition d_partition = assignment_partition(digits);
  if (classify(d_partition).tag != FamilyTag::R) {
    std::fill(digits.begin(), digits.end(), 0);
    bool found = false;
    while (!found) {
      Partition candidate = assignment_partition(digits);
      if (candidate.block_count() == k && classify(candidate).tag == FamilyTag::R) {
        d_partition = std::move(candidate);
        found = true;
        break;
      }
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == k) {
        digits[i] = 0;
        ++i;
      }
      if (i == digits.size()) {
        break;
      }
    }
    if (!found) {
      fail(ErrorKind::InfeasibleRefinement,
           "no block assignment around the image points escapes the structured families");
    }
  }

  // Second factor: the block anchored at rho1's image point a_{j+1} takes the
  // gamma value of rho1's j-th kernel block.
  std::vector<int> rho2_values(static_cast<std::size_t>(k));
  {
    auto ker_blocks = ker.blocks();
    for (int j = 0; j < k; ++j) {
      int pt = rho1_values[static_cast<std::size_t>(j)];
      int d_index = d_partition.label_of(pt);
      rho2_values[static_cast<std::size_t>(d_index)] =
          gamma(ker_blocks[static_cast<std::size_t>(j)].front());
    }
  }
  Transformation rho2 = from_block_values(ctx, d_partition, rho2_values);

  Word word;
  word.factors.push_back(base_op_factor(std::move(rho1)));
  Word tail = factor_r_kernel(rho2, b, eta);
  for (auto& f : tail.factors) {
    word.factors.push_back(std::move(f));
  }
  return word;
}

std::vector<std::size_t> permutation_word(const YMap& sigma, const std::vector<YMap>& gens) {
  const ChainContext& ctx = sigma.ctx();
  if (!sigma.is_permutation()) {
    fail(ErrorKind::HypothesisViolation, "word search needs a permutation target");
  }
  for (const auto& g : gens) {
    if (g.ctx() != ctx) {
      fail(ErrorKind::ContextMismatch, "generators over a different context");
    }
    if (!g.is_permutation()) {
      fail(ErrorKind::HypothesisViolation, "word search needs permutation generators");
    }
  }
  YMap identity = y_identity(ctx);
  if (sigma == identity) {
    return {};
  }
  struct Arrival {
    std::uint64_t parent;
    std::size_t gen;
  };
  std::unordered_map<std::uint64_t, Arrival> arrivals;
  std::unordered_map<std::uint64_t, YMap> states;
  std::deque<std::uint64_t> queue;
  states.emplace(identity.code(), identity);
  queue.push_back(identity.code());
  const std::uint64_t target = sigma.code();
  while (!queue.empty()) {
    std::uint64_t code = queue.front();
    queue.pop_front();
    const YMap current = states.at(code);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      YMap next = compose(current, gens[g]);
      std::uint64_t next_code = next.code();
      if (states.find(next_code) != states.end()) {
        continue;
      }
      arrivals[next_code] = {code, g};
      states.emplace(next_code, std::move(next));
      if (next_code == target) {
        std::vector<std::size_t> word;
        std::uint64_t at = next_code;
        while (at != identity.code()) {
          const Arrival& a = arrivals.at(at);
          word.push_back(a.gen);
          at = a.parent;
        }
        std::reverse(word.begin(), word.end());
        return word;
      }
      queue.push_back(next_code);
    }
  }
  fail(ErrorKind::NotInSubgroup, "the target permutation is not generated");
}

std::vector<Transformation> lift_y_word_to_transformations(
    const std::vector<YMap>& word, const std::vector<Transformation>& sources) {
  std::vector<Transformation> out;
  out.reserve(word.size());
  for (const auto& step : word) {
    bool matched = false;
    for (const auto& source : sources) {
      if (restrict_to_y(source) == step) {
        out.push_back(source);
        matched = true;
        break;
      }
    }
    if (!matched) {
      fail(ErrorKind::UnknownRestriction, "no recorded source restricts to the given Y-map");
    }
  }
  return out;
}

}  // namespace chainrr
