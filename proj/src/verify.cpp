#include "chainrr/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "chainrr/factorize.hpp"
#include "chainrr/generators.hpp"
#include "chainrr/literals.hpp"
#include "chainrr/partition.hpp"

namespace chainrr {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::uint64_t universe_size(const ChainContext& ctx) {
  std::uint64_t size = 1;
  for (int i = 0; i < ctx.n(); ++i) {
    std::uint64_t next;
    if (__builtin_mul_overflow(size, static_cast<std::uint64_t>(ctx.m()), &next)) {
      return UINT64_MAX;
    }
    size = next;
  }
  return size;
}

class RowRunner {
 public:
  RowRunner(VerificationReport& report, const ChainContext& ctx, std::string check,
            std::string method)
      : report_(report), ctx_(ctx), check_(std::move(check)), method_(std::move(method)) {}

  // body fills formula/brute/note and returns pass/fail; errors become rows.
  void run(const std::function<bool(VerifyRow&)>& body) {
    VerifyRow row;
    row.check = check_;
    row.method = method_;
    row.n = ctx_.n();
    row.m = ctx_.m();
    row.y = ctx_.y();
    row.universe_size = universe_size(ctx_);
    Timer timer;
    try {
      row.status = body(row) ? "PASS" : "FAIL";
    } catch (const Error& e) {
      row.status = e.kind() == ErrorKind::BudgetExceeded ? "SKIPPED" : "FAIL";
      row.note = e.what();
    }
    row.millis = timer.ms();
    report_.rows.push_back(std::move(row));
  }

  void skipped(const std::string& note) {
    VerifyRow row;
    row.check = check_;
    row.method = method_;
    row.n = ctx_.n();
    row.m = ctx_.m();
    row.y = ctx_.y();
    row.universe_size = universe_size(ctx_);
    row.status = "SKIPPED";
    row.note = note;
    report_.rows.push_back(std::move(row));
  }

 private:
  VerificationReport& report_;
  const ChainContext& ctx_;
  std::string check_;
  std::string method_;
};

void for_each_subset(const std::vector<Transformation>& pool, std::size_t max_size,
                     const std::function<void(const std::vector<Transformation>&)>& fn) {
  std::vector<Transformation> current;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    fn(current);
    if (current.size() == max_size) {
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

std::uint64_t subset_count(std::size_t pool, std::size_t max_size) {
  std::uint64_t total = 0;
  std::uint64_t c = 1;
  for (std::size_t s = 0; s <= max_size; ++s) {
    total += c;
    if (s >= pool) {
      break;
    }
    c = c * (pool - s) / (s + 1);
  }
  return total;
}

bool direct_minimal(const SemigroupSet& target, const SemigroupSet& base,
                    const std::vector<Transformation>& b, const Budget& budget) {
  if (!is_relative_generating(target, base, b, budget)) {
    return false;
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::vector<Transformation> reduced;
    reduced.reserve(b.size() - 1);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j != i) {
        reduced.push_back(b[j]);
      }
    }
    if (is_relative_generating(target, base, reduced, budget)) {
      return false;
    }
  }
  return true;
}

GeneratingSet as_generating_set(const ChainContext& ctx, const std::vector<Transformation>& b) {
  GeneratingSet out(ctx);
  for (std::size_t i = 0; i < b.size(); ++i) {
    out.add(b[i], "b" + std::to_string(i));
  }
  return out;
}

std::vector<Transformation> difference(const SemigroupSet& whole, const SemigroupSet& part) {
  std::vector<Transformation> out;
  for (std::uint64_t code : whole.codes()) {
    if (!part.contains(code)) {
      out.push_back(Transformation::from_code(whole.ctx(), code));
    }
  }
  return out;
}

constexpr std::uint64_t kMaxSweepSubsets = 200000;
constexpr int kSweepNMax = 4;

// ---------------------------------------------------------------- thm5 ----

void verify_thm5(VerificationReport& report, const ChainContext& ctx, const Budget& budget) {
  if (ctx.m() == ctx.n()) {
    RowRunner(report, ctx, "thm5:relrank", "formula-vs-search")
        .skipped("out of theorem scope: m = n");
    return;
  }
  RowRunner(report, ctx, "thm5:relrank", "formula-vs-search").run([&](VerifyRow& row) {
    auto formula = relrank_op_mod_o(ctx);
    row.formula_value = static_cast<std::int64_t>(formula);
    auto op = enumerate_op(ctx, budget);
    auto o = enumerate_o(ctx, budget);
    auto witness = brute_min_relrank(op, o, difference(op, o),
                                     static_cast<std::size_t>(formula) + 1,
                                     RelrankTask::OpOverO, budget);
    row.brute_value = static_cast<std::int64_t>(witness.rank);
    return witness.rank == formula;
  });
  if (1 < ctx.m() && ctx.m() < ctx.n()) {
    RowRunner(report, ctx, "remark4:family-count", "enumeration-count").run([&](VerifyRow& row) {
      row.formula_value = static_cast<std::int64_t>(binomial(ctx.n() - 1, ctx.m()));
      row.brute_value = static_cast<std::int64_t>(enumerate_p(ctx.n(), ctx.m()).size());
      return row.formula_value == row.brute_value;
    });
  }
  if (ctx.n() <= kSweepNMax && 1 < ctx.m() && ctx.m() < ctx.n()) {
    RowRunner(report, ctx, "lemma3:kernel-necessity", "exhaustive-sweep").run([&](VerifyRow& row) {
      auto op = enumerate_op(ctx, budget);
      auto o = enumerate_o(ctx, budget);
      auto pool = difference(op, o);
      auto formula = relrank_op_mod_o(ctx);
      std::size_t max_size = static_cast<std::size_t>(formula) + 1;
      if (subset_count(pool.size(), max_size) > kMaxSweepSubsets) {
        fail(ErrorKind::BudgetExceeded, "sweep too large");
      }
      std::int64_t generating = 0;
      bool all_covered = true;
      std::size_t min_size = SIZE_MAX;
      for_each_subset(pool, max_size, [&](const std::vector<Transformation>& b) {
        if (!is_relative_generating(op, o, b, budget)) {
          return;
        }
        ++generating;
        min_size = std::min(min_size, b.size());
        if (!covers_required_kernels(RelrankTask::OpOverO, ctx, b)) {
          all_covered = false;
        }
      });
      row.brute_value = generating;
      row.formula_value = static_cast<std::int64_t>(formula);
      row.note = "every generating subset covers the required kernels";
      return all_covered && generating > 0 && min_size == formula;
    });
  }
}

// ---------------------------------------------------------------- prop2 ---

void verify_prop2(VerificationReport& report, const ChainContext& ctx, const Budget& budget) {
  if (!(1 < ctx.m() && ctx.m() < ctx.n())) {
    return;
  }
  RowRunner(report, ctx, "prop2:closure-equality", "closure-equality").run([&](VerifyRow& row) {
    auto op = enumerate_op(ctx, budget);
    auto gens = enumerate_o(ctx, budget).elements();
    for (const auto& t : canonical_a(ctx).elements) {
      gens.push_back(t);
    }
    row.formula_value = static_cast<std::int64_t>(op.size());
    bool equal = closure_equals(gens, op, budget);
    row.brute_value = equal ? row.formula_value : -1;
    return equal;
  });
  RowRunner(report, ctx, "prop2:factor-roundtrip", "factorization").run([&](VerifyRow& row) {
    auto op = enumerate_op(ctx, budget);
    auto a = canonical_a(ctx);
    const Transformation eta = build_eta(ctx);
    std::int64_t good = 0;
    for (const auto& beta : op.elements()) {
      Word word = factor_op_over_o(beta);
      bool ok = word.product() == beta;
      for (const auto& f : word.factors) {
        switch (f.tag) {
          case FactorTag::BaseO: ok = ok && is_order_preserving(f.map); break;
          case FactorTag::GeneratorA: ok = ok && a.contains(f.map); break;
          case FactorTag::EtaPower:
            ok = ok && f.map == eta && f.power >= 1 && f.power <= ctx.m();
            break;
          default: ok = false;
        }
      }
      good += ok ? 1 : 0;
    }
    row.formula_value = static_cast<std::int64_t>(op.size());
    row.brute_value = good;
    return good == row.formula_value;
  });
}

// ---------------------------------------------------------------- thm11 ---

void verify_thm11(VerificationReport& report, const ChainContext& ctx, const Budget& budget) {
  if (ctx.m() == ctx.n()) {
    RowRunner(report, ctx, "thm11:relrank", "formula-vs-search")
        .skipped("out of theorem scope: m = n");
    return;
  }
  const auto formula = relrank_t_mod_op(ctx);
  if (ctx.n() <= kSweepNMax) {
    RowRunner(report, ctx, "thm11:relrank", "formula-vs-search").run([&](VerifyRow& row) {
      row.formula_value = static_cast<std::int64_t>(formula);
      auto t = enumerate_t(ctx, budget);
      auto op = enumerate_op(ctx, budget);
      auto witness = brute_min_relrank(t, op, difference(t, op),
                                       static_cast<std::size_t>(formula) + 1,
                                       RelrankTask::TOverOp, budget);
      row.brute_value = static_cast<std::int64_t>(witness.rank);
      return witness.rank == formula;
    });
  }
  RowRunner(report, ctx, "thm11:generation", "closure-equality").run([&](VerifyRow& row) {
    auto t = enumerate_t(ctx, budget);
    auto b = canonical_b_t_mod_op(ctx);
    row.formula_value = static_cast<std::int64_t>(formula);
    row.brute_value = static_cast<std::int64_t>(b.set.size());
    auto gens = enumerate_op(ctx, budget).elements();
    for (const auto& e : b.set.elements) {
      gens.push_back(e);
    }
    return b.set.size() == formula && closure_equals(gens, t, budget);
  });
  if (ctx.m() >= 2) {
    RowRunner(report, ctx, "lemma10:family-count", "enumeration-count").run([&](VerifyRow& row) {
      row.formula_value =
          static_cast<std::int64_t>(stirling2(ctx.n(), ctx.m()) - binomial(ctx.n(), ctx.m()));
      row.brute_value = static_cast<std::int64_t>(enumerate_r(ctx.n(), ctx.m()).size());
      return row.formula_value == row.brute_value;
    });
  }
  if (ctx.m() == 2 && ctx.n() >= 4) {
    RowRunner(report, ctx, "thm11:erratum-R2", "enumeration-count").run([&](VerifyRow& row) {
      auto count = enumerate_r(ctx.n(), 2).size();
      row.formula_value =
          static_cast<std::int64_t>(stirling2(ctx.n(), 2) - binomial(ctx.n(), 2));
      row.brute_value = static_cast<std::int64_t>(count);
      row.note = "erratum: published argument treats this family as empty for m=2; "
                 "enumeration gives a nonempty family";
      return count >= 1 && row.formula_value == row.brute_value;
    });
  }
  if (ctx.m() >= 3) {
    RowRunner(report, ctx, "thm11:transposition-witness", "construction").run(
        [&](VerifyRow& row) {
          auto b = canonical_b_t_mod_op(ctx);
          if (!b.transposition_index.has_value()) {
            row.note = "no R_m member admits Y as a transversal";
            return false;
          }
          const auto& designated = b.set.elements[*b.transposition_index];
          YMap restriction = restrict_to_y(designated);
          std::vector<int> expected = ctx.y();
          std::swap(expected[0], expected[1]);
          row.note = "designated " + b.set.labels[*b.transposition_index];
          return restriction == YMap(ctx, expected);
        });
  }
  if (ctx.n() <= kSweepNMax) {
    RowRunner(report, ctx, "lemma9-lemma8:necessity", "exhaustive-sweep").run(
        [&](VerifyRow& row) {
          auto t = enumerate_t(ctx, budget);
          auto op = enumerate_op(ctx, budget);
          auto pool = difference(t, op);
          std::size_t max_size = static_cast<std::size_t>(formula) + 1;
          if (subset_count(pool.size(), max_size) > kMaxSweepSubsets) {
            fail(ErrorKind::BudgetExceeded, "sweep too large");
          }
          std::int64_t generating = 0;
          bool all_ok = true;
          std::size_t min_size = SIZE_MAX;
          for_each_subset(pool, max_size, [&](const std::vector<Transformation>& b) {
            if (!is_relative_generating(t, op, b, budget)) {
              return;
            }
            ++generating;
            min_size = std::min(min_size, b.size());
            if (!covers_required_kernels(RelrankTask::TOverOp, ctx, b) ||
                !generates_symmetric_group_on_y(ctx, b)) {
              all_ok = false;
            }
          });
          row.formula_value = static_cast<std::int64_t>(formula);
          row.brute_value = generating;
          row.note = "kernel coverage and Y-permutation generation hold for every "
                     "generating subset";
          std::size_t expected_min = static_cast<std::size_t>(formula);
          return all_ok && generating > 0 && min_size == expected_min;
        });
  }
}

// ---------------------------------------------------------------- thm6 ----

void verify_thm6(VerificationReport& report, const ChainContext& ctx, const Budget& budget) {
  if (!(1 < ctx.m() && ctx.m() < ctx.n()) || ctx.n() > kSweepNMax) {
    return;
  }
  RowRunner(report, ctx, "thm6:characterization", "checker-vs-closure").run([&](VerifyRow& row) {
    auto op = enumerate_op(ctx, budget);
    auto o = enumerate_o(ctx, budget);
    std::vector<Transformation> pool;
    for (const auto& t : op.elements()) {
      if (t.rank() == ctx.m()) {
        pool.push_back(t);
      }
    }
    std::size_t max_size = static_cast<std::size_t>(binomial(ctx.n() - 1, ctx.m())) + 2;
    if (subset_count(pool.size(), max_size) > kMaxSweepSubsets) {
      fail(ErrorKind::BudgetExceeded, "family too large");
    }
    std::int64_t candidates = 0;
    std::int64_t agreements = 0;
    for_each_subset(pool, max_size, [&](const std::vector<Transformation>& b) {
      ++candidates;
      bool checker = check_min_relgen_op_mod_o(ctx, as_generating_set(ctx, b)).verdict;
      bool direct = direct_minimal(op, o, b, budget);
      agreements += (checker == direct) ? 1 : 0;
    });
    row.formula_value = candidates;
    row.brute_value = agreements;
    return candidates == agreements;
  });
  RowRunner(report, ctx, "thm6:minimal-size-remark", "checker-vs-closure").run(
      [&](VerifyRow& row) {
        auto op = enumerate_op(ctx, budget);
        auto o = enumerate_o(ctx, budget);
        std::vector<Transformation> pool;
        for (const auto& t : op.elements()) {
          if (t.rank() == ctx.m()) {
            pool.push_back(t);
          }
        }
        const auto relrank = relrank_op_mod_o(ctx);
        const std::size_t expected_tilde = (ctx.one_in_y() && ctx.n_in_y()) ? 1 : 0;
        std::size_t max_size = static_cast<std::size_t>(binomial(ctx.n() - 1, ctx.m())) + 2;
        if (subset_count(pool.size(), max_size) > kMaxSweepSubsets) {
          fail(ErrorKind::BudgetExceeded, "family too large");
        }
        bool consistent = true;
        std::int64_t minimal_sets = 0;
        for_each_subset(pool, max_size, [&](const std::vector<Transformation>& b) {
          if (!check_min_relgen_op_mod_o(ctx, as_generating_set(ctx, b)).verdict) {
            return;
          }
          ++minimal_sets;
          std::size_t tilde = 0;
          for (const auto& t : b) {
            auto cls = classify(kernel(t));
            if (cls.tag == FamilyTag::Q && cls.l == ctx.m()) {
              ++tilde;
            }
          }
          bool is_min_size = b.size() == relrank;
          if (is_min_size != (tilde == expected_tilde)) {
            consistent = false;
          }
        });
        row.formula_value = static_cast<std::int64_t>(relrank);
        row.brute_value = minimal_sets;
        row.note = "minimal size occurs exactly when the interval-kernel part has " +
                   std::to_string(expected_tilde) + " element(s)";
        return consistent && minimal_sets > 0;
      });
}

// ---------------------------------------------------------------- thm12 ---

void verify_thm12(VerificationReport& report, const ChainContext& ctx, const Budget& budget) {
  if (ctx.m() >= ctx.n() || ctx.m() < 2 || ctx.n() > kSweepNMax) {
    return;
  }
  RowRunner(report, ctx, "thm12:characterization", "checker-vs-closure").run([&](VerifyRow& row) {
    auto t = enumerate_t(ctx, budget);
    auto op = enumerate_op(ctx, budget);
    auto pool = difference(t, op);
    std::size_t max_size = static_cast<std::size_t>(relrank_t_mod_op(ctx)) + 1;
    if (subset_count(pool.size(), max_size) > kMaxSweepSubsets) {
      fail(ErrorKind::BudgetExceeded, "family too large");
    }
    std::int64_t candidates = 0;
    std::int64_t agreements = 0;
    for_each_subset(pool, max_size, [&](const std::vector<Transformation>& b) {
      ++candidates;
      bool checker = check_min_relgen_t_mod_op(ctx, as_generating_set(ctx, b)).verdict;
      bool direct = direct_minimal(t, op, b, budget);
      agreements += (checker == direct) ? 1 : 0;
    });
    row.formula_value = candidates;
    row.brute_value = agreements;
    return candidates == agreements;
  });
  RowRunner(report, ctx, "thm12:minimal-size-remark", "checker-vs-closure").run(
      [&](VerifyRow& row) {
        auto t = enumerate_t(ctx, budget);
        auto op = enumerate_op(ctx, budget);
        auto pool = difference(t, op);
        const auto relrank = relrank_t_mod_op(ctx);
        std::size_t max_size = static_cast<std::size_t>(relrank) + 1;
        if (subset_count(pool.size(), max_size) > kMaxSweepSubsets) {
          fail(ErrorKind::BudgetExceeded, "family too large");
        }
        bool consistent = true;
        std::int64_t minimal_sets = 0;
        std::size_t min_size = SIZE_MAX;
        for_each_subset(pool, max_size, [&](const std::vector<Transformation>& b) {
          if (!check_min_relgen_t_mod_op(ctx, as_generating_set(ctx, b)).verdict) {
            return;
          }
          ++minimal_sets;
          min_size = std::min(min_size, b.size());
          if (b.size() < relrank) {
            consistent = false;
          }
        });
        row.formula_value = static_cast<std::int64_t>(relrank);
        row.brute_value = minimal_sets;
        return consistent && minimal_sets > 0 && min_size == relrank;
      });
}

// ------------------------------------------------------------- lemma-eta --

void verify_lemma_eta(VerificationReport& report, const ChainContext& ctx, const Budget& budget) {
  RowRunner(report, ctx, "lemma-eta:set-equality", "set-equality").run([&](VerifyRow& row) {
    const YMap eta_on_y = restrict_to_y(build_eta(ctx));
    std::vector<YMap> powers;
    YMap acc = eta_on_y;
    for (int i = 0; i < ctx.m(); ++i) {
      if (std::find(powers.begin(), powers.end(), acc) == powers.end()) {
        powers.push_back(acc);
      }
      acc = compose(acc, eta_on_y);
    }
    std::vector<YMap> op_restrictions;
    for (const auto& beta : enumerate_op(ctx, budget).elements()) {
      YMap r = restrict_to_y(beta);
      if (r.is_permutation() &&
          std::find(op_restrictions.begin(), op_restrictions.end(), r) == op_restrictions.end()) {
        op_restrictions.push_back(r);
      }
    }
    row.formula_value = static_cast<std::int64_t>(powers.size());
    row.brute_value = static_cast<std::int64_t>(op_restrictions.size());
    auto subset_of = [](const std::vector<YMap>& a, const std::vector<YMap>& b) {
      for (const auto& x : a) {
        if (std::find(b.begin(), b.end(), x) == b.end()) {
          return false;
        }
      }
      return true;
    };
    return subset_of(powers, op_restrictions) && subset_of(op_restrictions, powers);
  });
}

// ---------------------------------------------------------------- lemma7 --

void verify_lemma7(VerificationReport& report, const ChainContext& ctx, const Budget& budget) {
  if (ctx.m() >= ctx.n()) {
    RowRunner(report, ctx, "lemma7:factor-roundtrip", "factorization")
        .skipped("out of theorem scope: m = n");
    return;
  }
  RowRunner(report, ctx, "lemma7:hypotheses", "hypothesis-check").run([&](VerifyRow& row) {
    auto b = canonical_b_t_mod_op(ctx);
    row.formula_value = static_cast<std::int64_t>(relrank_t_mod_op(ctx));
    row.brute_value = static_cast<std::int64_t>(b.set.size());
    return covers_required_kernels(RelrankTask::TOverOp, ctx, b.set.elements) &&
           generates_symmetric_group_on_y(ctx, b.set.elements) &&
           b.set.size() == relrank_t_mod_op(ctx);
  });
  RowRunner(report, ctx, "lemma7:factor-roundtrip", "factorization").run([&](VerifyRow& row) {
    auto t = enumerate_t(ctx, budget);
    auto b = canonical_b_t_mod_op(ctx);
    const Transformation eta = build_eta(ctx);
    std::int64_t good = 0;
    for (const auto& gamma : t.elements()) {
      Word word = factor_t_over_op(gamma, b.set);
      bool ok = word.product() == gamma;
      for (const auto& f : word.factors) {
        switch (f.tag) {
          case FactorTag::BaseOP: ok = ok && is_orientation_preserving(f.map); break;
          case FactorTag::GeneratorB: ok = ok && b.set.contains(f.map); break;
          case FactorTag::EtaPower: ok = ok && f.map == eta && f.power >= 1; break;
          default: ok = false;
        }
      }
      good += ok ? 1 : 0;
    }
    row.formula_value = static_cast<std::int64_t>(t.size());
    row.brute_value = good;
    return good == row.formula_value;
  });
}

}  // namespace

std::optional<VerifyScope> parse_scope(const std::string& name) {
  if (name == "thm5") return VerifyScope::Thm5;
  if (name == "thm6") return VerifyScope::Thm6;
  if (name == "thm11") return VerifyScope::Thm11;
  if (name == "thm12") return VerifyScope::Thm12;
  if (name == "lemma-eta") return VerifyScope::LemmaEta;
  if (name == "prop2") return VerifyScope::Prop2;
  if (name == "lemma7") return VerifyScope::Lemma7;
  if (name == "all") return VerifyScope::All;
  return std::nullopt;
}

const char* to_string(VerifyScope scope) {
  switch (scope) {
    case VerifyScope::Thm5: return "thm5";
    case VerifyScope::Thm6: return "thm6";
    case VerifyScope::Thm11: return "thm11";
    case VerifyScope::Thm12: return "thm12";
    case VerifyScope::LemmaEta: return "lemma-eta";
    case VerifyScope::Prop2: return "prop2";
    case VerifyScope::Lemma7: return "lemma7";
    case VerifyScope::All: return "all";
  }
  return "?";
}

bool YFilter::admits(int n, const std::vector<int>& y) const {
  switch (mode) {
    case Mode::All:
      return true;
    case Mode::Exact:
      return y == values;
    case Mode::Contains: {
      for (int v : values) {
        int needed = v == 0 ? n : v;
        if (!std::binary_search(y.begin(), y.end(), needed)) {
          return false;
        }
      }
      return true;
    }
  }
  return true;
}

bool VerificationReport::all_pass() const {
  for (const auto& row : rows) {
    if (row.status == "FAIL") {
      return false;
    }
  }
  return true;
}

std::size_t VerificationReport::count(const std::string& status) const {
  std::size_t c = 0;
  for (const auto& row : rows) {
    c += row.status == status ? 1 : 0;
  }
  return c;
}

std::vector<std::vector<int>> y_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> y;
    for (int v = 1; v <= n; ++v) {
      if (mask & (1u << (v - 1))) {
        y.push_back(v);
      }
    }
    out.push_back(std::move(y));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  });
  return out;
}

VerificationReport run_verify(VerifyScope scope, int n_max, const YFilter& filter,
                              const Budget& budget) {
  VerificationReport report;
  report.scope = to_string(scope);
  report.n_max = n_max;
  auto in_scope = [&](VerifyScope s) { return scope == s || scope == VerifyScope::All; };
  for (int n = 2; n <= n_max; ++n) {
    for (const auto& y : y_subsets(n)) {
      if (!filter.admits(n, y)) {
        continue;
      }
      ChainContext ctx(n, y);
      if (in_scope(VerifyScope::Thm5)) verify_thm5(report, ctx, budget);
      if (in_scope(VerifyScope::Prop2)) verify_prop2(report, ctx, budget);
      if (in_scope(VerifyScope::Thm6)) verify_thm6(report, ctx, budget);
      if (in_scope(VerifyScope::Thm11)) verify_thm11(report, ctx, budget);
      if (in_scope(VerifyScope::Thm12)) verify_thm12(report, ctx, budget);
      if (in_scope(VerifyScope::LemmaEta)) verify_lemma_eta(report, ctx, budget);
      if (in_scope(VerifyScope::Lemma7)) verify_lemma7(report, ctx, budget);
    }
  }
  return report;
}

std::string report_to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "n,m,y,check,formula_value,brute_value,universe_size,millis,status\n";
  for (const auto& row : report.rows) {
    out << row.n << ',' << row.m << ',';
    for (std::size_t i = 0; i < row.y.size(); ++i) {
      if (i) out << ' ';
      out << row.y[i];
    }
    out << ',' << row.check << ',' << row.formula_value << ',' << row.brute_value << ','
        << row.universe_size << ',' << row.millis << ',' << row.status << '\n';
  }
  return out.str();
}

}  // namespace chainrr
