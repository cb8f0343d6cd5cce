#include "covering/reduction.hpp"

#include <cmath>

#include "covering/errors.hpp"
#include "covering/rng.hpp"

namespace covering {

  void check_exponent(mpq_class const& e, char const* name, bool allow_one) {
    if (e <= 0 || e > 1 || (!allow_one && e == 1)) {
      throw ArgumentError(std::string(name) + " must lie in (0, 1"
                          + (allow_one ? "]" : ")"));
    }
    if (e.get_den() > max_exponent_denominator) {
      throw ArgumentError(std::string(name) + " denominator must be at most "
                          + std::to_string(max_exponent_denominator));
    }
  }

  namespace {
    // x^q versus base^p for e = p/q
    int compare_power(mpz_class const& x, mpz_class const& base, mpq_class const& e) {
      auto      p = e.get_num().get_ui();
      auto      q = e.get_den().get_ui();
      mpz_class lhs, rhs;
      mpz_pow_ui(lhs.get_mpz_t(), x.get_mpz_t(), q);
      mpz_pow_ui(rhs.get_mpz_t(), base.get_mpz_t(), p);
      return cmp(lhs, rhs);
    }

    nlohmann::json range_json(std::pair<std::size_t, std::size_t> const& r) {
      return nlohmann::json::array({r.first, r.second});
    }
  }  // namespace

  bool exceeds_power(mpz_class const& x, mpz_class const& base, mpq_class const& e) {
    return compare_power(x, base, e) > 0;
  }

  bool at_least_power(mpz_class const& x, mpz_class const& base, mpq_class const& e) {
    return compare_power(x, base, e) >= 0;
  }

  nlohmann::json BlockPlan::to_json() const {
    nlohmann::json blocks_json = nlohmann::json::array();
    for (auto const& b : blocks) {
      blocks_json.push_back(range_json(b));
    }
    nlohmann::json out{{"epsilon", epsilon.get_str()},
                       {"blocks", blocks_json},
                       {"tail", tail ? range_json(*tail) : nlohmann::json::array()}};
    return out;
  }

  BlockPlan greedy_blocks(std::span<mpz_class const> sizes,
                          mpz_class const&           group_order,
                          mpq_class const&           epsilon) {
    check_exponent(epsilon, "epsilon");
    if (group_order < 2) {
      throw ArgumentError("greedy_blocks needs |G| >= 2");
    }
    BlockPlan plan;
    plan.group_order   = group_order;
    plan.epsilon       = epsilon;
    mpq_class inv      = 1 / epsilon;
    mpq_class upper    = 1 + inv;
    std::size_t start  = 0;
    mpz_class running  = 1;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (sizes[i] < 1 || sizes[i] > group_order) {
        throw ArgumentError("set sizes must lie in [1, |G|]");
      }
      running *= sizes[i];
      if (exceeds_power(running, group_order, inv)) {
        if (exceeds_power(running, group_order, upper)) {
          throw InternalError("block product exceeds |G|^(1 + 1/epsilon)");
        }
        plan.blocks.emplace_back(start + 1, i + 1);
        plan.block_products.push_back(running);
        running = 1;
        start   = i + 1;
      }
    }
    if (start < sizes.size()) {
      plan.tail.emplace(start + 1, sizes.size());
    }
    plan.tail_product = running;
    return plan;
  }

  nlohmann::json PipelineResult::to_json(GroupContext const& group) const {
    nlohmann::json blocks_json = nlohmann::json::array();
    for (auto const& b : blocks) {
      nlohmann::json support = nlohmann::json::array();
      for (auto c : b.support.members()) {
        support.push_back(group.class_label(c));
      }
      blocks_json.push_back({{"range", range_json(b.range)},
                             {"size_product", b.size_product.get_str()},
                             {"support", support},
                             {"support_size", b.support_size.get_str()},
                             {"delta_bound_holds", b.delta_bound_holds}});
    }
    return {{"plan", plan.to_json()},
            {"delta", delta.get_str()},
            {"blocks", blocks_json},
            {"block_count", blocks.size()},
            {"coverage", report.to_json(group)},
            {"full_product_covered", full_product_covered},
            {"note", note}};
  }

  PipelineResult conjecture_pipeline(std::span<NormalSet const> sets,
                                     mpq_class const&           delta,
                                     mpq_class const&           epsilon) {
    if (sets.empty()) {
      throw ArgumentError("conjecture_pipeline needs at least one normal set");
    }
    check_exponent(delta, "delta");
    auto const& group = sets.front().group();
    std::vector<mpz_class> sizes;
    for (auto const& s : sets) {
      sizes.push_back(s.size());
    }
    PipelineResult result;
    result.delta = delta;
    result.plan  = greedy_blocks(sizes, group->order(), epsilon);

    std::vector<NormalSet> block_sets;
    for (std::size_t b = 0; b < result.plan.blocks.size(); ++b) {
      auto [lo, hi] = result.plan.blocks[b];
      auto           cover = covers_group(sets.subspan(lo - 1, hi - lo + 1));
      PipelineBlock  block;
      block.range             = {lo, hi};
      block.size_product      = result.plan.block_products[b];
      block.support           = cover.support;
      NormalSet support_set(group, cover.support);
      block.support_size      = support_set.size();
      block.delta_bound_holds = at_least_power(block.support_size, group->order(), delta);
      block_sets.push_back(std::move(support_set));
      result.blocks.push_back(std::move(block));
    }

    if (block_sets.empty()) {
      result.report.support = group->empty_set();
      result.report.missing = group->full_set();
      result.report.covered = false;
      result.note = "no block: the product of all sizes never exceeds |G|^(1/epsilon); "
                    "every set is in the tail";
    } else {
      result.report = covers_group(block_sets);
      if (result.plan.tail) {
        result.note = "tail [" + std::to_string(result.plan.tail->first) + ", "
                      + std::to_string(result.plan.tail->second)
                      + "] left unblocked (product <= |G|^(1/epsilon))";
      }
    }
    result.full_product_covered = covers_group(sets).covered;
    if (block_sets.empty()) {
      result.note += result.full_product_covered ? "; the full product covers G"
                                                 : "; the full product does not cover G";
    }
    return result;
  }

  L1Audit lemma_l1_audit(GroupPtr const& group,
                         mpq_class const& delta,
                         double           epsilon_hat,
                         std::size_t      sequences,
                         std::size_t      max_length,
                         std::uint64_t    seed) {
    check_exponent(delta, "delta");
    L1Audit audit;
    audit.epsilon_hat = epsilon_hat;
    audit.seed        = seed;
    Rng         rng(seed);
    std::size_t k = group->num_classes();
    auto random_set = [&] {
      ClassSet s = group->empty_set();
      while (s.none()) {
        for (std::size_t c = 0; c < k; ++c) {
          if (rng.uniform(0, 3) == 0) {
            s.set(c);
          }
        }
      }
      return NormalSet(group, s);
    };
    for (std::size_t seq = 0; seq < sequences; ++seq) {
      ++audit.sequences;
      NormalSet prefix   = random_set();
      double    log_prod = std::log(prefix.size().get_d());
      for (std::size_t t = 2; t <= max_length; ++t) {
        NormalSet next = random_set();
        bool hypothesis = !exceeds_power(prefix.size(), group->order(), delta);
        log_prod += std::log(next.size().get_d());
        prefix = product_support(prefix, next);
        if (hypothesis) {
          ++audit.checks;
          double lhs = std::log(prefix.size().get_d());
          if (lhs + 1e-12 < epsilon_hat * log_prod) {
            ++audit.violations;
          }
        }
      }
    }
    return audit;
  }

}  // namespace covering
