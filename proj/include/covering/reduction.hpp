#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "covering/frobenius.hpp"

namespace covering {

  inline constexpr long max_exponent_denominator = 64;

  // Throws ArgumentError unless lo < e <= hi (or lo <= e when lo_closed)
  // and den(e) <= 64.
  void check_exponent(mpq_class const& e, char const* name, bool allow_one = true);

  // x > base^e  <=>  x^q > base^p  for e = p/q > 0.
  bool exceeds_power(mpz_class const& x, mpz_class const& base, mpq_class const& e);
  // x >= base^e
  bool at_least_power(mpz_class const& x, mpz_class const& base, mpq_class const& e);

  // Greedy blocking of a sequence of set sizes. Ranges are 1-based and
  // inclusive.
  struct BlockPlan {
    mpz_class                                      group_order;
    mpq_class                                      epsilon;
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    std::optional<std::pair<std::size_t, std::size_t>> tail;
    std::vector<mpz_class>                         block_products;
    mpz_class                                      tail_product = 1;

    nlohmann::json to_json() const;
  };

  // Each block ends at the first index where the running product of sizes
  // exceeds |G|^(1/epsilon) (strictly); what is left is the tail.
  BlockPlan greedy_blocks(std::span<mpz_class const> sizes,
                          mpz_class const&           group_order,
                          mpq_class const&           epsilon);

  struct PipelineBlock {
    std::pair<std::size_t, std::size_t> range;
    mpz_class                           size_product;
    ClassSet                            support;
    mpz_class                           support_size;
    bool                                delta_bound_holds = false;  // |A| >= |G|^delta
  };

  struct PipelineResult {
    BlockPlan                  plan;
    mpq_class                  delta;
    std::vector<PipelineBlock> blocks;
    // Product of the block supports; empty block list means not covered.
    CoverageReport             report;
    // Coverage of the whole product S_1 ... S_k (blocks and tail).
    bool                       full_product_covered = false;
    std::string                note;

    nlohmann::json to_json(GroupContext const& group) const;
  };

  PipelineResult conjecture_pipeline(std::span<NormalSet const> sets,
                                     mpq_class const&           delta,
                                     mpq_class const&           epsilon);

  struct L1Audit {
    std::size_t sequences  = 0;
    std::size_t checks     = 0;  // (sequence, t) pairs meeting the hypothesis
    std::size_t violations = 0;
    double      epsilon_hat = 0;
    std::uint64_t seed = 0;
  };

  // Samples sequences A_1..A_t of random normal sets; whenever
  // |A_1 ... A_{t-1}| <= |G|^delta, tests |A_1 ... A_t| >= (prod |A_i|)^eps_hat.
  L1Audit lemma_l1_audit(GroupPtr const& group,
                         mpq_class const& delta,
                         double           epsilon_hat,
                         std::size_t      sequences,
                         std::size_t      max_length,
                         std::uint64_t    seed);

}  // namespace covering
