#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "covering/frobenius.hpp"

namespace covering {

  // Machine-readable scan output: one row per measurement plus a summary.
  struct ScanReport {
    std::string                           name;
    std::string                           group;
    nlohmann::json                        parameters = nlohmann::json::object();
    std::vector<std::string>              columns;
    std::vector<std::vector<std::string>> rows;
    nlohmann::json                        summary = nlohmann::json::object();

    nlohmann::json to_json() const;
    std::string    to_csv() const;
  };

  // Fixed formatting for real-valued measurements in reports.
  std::string format_real(double x);

  // zeta(t) = sum over irreducible degrees d of d^-t, enclosed in
  // [lower, upper] with exact rational endpoints. Integer t gives
  // lower == upper.
  struct ZetaValue {
    mpq_class lower;
    mpq_class upper;
    bool      exact = false;
    unsigned  precision_bits = 0;

    double      approx() const { return mpq_class((lower + upper) / 2).get_d(); }
    std::string to_string(int digits = 35) const;
  };

  // Width of the enclosure is at most 10^-30 unless exact.
  ZetaValue zeta_value(std::span<mpz_class const> degrees,
                       mpq_class const&           t,
                       unsigned                   min_bits = 128);
  ZetaValue zeta_value(GroupContext const& group, mpq_class const& t);

  // Orders zeta_a(t) against zeta_b(t), refining precision until the
  // enclosures separate. Equal values are only detected when both are exact.
  std::partial_ordering compare_zeta(std::span<mpz_class const> degrees_a,
                                     std::span<mpz_class const> degrees_b,
                                     mpq_class const&           t);

  // Hypothesis of the product-free bound: |A||B||C| >= |G|^3 / m.
  bool gowers_check(mpz_class const& group_order,
                    mpz_class const& min_degree,
                    mpz_class const& a,
                    mpz_class const& b,
                    mpz_class const& c);
  bool gowers_check(GroupContext const& group,
                    mpz_class const&    a,
                    mpz_class const&    b,
                    mpz_class const&    c);

  // |A| + |B| > |G|.
  bool jacobson_check(mpz_class const& a, mpz_class const& b, mpz_class const& group_order);

  // size > |G|^(1 - 1/(24 r^2)).
  bool exceeds_rank_threshold(mpz_class const& size, mpz_class const& group_order, int rank);

  struct SubsetValidation {
    std::size_t   samples         = 0;
    std::size_t   confirmed       = 0;
    std::size_t   counterexamples = 0;
    std::uint64_t seed            = 0;
  };

  // Random subsets A, B, C of the oracle group meeting the Gowers bound;
  // each triple product is checked element by element.
  SubsetValidation gowers_validation(PermGroup const& g,
                                     mpz_class const& min_degree,
                                     std::size_t      samples,
                                     std::uint64_t    seed);
  // Random A, B with |A| + |B| > |G|; AB checked element by element.
  SubsetValidation jacobson_validation(PermGroup const& g,
                                       std::size_t      samples,
                                       std::uint64_t    seed);
  // Random A, B, C each above the rank-r threshold; ABC checked directly.
  SubsetValidation rank_threshold_validation(PermGroup const& g,
                                             int              rank,
                                             std::size_t      samples,
                                             std::uint64_t    seed);

  struct ClassCountCheck {
    mpz_class class_count;
    mpz_class bound;
    bool      holds = false;
    // PSL(2,q) only: least integer d with q^(d n) >= k and log k / (n log q)
    std::optional<long>   min_exponent;
    std::optional<double> real_exponent;
  };

  // k(Alt(n)) <= 2^(n-1), from the partition count.
  ClassCountCheck alt_class_count_check(int n);
  // k(G) for an oracle group G <= PSL(dim, q), against q^(d dim).
  ClassCountCheck classical_class_count_check(GroupContext const& group, int dim, int q);

  // A member class of maximal size (first such in class order); asserts
  // |C| >= |S| / k(G).
  std::size_t extract_large_class(NormalSet const& s);

  // Smallest non-identity class C (ties by index) with C^2 = G.
  std::optional<std::size_t> thompson_search(GroupPtr const& group);

  struct MinRScanOptions {
    std::size_t   max_r             = 8;
    std::size_t   exhaustive_limit  = 1'000'000;
    std::size_t   samples           = 2'000;
    std::uint64_t seed              = 1;
  };

  // Least r such that every r-multiset of classes of size >= |G|^alpha
  // multiplies to G.
  ScanReport min_r_scan(GroupPtr const& group, mpq_class const& alpha,
                        MinRScanOptions const& options = {});

  struct GltScanOptions {
    double centralizer_exponent = 0.05;
    double band_width           = 0.05;
  };

  // log|chi(g)| / log chi(1) against log|C_G(g)| / log|G| over the table.
  ScanReport glt_scan(GroupPtr const& group, GltScanOptions const& options = {});

  struct EpsilonScanOptions {
    mpq_class     delta_hat   = mpq_class(1, 2);
    std::size_t   samples     = 500;
    std::uint64_t seed        = 1;
    std::size_t   order_limit = 5'000;
  };

  // min over sampled A (|A| <= |G|^delta_hat) and normal B (|B| > 1) of
  // log(|AB| / |A|) / log |B|.
  ScanReport epsilon_scan(GroupPtr const& group, EpsilonScanOptions const& options = {});

  // |AB| for an element set A and a normal set B given by classes.
  std::size_t subset_normal_product_size(PermGroup const& g,
                                         Bitset const&    a,
                                         Bitset const&    b_classes);

}  // namespace covering
