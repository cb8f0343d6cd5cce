#include "covering/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include <mpfr.h>

#include "covering/errors.hpp"
#include "covering/reduction.hpp"
#include "covering/rng.hpp"

namespace covering {

  std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
  }

  nlohmann::json ScanReport::to_json() const {
    nlohmann::json records = nlohmann::json::array();
    for (auto const& row : rows) {
      nlohmann::json rec = nlohmann::json::object();
      for (std::size_t i = 0; i < columns.size() && i < row.size(); ++i) {
        rec[columns[i]] = row[i];
      }
      records.push_back(std::move(rec));
    }
    return {{"scan", name},
            {"group", group},
            {"parameters", parameters},
            {"summary", summary},
            {"records", records}};
  }

  std::string ScanReport::to_csv() const {
    auto quote = [](std::string const& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
      }
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"') {
          out += '"';
        }
        out += ch;
      }
      return out + "\"";
    };
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out += (i ? "," : "") + quote(columns[i]);
    }
    out += '\n';
    for (auto const& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out += (i ? "," : "") + quote(row[i]);
      }
      out += '\n';
    }
    return out;
  }

  namespace {

    class Real {
     public:
      explicit Real(mpfr_prec_t bits) { mpfr_init2(_x, bits); }
      ~Real() { mpfr_clear(_x); }
      Real(Real const&)            = delete;
      Real& operator=(Real const&) = delete;
      mpfr_ptr get() { return _x; }

     private:
      mpfr_t _x;
    };

    mpq_class to_rational(mpfr_ptr x) {
      mpq_class q;
      mpfr_get_q(q.get_mpq_t(), x);
      return q;
    }

    // d^-t with t = p/q rounded towards rnd (MPFR_RNDD or MPFR_RNDU).
    void power_bound(mpfr_ptr          out,
                     mpz_class const&  d,
                     mpq_class const&  t,
                     mpfr_rnd_t        rnd,
                     mpfr_prec_t       bits) {
      mpz_class p = t.get_num();
      unsigned long q = t.get_den().get_ui();
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), d.get_mpz_t(), mpz_class(abs(p)).get_ui());
      bool       negative_exponent = p > 0;  // d^-t with t > 0
      // For d^-t = 1 / root, a lower bound needs root rounded up.
      mpfr_rnd_t root_rnd = negative_exponent
                                ? (rnd == MPFR_RNDD ? MPFR_RNDU : MPFR_RNDD)
                                : rnd;
      Real base(bits + static_cast<mpfr_prec_t>(mpz_sizeinbase(pw.get_mpz_t(), 2)));
      mpfr_set_z(base.get(), pw.get_mpz_t(), MPFR_RNDN);  // exact at this precision
      mpfr_rootn_ui(out, base.get(), q, root_rnd);
      if (negative_exponent) {
        mpfr_ui_div(out, 1, out, rnd);
      }
    }

    ZetaValue zeta_at_precision(std::span<mpz_class const> degrees,
                                mpq_class const&           t,
                                mpfr_prec_t                bits) {
      Real lo(bits), hi(bits), term(bits);
      mpfr_set_zero(lo.get(), 1);
      mpfr_set_zero(hi.get(), 1);
      for (auto const& d : degrees) {
        power_bound(term.get(), d, t, MPFR_RNDD, bits);
        mpfr_add(lo.get(), lo.get(), term.get(), MPFR_RNDD);
        power_bound(term.get(), d, t, MPFR_RNDU, bits);
        mpfr_add(hi.get(), hi.get(), term.get(), MPFR_RNDU);
      }
      ZetaValue z;
      z.lower          = to_rational(lo.get());
      z.upper          = to_rational(hi.get());
      z.precision_bits = static_cast<unsigned>(bits);
      return z;
    }

    constexpr mpfr_prec_t max_zeta_bits = 1 << 14;

    std::string group_label(GroupContext const& g) {
      return g.description();
    }

  }  // namespace

  std::string ZetaValue::to_string(int digits) const {
    mpq_class mid = (lower + upper) / 2;
    Real      r(256);
    mpfr_set_q(r.get(), mid.get_mpq_t(), MPFR_RNDN);
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, r.get());
    return buf.data();
  }

  ZetaValue zeta_value(std::span<mpz_class const> degrees,
                       mpq_class const&           t,
                       unsigned                   min_bits) {
    if (degrees.empty()) {
      throw CapabilityError("zeta_value: no irreducible degrees");
    }
    if (t.get_den() == 1) {
      mpq_class sum = 0;
      long      e   = t.get_num().get_si();
      for (auto const& d : degrees) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(std::labs(e)));
        sum += e >= 0 ? mpq_class(1, pw) : mpq_class(pw);
      }
      ZetaValue z;
      z.lower = z.upper = sum;
      z.exact           = true;
      return z;
    }
    mpq_class const tolerance(1, mpz_class("1000000000000000000000000000000"));
    for (mpfr_prec_t bits = std::max<mpfr_prec_t>(min_bits, 64);; bits *= 2) {
      auto z = zeta_at_precision(degrees, t, bits);
      if (z.upper - z.lower <= tolerance) {
        return z;
      }
      if (bits > max_zeta_bits) {
        throw ResourceError("zeta_value: enclosure did not shrink below 1e-30");
      }
    }
  }

  ZetaValue zeta_value(GroupContext const& group, mpq_class const& t) {
    if (auto const* table = group.table()) {
      return zeta_value(table->degrees(), t);
    }
    throw CapabilityError("zeta_value: " + group.description()
                          + " has no irreducible degrees");
  }

  std::partial_ordering compare_zeta(std::span<mpz_class const> degrees_a,
                                     std::span<mpz_class const> degrees_b,
                                     mpq_class const&           t) {
    for (unsigned bits = 128; bits <= max_zeta_bits; bits *= 2) {
      auto a = zeta_value(degrees_a, t, bits);
      auto b = zeta_value(degrees_b, t, bits);
      if (a.upper < b.lower) {
        return std::partial_ordering::less;
      }
      if (a.lower > b.upper) {
        return std::partial_ordering::greater;
      }
      if (a.exact && b.exact) {
        return std::partial_ordering::equivalent;
      }
    }
    return std::partial_ordering::unordered;
  }

  bool gowers_check(mpz_class const& group_order,
                    mpz_class const& min_degree,
                    mpz_class const& a,
                    mpz_class const& b,
                    mpz_class const& c) {
    if (min_degree < 1) {
      throw ArgumentError("gowers_check: minimal degree must be positive");
    }
    return a * b * c * min_degree >= group_order * group_order * group_order;
  }

  bool gowers_check(GroupContext const& group,
                    mpz_class const&    a,
                    mpz_class const&    b,
                    mpz_class const&    c) {
    return gowers_check(group.order(), group.min_nontrivial_degree(), a, b, c);
  }

  bool jacobson_check(mpz_class const& a, mpz_class const& b, mpz_class const& group_order) {
    if (a > group_order || b > group_order || a < 0 || b < 0) {
      throw ArgumentError("jacobson_check: sizes must lie in [0, |G|]");
    }
    return a + b > group_order;
  }

  bool exceeds_rank_threshold(mpz_class const& size, mpz_class const& group_order, int rank) {
    if (rank < 1) {
      throw ArgumentError("rank must be positive");
    }
    long      r2 = 24L * rank * rank;
    mpq_class e(r2 - 1, r2);
    return exceeds_power(size, group_order, e);
  }

  namespace {
    Bitset random_subset(Rng& rng, std::size_t n, std::size_t k) {
      Bitset s(n);
      for (auto i : rng.sample(n, k)) {
        s.set(i);
      }
      return s;
    }
  }  // namespace

  SubsetValidation gowers_validation(PermGroup const& g,
                                     mpz_class const& min_degree,
                                     std::size_t      samples,
                                     std::uint64_t    seed) {
    SubsetValidation v;
    v.seed = seed;
    Rng         rng(seed);
    std::size_t n = g.order();
    mpz_class   order(static_cast<unsigned long>(n));
    mpz_class   need = order * order * order;
    while (v.samples < samples) {
      std::size_t a = rng.uniform(1, n), b = rng.uniform(1, n);
      // least c with a b c m >= |G|^3
      mpz_class denom = mpz_class(static_cast<unsigned long>(a)) * b * min_degree;
      mpz_class cmin  = (need + denom - 1) / denom;
      if (cmin > order) {
        continue;
      }
      std::size_t c = rng.uniform(cmin.get_ui(), n);
      if (!gowers_check(order, min_degree, a, b, c)) {
        throw InternalError("gowers sampling produced sizes below the bound");
      }
      ++v.samples;
      bool covers = brute_subset_triple_product(
          g, random_subset(rng, n, a), random_subset(rng, n, b), random_subset(rng, n, c));
      covers ? ++v.confirmed : ++v.counterexamples;
    }
    return v;
  }

  SubsetValidation jacobson_validation(PermGroup const& g,
                                       std::size_t      samples,
                                       std::uint64_t    seed) {
    SubsetValidation v;
    v.seed = seed;
    Rng         rng(seed);
    std::size_t n = g.order();
    for (; v.samples < samples; ++v.samples) {
      std::size_t a = rng.uniform(1, n);
      std::size_t b = rng.uniform(n - a + 1, n);
      bool covers = brute_subset_pair_product(g, random_subset(rng, n, a),
                                              random_subset(rng, n, b));
      covers ? ++v.confirmed : ++v.counterexamples;
    }
    return v;
  }

  SubsetValidation rank_threshold_validation(PermGroup const& g,
                                             int              rank,
                                             std::size_t      samples,
                                             std::uint64_t    seed) {
    SubsetValidation v;
    v.seed = seed;
    Rng         rng(seed);
    std::size_t n = g.order();
    mpz_class   order(static_cast<unsigned long>(n));
    std::size_t lo = n;
    while (lo > 1 && exceeds_rank_threshold(mpz_class(static_cast<unsigned long>(lo - 1)),
                                            order, rank)) {
      --lo;
    }
    if (!exceeds_rank_threshold(mpz_class(static_cast<unsigned long>(lo)), order, rank)) {
      return v;  // no subset is large enough
    }
    for (; v.samples < samples; ++v.samples) {
      auto a = random_subset(rng, n, rng.uniform(lo, n));
      auto b = random_subset(rng, n, rng.uniform(lo, n));
      auto c = random_subset(rng, n, rng.uniform(lo, n));
      brute_subset_triple_product(g, a, b, c) ? ++v.confirmed : ++v.counterexamples;
    }
    return v;
  }

  ClassCountCheck alt_class_count_check(int n) {
    if (n < 5) {
      throw ArgumentError("class count bound is stated for n >= 5");
    }
    ClassCountCheck r;
    r.class_count = static_cast<unsigned long>(all_classes({Family::Alt, n}).size());
    mpz_ui_pow_ui(r.bound.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
    r.holds = r.class_count <= r.bound;
    return r;
  }

  ClassCountCheck classical_class_count_check(GroupContext const& group, int dim, int q) {
    if (dim < 1 || q < 2) {
      throw ArgumentError("classical_class_count_check: bad dimension or field size");
    }
    ClassCountCheck r;
    r.class_count = static_cast<unsigned long>(group.num_classes());
    long      d   = 1;
    mpz_class qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(dim));
    mpz_class bound = qn;
    while (bound < r.class_count) {
      bound *= qn;
      ++d;
    }
    r.min_exponent  = d;
    r.bound         = bound;
    r.holds         = true;
    r.real_exponent = std::log(r.class_count.get_d()) / (dim * std::log(double(q)));
    return r;
  }

  std::size_t extract_large_class(NormalSet const& s) {
    auto const& g    = *s.group();
    std::size_t best = 0;
    bool        have = false;
    for (auto c : s.classes().members()) {
      if (!have || g.class_size(c) > g.class_size(best)) {
        best = c;
        have = true;
      }
    }
    mpz_class k(static_cast<unsigned long>(g.num_classes()));
    if (g.class_size(best) * k < s.size()) {
      throw InternalError("largest class smaller than |S| / k(G)");
    }
    return best;
  }

  std::optional<std::size_t> thompson_search(GroupPtr const& group) {
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < group->num_classes(); ++c) {
      if (c != group->identity_class()) {
        order.push_back(c);
      }
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return group->class_size(a) < group->class_size(b);
    });
    for (auto c : order) {
      if (group->pair_support(c, c).all()) {
        return c;
      }
    }
    return std::nullopt;
  }

  ScanReport min_r_scan(GroupPtr const& group, mpq_class const& alpha,
                        MinRScanOptions const& options) {
    check_exponent(alpha, "alpha");
    ScanReport report;
    report.name       = "min-r";
    report.group      = group_label(*group);
    report.parameters = {{"alpha", alpha.get_str()},
                         {"max_r", options.max_r},
                         {"exhaustive_limit", options.exhaustive_limit},
                         {"samples", options.samples},
                         {"seed", options.seed}};
    report.columns = {"r", "mode", "tuples", "failures", "witness"};

    std::vector<std::size_t> qualifying;
    for (std::size_t c = 0; c < group->num_classes(); ++c) {
      if (at_least_power(group->class_size(c), group->order(), alpha)) {
        qualifying.push_back(c);
      }
    }
    nlohmann::json labels = nlohmann::json::array();
    for (auto c : qualifying) {
      labels.push_back(group->class_label(c));
    }
    report.summary["qualifying_classes"] = labels;
    if (qualifying.empty()) {
      report.summary["vacuous"]      = true;
      report.summary["worst_case_r"] = nullptr;
      return report;
    }
    report.summary["vacuous"] = false;

    std::size_t const q = qualifying.size();
    auto witness_text = [&](std::vector<std::size_t> const& tuple) {
      std::string s;
      for (auto i : tuple) {
        s += (s.empty() ? "" : " ") + group->class_label(qualifying[i]);
      }
      return s;
    };

    Rng rng(options.seed);
    std::optional<std::size_t> worst;
    nlohmann::json             worst_witness = nullptr;
    for (std::size_t r = 1; r <= options.max_r; ++r) {
      // q^r <= limit decides the mode
      bool        exhaustive = true;
      std::size_t power      = 1;
      for (std::size_t i = 0; i < r; ++i) {
        power *= q;
        if (power > options.exhaustive_limit) {
          exhaustive = false;
          break;
        }
      }
      std::size_t              tuples = 0, failures = 0;
      std::vector<std::size_t> first_failure;

      auto record = [&](std::vector<std::size_t> const& tuple, ClassSet const& support) {
        ++tuples;
        if (!support.all()) {
          if (failures++ == 0) {
            first_failure = tuple;
          }
        }
      };

      if (exhaustive) {
        // multisets as non-decreasing index sequences, prefix supports reused
        std::vector<std::size_t> tuple;
        std::vector<ClassSet>    prefix;
        auto recurse = [&](auto&& self, std::size_t from) -> void {
          if (tuple.size() == r) {
            record(tuple, prefix.back());
            return;
          }
          for (std::size_t i = from; i < q; ++i) {
            ClassSet next = group->empty_set();
            if (prefix.empty()) {
              next.set(qualifying[i]);
            } else {
              NormalSet lhs(group, prefix.back());
              NormalSet rhs(group, std::vector<std::size_t>{qualifying[i]});
              next = product_support(lhs, rhs).classes();
            }
            tuple.push_back(i);
            prefix.push_back(std::move(next));
            self(self, i);
            tuple.pop_back();
            prefix.pop_back();
          }
        };
        recurse(recurse, 0);
      } else {
        for (std::size_t s = 0; s < options.samples; ++s) {
          std::vector<std::size_t> tuple;
          for (std::size_t i = 0; i < r; ++i) {
            tuple.push_back(static_cast<std::size_t>(rng.uniform(0, q - 1)));
          }
          std::vector<NormalSet> sets;
          for (auto i : tuple) {
            sets.emplace_back(group, std::vector<std::size_t>{qualifying[i]});
          }
          record(tuple, covers_group(sets).support);
        }
      }
      report.rows.push_back({std::to_string(r),
                             exhaustive ? "exhaustive" : "sampled",
                             std::to_string(tuples),
                             std::to_string(failures),
                             failures ? witness_text(first_failure) : ""});
      if (failures == 0) {
        worst = r;
        break;
      }
      worst_witness = witness_text(first_failure);
    }
    report.summary["worst_case_r"] = worst ? nlohmann::json(*worst) : nlohmann::json(nullptr);
    report.summary["last_failing_tuple"] = worst_witness;
    return report;
  }

  ScanReport glt_scan(GroupPtr const& group, GltScanOptions const& options) {
    auto const* table = group->table();
    if (!table) {
      throw CapabilityError("glt_scan: " + group->description()
                            + " has no character table");
    }
    ScanReport report;
    report.name       = "glt";
    report.group      = group_label(*group);
    report.parameters = {{"centralizer_exponent", format_real(options.centralizer_exponent)},
                         {"band_width", format_real(options.band_width)}};
    report.columns    = {"class", "character", "abs_value", "degree",
                         "character_ratio", "centralizer_ratio"};

    double const log_order = std::log(group->order().get_d());
    std::size_t  excluded_linear = 0, excluded_zero = 0, identity_cells = 0;
    std::map<long, std::pair<double, std::size_t>> bands;  // band -> (max, count)
    std::optional<double> max_small;

    for (std::size_t c = 0; c < table->num_classes(); ++c) {
      auto const& cls = table->classes()[c];
      double cent_ratio = std::log(cls.centralizer_order.get_d()) / log_order;
      for (std::size_t chi = 0; chi < table->num_irreducibles(); ++chi) {
        auto const& degree = table->degrees()[chi];
        if (degree == 1) {
          ++excluded_linear;
          continue;
        }
        auto const& v = table->value(chi, c);
        if (v.is_zero()) {
          ++excluded_zero;
          continue;
        }
        double absval = v.modulus();
        double ratio  = std::log(absval) / std::log(degree.get_d());
        report.rows.push_back({cls.short_id(), table->irreducibles()[chi].to_string(),
                               format_real(absval), degree.get_str(),
                               format_real(ratio), format_real(cent_ratio)});
        if (c == table->identity_class()) {
          ++identity_cells;
          continue;
        }
        long band = static_cast<long>(std::floor(cent_ratio / options.band_width));
        auto& [mx, count] = bands.try_emplace(band, ratio, 0).first->second;
        mx = std::max(mx, ratio);
        ++count;
        if (cent_ratio <= options.centralizer_exponent) {
          max_small = std::max(max_small.value_or(ratio), ratio);
        }
      }
    }
    nlohmann::json band_json = nlohmann::json::array();
    bool           monotone  = true;
    std::optional<double> previous;
    for (auto const& [band, entry] : bands) {
      band_json.push_back({{"centralizer_ratio_from", format_real(band * options.band_width)},
                           {"centralizer_ratio_to", format_real((band + 1) * options.band_width)},
                           {"max_character_ratio", format_real(entry.first)},
                           {"cells", entry.second}});
      if (previous && entry.first + 1e-12 < *previous) {
        monotone = false;
      }
      previous = entry.first;
    }
    report.summary = {{"bands", band_json},
                      {"band_max_monotone", monotone},
                      {"max_ratio_small_centralizer",
                       max_small ? nlohmann::json(format_real(*max_small)) : nlohmann::json(nullptr)},
                      {"excluded_linear_cells", excluded_linear},
                      {"excluded_zero_cells", excluded_zero},
                      {"identity_cells", identity_cells}};
    return report;
  }

  std::size_t subset_normal_product_size(PermGroup const& g,
                                         Bitset const&    a,
                                         Bitset const&    b_classes) {
    Bitset product(g.order());
    auto   classes = b_classes.members();
    for (auto x : a.members()) {
      for (auto c : classes) {
        for (auto y : g.class_members(c)) {
          product.set(g.multiply(x, y));
        }
      }
    }
    return product.count();
  }

  ScanReport epsilon_scan(GroupPtr const& group, EpsilonScanOptions const& options) {
    auto const* g = group->oracle();
    if (!g) {
      throw CapabilityError("epsilon_scan needs an oracle-backed group");
    }
    if (g->order() > options.order_limit) {
      throw CapabilityError("epsilon_scan: |G| = " + std::to_string(g->order())
                            + " exceeds the oracle limit "
                            + std::to_string(options.order_limit));
    }
    check_exponent(options.delta_hat, "delta_hat", false);
    ScanReport report;
    report.name       = "epsilon";
    report.group      = group_label(*group);
    report.parameters = {{"delta_hat", options.delta_hat.get_str()},
                         {"samples", options.samples},
                         {"seed", options.seed}};
    report.columns    = {"sample", "a_size", "min_ratio", "witness_b"};

    std::size_t const n     = g->order();
    std::size_t const k     = g->num_classes();
    mpz_class const   order(static_cast<unsigned long>(n));
    // largest a with a <= |G|^delta_hat
    std::size_t max_a = 1;
    while (max_a < n
           && !exceeds_power(mpz_class(static_cast<unsigned long>(max_a + 1)), order,
                             options.delta_hat)) {
      ++max_a;
    }

    // Every normal set when k is small, a seeded sample of unions otherwise.
    Rng                 rng(options.seed);
    std::vector<Bitset> normal_sets;
    if (k <= 12) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        Bitset b(k);
        for (std::size_t c = 0; c < k; ++c) {
          if (mask >> c & 1) {
            b.set(c);
          }
        }
        normal_sets.push_back(std::move(b));
      }
    } else {
      for (std::size_t i = 0; i < 4096; ++i) {
        Bitset b(k);
        while (b.none()) {
          for (std::size_t c = 0; c < k; ++c) {
            if (rng.coin()) {
              b.set(c);
            }
          }
        }
        normal_sets.push_back(std::move(b));
      }
    }
    std::vector<std::size_t> b_sizes;
    for (auto const& b : normal_sets) {
      std::size_t s = 0;
      for (auto c : b.members()) {
        s += g->class_size(c);
      }
      b_sizes.push_back(s);
    }

    auto label_set = [&](Bitset const& b) {
      std::string s;
      for (auto c : b.members()) {
        s += (s.empty() ? "" : " ") + group->class_label(c);
      }
      return s;
    };

    std::optional<double> global_min;
    std::string           global_b;
    std::size_t           global_sample = 0, excluded_trivial_b = 0;
    for (std::size_t s = 0; s < options.samples; ++s) {
      std::size_t a_size = rng.uniform(1, max_a);
      Bitset      a      = random_subset(rng, n, a_size);
      std::optional<double> best;
      std::size_t           best_b = 0;
      for (std::size_t i = 0; i < normal_sets.size(); ++i) {
        if (b_sizes[i] <= 1) {
          ++excluded_trivial_b;
          continue;
        }
        std::size_t ab    = subset_normal_product_size(*g, a, normal_sets[i]);
        double      ratio = std::log(double(ab) / double(a_size)) / std::log(double(b_sizes[i]));
        if (!best || ratio < *best) {
          best   = ratio;
          best_b = i;
        }
      }
      if (!best) {
        continue;
      }
      report.rows.push_back({std::to_string(s), std::to_string(a_size),
                             format_real(*best), label_set(normal_sets[best_b])});
      if (!global_min || *best < *global_min) {
        global_min    = best;
        global_b      = label_set(normal_sets[best_b]);
        global_sample = s;
      }
    }
    report.summary = {{"max_a_size", max_a},
                      {"normal_sets", normal_sets.size()},
                      {"excluded_trivial_b", excluded_trivial_b},
                      {"epsilon_hat", global_min ? nlohmann::json(format_real(*global_min))
                                                 : nlohmann::json(nullptr)},
                      {"witness_sample", global_sample},
                      {"witness_b", global_b}};
    return report;
  }

}  // namespace covering
