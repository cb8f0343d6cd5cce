// Command-line front end: one verb per process, one report per run.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "covering/analytics.hpp"
#include "covering/characters.hpp"
#include "covering/errors.hpp"
#include "covering/frobenius.hpp"
#include "covering/group.hpp"
#include "covering/oracle.hpp"
#include "covering/parallel.hpp"
#include "covering/reduction.hpp"
#include "covering/rodgers.hpp"

namespace {

  using namespace covering;
  using nlohmann::json;

  constexpr int exit_ok       = 0;
  constexpr int exit_negative = 1;
  constexpr int exit_error    = 2;

  struct Options {
    std::string              group;
    std::string              classes;
    std::vector<std::string> sets;
    std::string              class_id;
    std::string              alpha   = "1/2";
    std::string              epsilon = "1/2";
    std::string              delta   = "1/4";
    std::string              t       = "7/10";
    std::string              sizes;
    std::string              order;
    std::string              min_degree;
    std::uint64_t            seed        = 1;
    std::size_t              samples     = 0;
    std::size_t              repeat      = 1;
    std::size_t              max_r       = 8;
    std::size_t              cap         = 0;
    std::size_t              sequences   = 200;
    double                   mu          = 0.05;
    double                   band        = 0.05;
    std::string              out;
    std::string              format      = "json";
    unsigned                 threads     = 0;
    std::string              cache_dir;
    int                      table_cap   = default_table_cap;
  };

  // What a verb hands back: the parameters it used, its result and the
  // exit status the result implies.
  struct Outcome {
    std::string               group;
    json                      parameters = json::object();
    json                      result     = json::object();
    std::optional<ScanReport> scan;
    std::vector<std::string>  summary;
    int                       status = exit_ok;
  };

  mpq_class parse_rational(std::string const& text, char const* name) {
    std::string s = text;
    mpq_class   q;
    auto        dot = s.find('.');
    try {
      if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        mpz_class   den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
        q = mpq_class(mpz_class(digits.empty() ? "0" : digits), den);
      } else {
        q = mpq_class(s);
      }
    } catch (std::invalid_argument const&) {
      throw ArgumentError(std::string(name) + ": not a rational number: " + text);
    }
    q.canonicalize();
    return q;
  }

  std::vector<mpz_class> parse_integers(std::string const& text, char const* name) {
    std::vector<mpz_class> values;
    std::stringstream      in(text);
    std::string            item;
    while (std::getline(in, item, ',')) {
      item.erase(0, item.find_first_not_of(' '));
      item.erase(item.find_last_not_of(' ') + 1);
      try {
        values.emplace_back(item);
      } catch (std::invalid_argument const&) {
        throw ArgumentError(std::string(name) + ": not an integer: " + item);
      }
      if (values.back() < 0) {
        throw ArgumentError(std::string(name) + ": negative value " + item);
      }
    }
    if (values.empty()) {
      throw ArgumentError(std::string(name) + ": empty list");
    }
    return values;
  }

  json to_json_list(std::vector<mpz_class> const& values) {
    json out = json::array();
    for (auto const& v : values) {
      out.push_back(v.get_str());
    }
    return out;
  }

  GroupOptions group_options(Options const& o) {
    GroupOptions g;
    if (!o.cache_dir.empty()) {
      g.cache_dir = o.cache_dir;
    } else if (char const* env = std::getenv("COVERING_CACHE_DIR")) {
      g.cache_dir = env;
    }
    g.table_cap = o.table_cap;
    return g;
  }

  GroupPtr require_group(Options const& o) {
    if (o.group.empty()) {
      throw ArgumentError("--group is required");
    }
    return make_group(o.group, group_options(o));
  }

  // Oracle enumeration of a group for element-level validation.
  std::shared_ptr<PermGroup const> oracle_of(GroupPtr const& g, Options const& o) {
    if (g->oracle()) {
      return std::shared_ptr<PermGroup const>(g, g->oracle());
    }
    if (auto const& spec = g->natural()) {
      auto ctx = make_group("oracle:" + spec->to_string(), group_options(o));
      return std::shared_ptr<PermGroup const>(ctx, ctx->oracle());
    }
    throw CapabilityError("no oracle for " + g->description());
  }

  // Sequence of normal sets: each entry of --classes is a single class,
  // each --set is a union of classes.
  std::vector<NormalSet> parse_sets(GroupPtr const& g, Options const& o) {
    std::vector<NormalSet> sets;
    if (!o.classes.empty()) {
      for (auto const& label : split_class_list(o.classes)) {
        sets.emplace_back(g, std::vector<std::size_t>{g->parse_class(label)});
      }
    }
    for (auto const& s : o.sets) {
      sets.push_back(NormalSet::parse(g, s));
    }
    if (sets.empty()) {
      throw ArgumentError("give the sets with --classes or --set");
    }
    std::vector<NormalSet> repeated;
    for (std::size_t r = 0; r < std::max<std::size_t>(o.repeat, 1); ++r) {
      repeated.insert(repeated.end(), sets.begin(), sets.end());
    }
    return repeated;
  }

  json set_labels(std::vector<NormalSet> const& sets) {
    json out = json::array();
    for (auto const& s : sets) {
      out.push_back(s.labels());
    }
    return out;
  }

  // ---- verbs -------------------------------------------------------------

  Outcome run_table(Options const& o) {
    Outcome out;
    auto    g  = require_group(o);
    out.group  = g->description();
    auto const* table = g->table();
    if (!table) {
      throw CapabilityError(g->description() + " has no character table");
    }
    json classes = json::array();
    for (auto const& c : table->classes()) {
      classes.push_back({{"id", c.short_id()},
                         {"size", c.size.get_str()},
                         {"centralizer_order", c.centralizer_order.get_str()}});
    }
    json characters = json::array();
    json values     = json::array();
    for (std::size_t chi = 0; chi < table->num_irreducibles(); ++chi) {
      characters.push_back({{"label", table->irreducibles()[chi].to_string()},
                            {"degree", table->degrees()[chi].get_str()}});
      json row = json::array();
      for (std::size_t c = 0; c < table->num_classes(); ++c) {
        row.push_back(table->value(chi, c).to_string());
      }
      values.push_back(std::move(row));
    }
    out.result = {{"order", g->order().get_str()},
                  {"classes", classes},
                  {"characters", characters},
                  {"values", values}};
    out.summary.push_back(g->description() + ": " + std::to_string(table->num_classes())
                          + " classes, " + std::to_string(table->num_irreducibles())
                          + " irreducible characters");
    ScanReport csv;
    csv.columns = {"character", "class", "value"};
    for (std::size_t chi = 0; chi < table->num_irreducibles(); ++chi) {
      for (std::size_t c = 0; c < table->num_classes(); ++c) {
        csv.rows.push_back({table->irreducibles()[chi].to_string(),
                            table->classes()[c].short_id(),
                            table->value(chi, c).to_string()});
      }
    }
    out.scan = std::move(csv);
    return out;
  }

  Outcome run_cover(Options const& o) {
    Outcome out;
    auto    g    = require_group(o);
    out.group    = g->description();
    auto sets    = parse_sets(g, o);
    auto report  = covers_group(sets);
    out.parameters = {{"sets", set_labels(sets)}};
    out.result     = report.to_json(*g);
    out.result["backend"] = g->backend_name();
    out.status     = report.covered ? exit_ok : exit_negative;
    out.summary.push_back(std::string(report.covered ? "covered" : "not covered") + " after "
                          + std::to_string(report.steps) + " product steps; "
                          + std::to_string(report.missing.count()) + " classes missing");
    return out;
  }

  Outcome run_diameter(Options const& o) {
    Outcome out;
    auto    g   = require_group(o);
    out.group   = g->description();
    auto sets   = parse_sets(g, o);
    if (sets.size() != 1) {
      throw ArgumentError("diameter takes one normal set: use --set");
    }
    auto const& s   = sets.front();
    std::size_t cap = o.cap ? o.cap : power_diameter_cap(s);
    std::size_t k   = power_diameter(s, cap);
    double      ratio = std::log(g->order().get_d()) / std::log(s.size().get_d());
    out.parameters = {{"set", s.labels()}, {"cap", cap}};
    out.result     = {{"diameter", k},
                      {"set_size", s.size().get_str()},
                      {"log_ratio", format_real(ratio)},
                      {"empirical_constant", format_real(double(k) / ratio)}};
    out.summary.push_back("S^" + std::to_string(k) + " = G (cap " + std::to_string(cap) + ")");
    return out;
  }

  Outcome run_delta(Options const& o) {
    Outcome out;
    auto    g = require_group(o);
    out.group = g->description();
    if (o.class_id.empty()) {
      throw ArgumentError("--class is required");
    }
    auto const& d     = g->descriptor(g->parse_class(o.class_id));
    auto        delta = delta_of_class(d);
    auto        bound = size_bound_check(d);
    out.parameters = {{"class", d.id()}};
    out.result     = {{"delta", delta.delta},
                      {"orbits", delta.orbits},
                      {"n", delta.n},
                      {"class_size", bound.class_size.get_str()},
                      {"size_bound", bound.bound.get_str()},
                      {"size_bound_holds", bound.holds}};
    out.status = bound.holds ? exit_ok : exit_negative;
    out.summary.push_back("delta(" + d.id() + ") = " + std::to_string(delta.delta));
    return out;
  }

  std::vector<ClassDescriptor> parse_descriptors(GroupPtr const& g, Options const& o) {
    if (o.classes.empty()) {
      throw ArgumentError("--classes is required");
    }
    std::vector<ClassDescriptor> classes;
    for (auto const& label : split_class_list(o.classes)) {
      classes.push_back(g->descriptor(g->parse_class(label)));
    }
    return classes;
  }

  Outcome run_rodgers(Options const& o) {
    Outcome out;
    auto    g       = require_group(o);
    out.group       = g->description();
    auto    classes = parse_descriptors(g, o);
    auto    check   = rodgers_verify(g, classes);
    json    ids     = json::array();
    for (auto const& c : classes) {
      ids.push_back(c.id());
    }
    out.parameters = {{"classes", ids}};
    out.result     = {{"criterion", check.criterion},
                      {"delta_sum", check.delta_sum},
                      {"threshold", check.threshold},
                      {"covered", check.covered}};
    if (check.criterion && !check.covered) {
      throw InternalError("criterion holds but the product does not cover");
    }
    out.status = check.criterion && check.covered ? exit_ok : exit_negative;
    out.summary.push_back("sum of delta " + std::to_string(check.delta_sum)
                          + (check.criterion ? " > " : " <= ") + std::to_string(check.threshold)
                          + "; product " + (check.covered ? "covers" : "does not cover"));
    return out;
  }

  Outcome run_witness(Options const& o) {
    Outcome out;
    auto    g       = require_group(o);
    out.group       = g->description();
    auto    classes = parse_descriptors(g, o);
    if (classes.size() != 2) {
      throw ArgumentError("witness takes exactly two classes");
    }
    auto w = pair_product_witness(classes[0], classes[1]);
    out.parameters = {{"classes", {classes[0].id(), classes[1].id()}}};
    out.result     = {{"x", w.x.to_string()},
                      {"y", w.y.to_string()},
                      {"y_prime", w.y_prime.to_string()},
                      {"product", w.xy_prime.to_string()},
                      {"product_class", w.product_class.id()},
                      {"fixed_points", w.fixed_points_of_product},
                      {"delta", w.product_delta.delta},
                      {"orbits", w.product_delta.orbits},
                      {"fixes_1_and_3", w.fixes_1_and_3},
                      {"orbit_bound_holds", w.orbit_bound_holds},
                      {"sym_stable", w.sym_stable},
                      {"delta_bound_holds", w.delta_bound_holds}};
    out.status = w.ok() ? exit_ok : exit_negative;
    out.summary.push_back("xy' = " + w.xy_prime.to_string() + " in " + w.product_class.id()
                          + (w.ok() ? "; all checks hold" : "; a check fails"));
    return out;
  }

  Outcome run_blocks(Options const& o) {
    Outcome   out;
    mpz_class order;
    if (!o.order.empty()) {
      order = parse_integers(o.order, "--order").front();
    } else {
      auto g    = require_group(o);
      out.group = g->description();
      order     = g->order();
    }
    if (o.sizes.empty()) {
      throw ArgumentError("--sizes is required");
    }
    auto sizes   = parse_integers(o.sizes, "--sizes");
    auto epsilon = parse_rational(o.epsilon, "--epsilon");
    auto plan    = greedy_blocks(sizes, order, epsilon);
    out.parameters = {{"sizes", to_json_list(sizes)},
                      {"group_order", order.get_str()},
                      {"epsilon", epsilon.get_str()}};
    out.result = plan.to_json();
    out.result["block_products"] = to_json_list(plan.block_products);
    out.result["tail_product"]   = plan.tail_product.get_str();
    out.summary.push_back(std::to_string(plan.blocks.size()) + " blocks"
                          + (plan.tail ? ", tail present" : ", no tail"));
    return out;
  }

  Outcome run_pipeline(Options const& o) {
    Outcome out;
    auto    g       = require_group(o);
    out.group       = g->description();
    auto    sets    = parse_sets(g, o);
    auto    delta   = parse_rational(o.delta, "--delta");
    auto    epsilon = parse_rational(o.epsilon, "--epsilon");
    auto    result  = conjecture_pipeline(sets, delta, epsilon);
    out.parameters = {{"sets", set_labels(sets)},
                      {"delta", delta.get_str()},
                      {"epsilon", epsilon.get_str()}};
    out.result = result.to_json(*g);
    out.status = result.report.covered ? exit_ok : exit_negative;
    out.summary.push_back(std::to_string(result.blocks.size()) + " blocks; "
                          + (result.report.covered ? "covered" : "not covered")
                          + (result.note.empty() ? "" : " (" + result.note + ")"));
    return out;
  }

  Outcome run_zeta(Options const& o) {
    Outcome                out;
    auto                   t = parse_rational(o.t, "--t");
    std::vector<mpz_class> degrees;
    std::optional<GroupSpec> spec;
    try {
      spec = parse_group_spec(o.group);
    } catch (ParseError const&) {
    }
    if (spec) {
      degrees   = irreducible_degrees(*spec);
      out.group = spec->to_string();
    } else {
      auto g    = require_group(o);
      out.group = g->description();
      if (!g->table()) {
        throw CapabilityError(g->description() + " has no irreducible degrees");
      }
      degrees = g->table()->degrees();
    }
    auto z = zeta_value(degrees, t);
    out.parameters = {{"t", t.get_str()}};
    out.result     = {{"lower", z.lower.get_str()},
                      {"upper", z.upper.get_str()},
                      {"exact", z.exact},
                      {"precision_bits", z.precision_bits},
                      {"value", z.to_string()},
                      {"value_minus_one", ZetaValue{z.lower - 1, z.upper - 1, z.exact}.to_string()},
                      {"irreducibles", degrees.size()}};
    out.summary.push_back("zeta(" + t.get_str() + ") = " + z.to_string());
    return out;
  }

  mpz_class min_degree_for(GroupPtr const& g, Options const& o) {
    if (!o.min_degree.empty()) {
      return parse_integers(o.min_degree, "--m").front();
    }
    if (g->table()) {
      return g->min_nontrivial_degree();
    }
    if (auto const& spec = g->natural()) {
      return make_group(spec->to_string(), group_options(o))->min_nontrivial_degree();
    }
    throw CapabilityError("give the minimal degree of " + g->description() + " with --m");
  }

  Outcome run_gowers(Options const& o) {
    Outcome out;
    auto    g = require_group(o);
    out.group = g->description();
    auto    m = min_degree_for(g, o);
    out.parameters = {{"min_degree", m.get_str()}, {"samples", o.samples}, {"seed", o.seed}};
    bool ok = true;
    if (!o.sizes.empty()) {
      auto sizes = parse_integers(o.sizes, "--sizes");
      if (sizes.size() != 3) {
        throw ArgumentError("--sizes takes three sizes");
      }
      bool holds = gowers_check(g->order(), m, sizes[0], sizes[1], sizes[2]);
      out.parameters["sizes"]  = to_json_list(sizes);
      out.result["hypothesis"] = holds;
      ok = ok && holds;
      out.summary.push_back(std::string("|A||B||C| >= |G|^3/m: ") + (holds ? "true" : "false"));
    }
    if (o.samples) {
      auto v = gowers_validation(*oracle_of(g, o), m, o.samples, o.seed);
      out.result["validation"] = {{"samples", v.samples},
                                  {"confirmed", v.confirmed},
                                  {"counterexamples", v.counterexamples},
                                  {"seed", v.seed}};
      ok = ok && v.counterexamples == 0;
      out.summary.push_back(std::to_string(v.confirmed) + "/" + std::to_string(v.samples)
                            + " sampled triples satisfy ABC = G");
    }
    if (o.sizes.empty() && !o.samples) {
      throw ArgumentError("give --sizes, --samples or both");
    }
    out.status = ok ? exit_ok : exit_negative;
    return out;
  }

  Outcome run_jacobson(Options const& o) {
    Outcome out;
    auto    g = require_group(o);
    out.group = g->description();
    out.parameters = {{"samples", o.samples}, {"seed", o.seed}};
    bool ok = true;
    if (!o.sizes.empty()) {
      auto sizes = parse_integers(o.sizes, "--sizes");
      if (sizes.size() != 2) {
        throw ArgumentError("--sizes takes two sizes");
      }
      bool holds = jacobson_check(sizes[0], sizes[1], g->order());
      out.parameters["sizes"]  = to_json_list(sizes);
      out.result["hypothesis"] = holds;
      ok = ok && holds;
      out.summary.push_back(std::string("|A| + |B| > |G|: ") + (holds ? "true" : "false"));
    }
    if (o.samples) {
      auto v = jacobson_validation(*oracle_of(g, o), o.samples, o.seed);
      out.result["validation"] = {{"samples", v.samples},
                                  {"confirmed", v.confirmed},
                                  {"counterexamples", v.counterexamples},
                                  {"seed", v.seed}};
      ok = ok && v.counterexamples == 0;
      out.summary.push_back(std::to_string(v.confirmed) + "/" + std::to_string(v.samples)
                            + " sampled pairs satisfy AB = G");
    }
    if (o.sizes.empty() && !o.samples) {
      throw ArgumentError("give --sizes, --samples or both");
    }
    out.status = ok ? exit_ok : exit_negative;
    return out;
  }

  Outcome run_kbound(Options const& o) {
    Outcome         out;
    ClassCountCheck check;
    if (o.group.rfind("psl:2:", 0) == 0) {
      auto g    = require_group(o);
      out.group = g->description();
      int  q    = std::stoi(o.group.substr(6));
      check     = classical_class_count_check(*g, 2, q);
      out.parameters = {{"dimension", 2}, {"q", q}};
    } else {
      auto spec = parse_group_spec(o.group);
      if (spec.family != Family::Alt) {
        throw ArgumentError("kbound takes alt:N or psl:2:Q");
      }
      out.group = spec.to_string();
      check     = alt_class_count_check(spec.n);
    }
    out.result = {{"class_count", check.class_count.get_str()},
                  {"bound", check.bound.get_str()},
                  {"holds", check.holds}};
    if (check.min_exponent) {
      out.result["min_exponent"]  = *check.min_exponent;
      out.result["real_exponent"] = format_real(*check.real_exponent);
    }
    out.status = check.holds ? exit_ok : exit_negative;
    out.summary.push_back("k = " + check.class_count.get_str() + " <= "
                          + check.bound.get_str() + ": " + (check.holds ? "true" : "false"));
    return out;
  }

  Outcome run_thompson(Options const& o) {
    Outcome out;
    auto    g = require_group(o);
    out.group = g->description();
    auto    c = thompson_search(g);
    if (c) {
      out.result = {{"witness", g->class_label(*c)}, {"class_size", g->class_size(*c).get_str()}};
      out.summary.push_back("C^2 = G for C = " + g->class_label(*c));
    } else {
      out.result = {{"witness", nullptr}};
      out.status = exit_negative;
      out.summary.push_back("no class C with C^2 = G");
    }
    return out;
  }

  Outcome from_scan(ScanReport scan) {
    Outcome out;
    out.group      = scan.group;
    out.parameters = scan.parameters;
    out.result     = scan.to_json();
    out.summary.push_back(scan.name + " scan: " + std::to_string(scan.rows.size())
                          + " records; summary " + scan.summary.dump());
    out.scan = std::move(scan);
    return out;
  }

  Outcome run_scan_r(Options const& o) {
    MinRScanOptions opts;
    opts.max_r = o.max_r;
    opts.seed  = o.seed;
    if (o.samples) {
      opts.samples = o.samples;
    }
    return from_scan(min_r_scan(require_group(o), parse_rational(o.alpha, "--alpha"), opts));
  }

  Outcome run_scan_glt(Options const& o) {
    GltScanOptions opts;
    opts.centralizer_exponent = o.mu;
    opts.band_width           = o.band;
    return from_scan(glt_scan(require_group(o), opts));
  }

  Outcome run_scan_eps(Options const& o) {
    auto               g = require_group(o);
    EpsilonScanOptions opts;
    opts.delta_hat = parse_rational(o.delta, "--delta");
    opts.seed      = o.seed;
    if (o.samples) {
      opts.samples = o.samples;
    }
    auto scan = epsilon_scan(g, opts);
    if (!scan.summary["epsilon_hat"].is_null()) {
      double eps_hat = std::stod(scan.summary["epsilon_hat"].get<std::string>());
      auto   audit   = lemma_l1_audit(g, opts.delta_hat, eps_hat, o.sequences, 4, o.seed);
      scan.summary["l1_audit"] = {{"sequences", audit.sequences},
                                  {"checks", audit.checks},
                                  {"violations", audit.violations},
                                  {"seed", audit.seed}};
    }
    return from_scan(std::move(scan));
  }

  Outcome run_oracle_check(Options const& o) {
    Outcome out;
    auto    spec_text = o.group;
    if (spec_text.rfind("oracle:", 0) == 0) {
      spec_text = spec_text.substr(7);
    }
    std::size_t pairs = 0, mismatches = 0;
    json        first = nullptr;
    if (spec_text.rfind("sym:", 0) == 0 || spec_text.rfind("alt:", 0) == 0) {
      auto table  = make_group(spec_text, group_options(o));
      auto oracle = make_group("oracle:" + spec_text, group_options(o));
      out.group   = table->description();
      auto map    = match_classes(*oracle, *table);
      std::size_t k = oracle->num_classes();
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          auto const& brute  = oracle->pair_support(i, j);
          auto const& engine = table->pair_support(map[i], map[j]);
          ++pairs;
          bool same = true;
          for (std::size_t c = 0; c < k; ++c) {
            same = same && brute.test(c) == engine.test(map[c]);
          }
          if (!same) {
            if (mismatches++ == 0) {
              first = {oracle->class_label(i), oracle->class_label(j)};
            }
          }
        }
      }
      out.result["comparison"] = "character engine against brute force";
    } else {
      // Oracle-only groups: associativity of support products.
      auto g    = require_group(o);
      out.group = g->description();
      std::size_t k = g->num_classes();
      auto fold = [&](ClassSet const& s, std::size_t c, bool left) {
        ClassSet r = g->empty_set();
        for (auto a : s.members()) {
          r |= left ? g->pair_support(a, c) : g->pair_support(c, a);
        }
        return r;
      };
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          for (std::size_t c = 0; c < k; ++c) {
            ++pairs;
            if (!(fold(g->pair_support(a, b), c, true) == fold(g->pair_support(b, c), a, false))) {
              if (mismatches++ == 0) {
                first = {g->class_label(a), g->class_label(b), g->class_label(c)};
              }
            }
          }
        }
      }
      out.result["comparison"] = "associativity of class support products";
    }
    out.result["compared"]       = pairs;
    out.result["mismatches"]     = mismatches;
    out.result["first_mismatch"] = first;
    out.status = mismatches ? exit_negative : exit_ok;
    out.summary.push_back(std::to_string(pairs) + " compared, " + std::to_string(mismatches)
                          + " mismatches");
    return out;
  }

  // ---- output ------------------------------------------------------------

  std::string csv_cell(json const& v) {
    if (v.is_string()) {
      return v.get<std::string>();
    }
    return v.dump();
  }

  std::string render(std::string const& verb, Outcome const& out, Options const& o) {
    if (o.format == "csv") {
      if (out.scan) {
        return out.scan->to_csv();
      }
      ScanReport flat;
      flat.columns = {"key", "value"};
      for (auto const& [key, value] : out.result.items()) {
        flat.rows.push_back({key, csv_cell(value)});
      }
      return flat.to_csv();
    }
    json report = {{"tool", "covering"},
                   {"version", COVERING_VERSION},
                   {"command", verb},
                   {"group", out.group},
                   {"parameters", out.parameters},
                   {"result", out.result}};
    return report.dump(2) + "\n";
  }

}  // namespace

int main(int argc, char** argv) {
  Options  o;
  CLI::App app{"Coverage of finite groups by products of conjugacy classes", "covering"};
  app.set_version_flag("--version", COVERING_VERSION);
  app.require_subcommand(1);
  app.add_option("--out", o.out, "Write the report to this file");
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", o.threads, "Cap on worker threads (0: hardware)");
  app.add_option("--cache-dir", o.cache_dir,
                 "Directory for cached tables and enumerations (default: $COVERING_CACHE_DIR)");
  app.add_option("--table-cap", o.table_cap, "Largest n for full character tables");
  app.fallthrough();

  // Repeatable string option; CLI11 would read "[2,2,1]" as a list of three
  // values if it were bound to a vector directly.
  auto add_sets = [&](CLI::App* sub, char const* help) {
    sub->add_option_function<std::string>(
           "--set", [&](std::string const& s) { o.sets.push_back(s); }, help)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->trigger_on_parse();
  };

  using Runner = Outcome (*)(Options const&);
  std::vector<std::pair<CLI::App*, Runner>> verbs;
  auto verb = [&](char const* name, char const* help, Runner run) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--group", o.group, "sym:N, alt:N, oracle:alt:N, psl:2:Q or file:PATH");
    verbs.emplace_back(sub, run);
    return sub;
  };

  verb("table", "Print the character table", run_table);
  auto* cover = verb("cover", "Decide whether a product of normal sets is the group", run_cover);
  cover->add_option("--classes", o.classes, "Comma separated classes, one set each");
  add_sets(cover, "A normal set given as comma separated classes");
  cover->add_option("--repeat", o.repeat, "Repeat the sequence of sets");
  auto* diameter = verb("diameter", "Least k with S^k = G", run_diameter);
  add_sets(diameter, "The normal set");
  diameter->add_option("--cap", o.cap, "Iteration cap (default 4m + 8)");
  auto* delta = verb("delta", "delta(C) and the size bound |C| <= n^(2 delta)", run_delta);
  delta->add_option("--class", o.class_id, "Class id such as [2,2,1]")->required();
  auto* rodgers = verb("rodgers", "Sum of delta criterion for Alt(n)", run_rodgers);
  rodgers->add_option("--classes", o.classes, "Comma separated Alt(n) classes")->required();
  auto* witness = verb("witness", "Two fixed point witness for a pair of classes", run_witness);
  witness->add_option("--classes", o.classes, "Two classes of distinct odd type")->required();
  auto* blocks = verb("blocks", "Greedy blocking of set sizes", run_blocks);
  blocks->add_option("--sizes", o.sizes, "Comma separated set sizes")->required();
  blocks->add_option("--order", o.order, "Group order (instead of --group)");
  blocks->add_option("--epsilon", o.epsilon, "Exponent epsilon in (0, 1]");
  auto* pipeline = verb("pipeline", "Blocks, block supports and coverage", run_pipeline);
  pipeline->add_option("--classes", o.classes, "Comma separated classes, one set each");
  add_sets(pipeline, "A normal set given as comma separated classes");
  pipeline->add_option("--repeat", o.repeat, "Repeat the sequence of sets");
  pipeline->add_option("--delta", o.delta, "Exponent delta for block sizes");
  pipeline->add_option("--epsilon", o.epsilon, "Exponent epsilon in (0, 1]");
  auto* zeta = verb("zeta", "Sum of chi(1)^-t over irreducible characters", run_zeta);
  zeta->add_option("--t", o.t, "Exponent t (rational)");
  auto* gowers = verb("gowers", "|A||B||C| >= |G|^3/m and sampled validation", run_gowers);
  gowers->add_option("--sizes", o.sizes, "Three sizes a,b,c");
  gowers->add_option("--samples", o.samples, "Random subset triples to validate");
  gowers->add_option("--seed", o.seed, "Random seed");
  gowers->add_option("--m", o.min_degree, "Smallest non-trivial degree");
  auto* jacobson = verb("jacobson", "|A| + |B| > |G| and sampled validation", run_jacobson);
  jacobson->add_option("--sizes", o.sizes, "Two sizes a,b");
  jacobson->add_option("--samples", o.samples, "Random subset pairs to validate");
  jacobson->add_option("--seed", o.seed, "Random seed");
  verb("kbound", "Class number against its bound", run_kbound);
  verb("thompson", "Smallest class C with C^2 = G", run_thompson);
  auto* scan_r = verb("scan-r", "Worst-case number of large classes needed", run_scan_r);
  scan_r->add_option("--alpha", o.alpha, "Classes of size at least |G|^alpha");
  scan_r->add_option("--max-r", o.max_r, "Largest r tried");
  scan_r->add_option("--samples", o.samples, "Samples per r when not exhaustive");
  scan_r->add_option("--seed", o.seed, "Random seed");
  auto* scan_glt = verb("scan-glt", "Character ratios against centralizer sizes", run_scan_glt);
  scan_glt->add_option("--mu", o.mu, "Centralizer exponent for the summary");
  scan_glt->add_option("--band", o.band, "Centralizer band width");
  auto* scan_eps = verb("scan-eps", "Empirical growth exponent of |AB| / |A|", run_scan_eps);
  scan_eps->add_option("--delta", o.delta, "Sampled A satisfy |A| <= |G|^delta");
  scan_eps->add_option("--samples", o.samples, "Sampled sets A");
  scan_eps->add_option("--sequences", o.sequences, "Sequences for the product audit");
  scan_eps->add_option("--seed", o.seed, "Random seed");
  verb("oracle-check", "Compare class products with brute force", run_oracle_check);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_error;
  }
  if (o.threads) {
    set_max_threads(o.threads);
  }

  for (auto const& [sub, run] : verbs) {
    if (!sub->parsed()) {
      continue;
    }
    std::string name = sub->get_name();
    try {
      Outcome     out  = run(o);
      std::string text = render(name, out, o);
      if (o.out.empty()) {
        std::cout << text;
        for (auto const& line : out.summary) {
          std::cerr << line << '\n';
        }
      } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!(file << text)) {
          throw ResourceError("cannot write " + o.out);
        }
        for (auto const& line : out.summary) {
          std::cout << line << '\n';
        }
        std::cout << "report written to " << o.out << '\n';
      }
      return out.status;
    } catch (std::exception const& e) {
      std::cerr << "covering " << name << ": " << e.what() << '\n';
    }
    return exit_error;
  }
  return exit_error;
}
