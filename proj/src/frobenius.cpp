#include "covering/frobenius.hpp"

#include "covering/errors.hpp"

namespace covering {

  mpq_class frobenius_sum(CharacterTable const& table,
                          std::size_t           c1,
                          std::size_t           c2,
                          std::size_t           c3) {
    std::size_t k = table.num_classes();
    if (c1 >= k || c2 >= k || c3 >= k) {
      throw ArgumentError("frobenius_sum: class index out of range");
    }
    std::size_t inv3 = table.inverse_class_index(c3);
    mpq_class   rational = 0;
    RadicalSum  irrational;
    mpq_class   term;
    for (std::size_t chi = 0; chi < table.num_irreducibles(); ++chi) {
      auto const& v1 = table.value(chi, c1);
      auto const& v2 = table.value(chi, c2);
      auto const& v3 = table.value(chi, inv3);
      if (v1.is_zero() || v2.is_zero() || v3.is_zero()) {
        continue;
      }
      auto const& degree = table.degrees()[chi];
      if (v1.is_rational() && v2.is_rational() && v3.is_rational()) {
        mpz_class num = v1.a() * v2.a() * v3.a();
        mpz_class den = degree * (v1.den() * v2.den() * v3.den());
        term          = mpq_class(num, den);
        term.canonicalize();
        rational += term;
      } else {
        RadicalSum product =
            v1.to_radical_sum() * v2.to_radical_sum() * v3.to_radical_sum();
        product *= mpq_class(1, degree);
        irrational += product;
      }
    }
    irrational += RadicalSum(rational);
    if (!irrational.is_rational()) {
      throw InternalError("Frobenius sum for classes "
                          + table.classes()[c1].id() + ", "
                          + table.classes()[c2].id() + ", "
                          + table.classes()[c3].id()
                          + " left an irrational residue " + irrational.to_string());
    }
    mpq_class total = irrational.rational_part();
    if (total < 0) {
      throw InternalError("negative Frobenius sum " + total.get_str());
    }
    return total;
  }

  mpq_class frobenius_sum(CharacterTable const&  table,
                          ClassDescriptor const& c1,
                          ClassDescriptor const& c2,
                          ClassDescriptor const& c3) {
    return frobenius_sum(table,
                         table.class_index(c1),
                         table.class_index(c2),
                         table.class_index(c3));
  }

  bool class_in_product(CharacterTable const& table,
                        std::size_t           c1,
                        std::size_t           c2,
                        std::size_t           c3) {
    return frobenius_sum(table, c1, c2, c3) != 0;
  }

  NormalSet::NormalSet(GroupPtr group, ClassSet classes)
      : _group(std::move(group)), _classes(std::move(classes)) {
    if (!_group) {
      throw ArgumentError("normal set without a group");
    }
    if (_classes.size() != _group->num_classes()) {
      throw ArgumentError("class set size does not match the group");
    }
    if (_classes.none()) {
      throw ArgumentError("normal set must be non-empty");
    }
  }

  namespace {
    ClassSet to_class_set(GroupContext const& g, std::vector<std::size_t> const& cs) {
      ClassSet s(g.num_classes());
      for (auto c : cs) {
        if (c >= g.num_classes()) {
          throw ArgumentError("class index " + std::to_string(c) + " out of range");
        }
        s.set(c);
      }
      return s;
    }
  }  // namespace

  NormalSet::NormalSet(GroupPtr group, std::vector<std::size_t> const& classes)
      : NormalSet(group, to_class_set(*group, classes)) {}

  NormalSet NormalSet::whole(GroupPtr group) {
    auto s = group->full_set();
    return NormalSet(std::move(group), std::move(s));
  }

  NormalSet NormalSet::identity(GroupPtr group) {
    auto s = group->empty_set();
    s.set(group->identity_class());
    return NormalSet(std::move(group), std::move(s));
  }

  std::vector<std::string> split_class_list(std::string_view text) {
    std::vector<std::string> out;
    std::string              current;
    int                      depth = 0;
    for (char ch : text) {
      if (ch == '[') {
        ++depth;
      } else if (ch == ']') {
        --depth;
      }
      if (ch == ',' && depth == 0) {
        out.push_back(current);
        current.clear();
      } else if (ch != ' ') {
        current += ch;
      }
    }
    if (!current.empty() || !out.empty()) {
      out.push_back(current);
    }
    return out;
  }

  NormalSet NormalSet::parse(GroupPtr group, std::string_view text) {
    auto     items = split_class_list(text);
    ClassSet s     = group->empty_set();
    for (auto const& item : items) {
      if (item == "all") {
        s.set_all();
        continue;
      }
      s.set(group->parse_class(item));
    }
    return NormalSet(std::move(group), std::move(s));
  }

  mpz_class NormalSet::size() const {
    mpz_class total = 0;
    for (auto c : _classes.members()) {
      total += _group->class_size(c);
    }
    return total;
  }

  std::vector<std::string> NormalSet::labels() const {
    std::vector<std::string> out;
    for (auto c : _classes.members()) {
      out.push_back(_group->class_label(c));
    }
    return out;
  }

  nlohmann::json CoverageReport::to_json(GroupContext const& group) const {
    auto labels = [&](ClassSet const& s) {
      nlohmann::json arr = nlohmann::json::array();
      for (auto c : s.members()) {
        arr.push_back(group.class_label(c));
      }
      return arr;
    };
    return {{"covered", covered},
            {"support", labels(support)},
            {"missing", labels(missing)},
            {"steps", steps}};
  }

  NormalSet product_support(NormalSet const& s1, NormalSet const& s2) {
    if (s1.group() != s2.group()) {
      throw ArgumentError("product_support: normal sets live in different groups");
    }
    auto const& g      = *s1.group();
    ClassSet    result = g.empty_set();
    auto        right  = s2.classes().members();
    for (auto i : s1.classes().members()) {
      for (auto j : right) {
        result |= g.pair_support(i, j);
        if (result.all()) {
          return NormalSet(s1.group(), std::move(result));
        }
      }
    }
    return NormalSet(s1.group(), std::move(result));
  }

  CoverageReport covers_group(std::span<NormalSet const> sets) {
    if (sets.empty()) {
      throw ArgumentError("covers_group needs at least one normal set");
    }
    for (auto const& s : sets) {
      if (s.group() != sets.front().group()) {
        throw ArgumentError("covers_group: normal sets live in different groups");
      }
    }
    CoverageReport report;
    NormalSet      acc = sets.front();
    for (std::size_t i = 1; i < sets.size(); ++i) {
      acc = product_support(acc, sets[i]);
      ++report.steps;
    }
    report.support = acc.classes();
    report.missing = ~acc.classes();
    report.covered = report.missing.none();
    return report;
  }

  std::size_t power_diameter_cap(NormalSet const& s) {
    mpz_class size  = s.size();
    auto const& order = s.group()->order();
    if (size <= 1) {
      throw ArgumentError("power_diameter needs a non-trivial normal set");
    }
    // ceil(log|G| / log|S|) = least m with |S|^m >= |G|
    std::size_t m = 1;
    mpz_class   pw = size;
    while (pw < order) {
      pw *= size;
      ++m;
    }
    return 4 * m + 8;
  }

  std::size_t power_diameter(NormalSet const& s, std::optional<std::size_t> cap) {
    bool trivial = s.classes().count() == 1 && s.contains(s.group()->identity_class());
    if (trivial) {
      throw ArgumentError("power_diameter needs a non-trivial normal set");
    }
    std::size_t limit = cap ? *cap : power_diameter_cap(s);
    NormalSet   power = s;
    std::size_t k     = 1;
    while (!power.is_whole_group()) {
      if (k >= limit) {
        throw ResourceError("power_diameter: S^k != G for all k <= "
                            + std::to_string(limit));
      }
      power = product_support(power, s);
      ++k;
    }
    return k;
  }

}  // namespace covering
