#include "covering/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "covering/errors.hpp"

namespace covering {

  Partition::Partition(std::vector<int> parts) : _parts(std::move(parts)) {
    for (std::size_t i = 0; i < _parts.size(); ++i) {
      if (_parts[i] < 1) {
        throw ArgumentError("partition parts must be positive");
      }
      if (i > 0 && _parts[i] > _parts[i - 1]) {
        throw ArgumentError("partition parts must be non-increasing");
      }
    }
    _n = std::accumulate(_parts.begin(), _parts.end(), 0);
  }

  Partition Partition::transpose() const {
    std::vector<int> result;
    if (!_parts.empty()) {
      result.resize(_parts.front(), 0);
      for (int p : _parts) {
        for (int j = 0; j < p; ++j) {
          ++result[j];
        }
      }
    }
    return Partition(std::move(result));
  }

  bool Partition::distinct_odd_parts() const noexcept {
    for (std::size_t i = 0; i < _parts.size(); ++i) {
      if (_parts[i] % 2 == 0 || (i > 0 && _parts[i] == _parts[i - 1])) {
        return false;
      }
    }
    return true;
  }

  std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(_n + 1, 0);
    for (int p : _parts) {
      ++m[p];
    }
    return m;
  }

  std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < _parts.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(_parts[i]);
    }
    return out;
  }

  namespace {
    int parse_int(std::string_view text, std::size_t& pos, std::size_t base) {
      int  value = 0;
      auto first = text.data() + pos;
      auto last  = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr == first) {
        throw ParseError("expected an integer", base + pos);
      }
      pos += static_cast<std::size_t>(ptr - first);
      return value;
    }

    std::vector<int> parse_int_list(std::string_view text,
                                    std::size_t&     pos,
                                    std::size_t      base) {
      std::vector<int> parts;
      while (true) {
        std::size_t at = pos;
        int         v  = parse_int(text, pos, base);
        if (v < 1) {
          throw ParseError("part must be positive", base + at);
        }
        if (!parts.empty() && v > parts.back()) {
          throw ParseError("parts must be non-increasing", base + at);
        }
        parts.push_back(v);
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        break;
      }
      return parts;
    }
  }  // namespace

  Partition Partition::parse(std::string_view text) {
    if (text.empty()) {
      throw ParseError("empty partition", 0);
    }
    std::size_t pos = 0;
    if (!text.empty() && text.front() == '[') {
      ++pos;
    }
    auto parts = parse_int_list(text, pos, 0);
    if (text.front() == '[') {
      if (pos >= text.size() || text[pos] != ']') {
        throw ParseError("expected ']'", pos);
      }
      ++pos;
    }
    if (pos != text.size()) {
      throw ParseError("trailing characters after partition", pos);
    }
    return Partition(std::move(parts));
  }

  std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1) {
      throw ArgumentError("enumerate_partitions: n must be positive");
    }
    std::vector<Partition> result;
    // Standard successor for reverse-lexicographic order.
    std::vector<int> a{n};
    while (true) {
      result.emplace_back(a);
      int rem = 0;
      while (!a.empty() && a.back() == 1) {
        a.pop_back();
        ++rem;
      }
      if (a.empty()) {
        break;
      }
      int k = --a.back();
      ++rem;
      while (rem > k) {
        a.push_back(k);
        rem -= k;
      }
      if (rem > 0) {
        a.push_back(rem);
      }
    }
    return result;
  }

  mpz_class partition_count(int n) {
    if (n < 0) {
      return 0;
    }
    std::vector<mpz_class> p(n + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
      mpz_class s = 0;
      for (int k = 1;; ++k) {
        int g1 = k * (3 * k - 1) / 2;
        int g2 = k * (3 * k + 1) / 2;
        if (g1 > m) {
          break;
        }
        mpz_class term = p[m - g1];
        if (g2 <= m) {
          term += p[m - g2];
        }
        if (k % 2 == 1) {
          s += term;
        } else {
          s -= term;
        }
      }
      p[m] = s;
    }
    return p[n];
  }

  mpz_class GroupSpec::order() const {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    if (family == Family::Alt && n >= 2) {
      f /= 2;
    }
    return f;
  }

  std::string GroupSpec::to_string() const {
    return (family == Family::Sym ? "sym:" : "alt:") + std::to_string(n);
  }

  std::string ClassDescriptor::short_id() const {
    std::string out = "[" + cycle_type.to_string() + "]";
    if (split == Split::Plus) {
      out += ":+";
    } else if (split == Split::Minus) {
      out += ":-";
    }
    return out;
  }

  std::string ClassDescriptor::id() const {
    return group.to_string() + ":" + short_id();
  }

  mpz_class sym_centralizer_order(Partition const& p) {
    mpz_class result = 1;
    auto      m      = p.multiplicities();
    for (std::size_t k = 1; k < m.size(); ++k) {
      if (m[k] == 0) {
        continue;
      }
      mpz_class pw, f;
      mpz_ui_pow_ui(pw.get_mpz_t(), k, m[k]);
      mpz_fac_ui(f.get_mpz_t(), m[k]);
      result *= pw * f;
    }
    return result;
  }

  ClassDescriptor describe_class(GroupSpec            group,
                                 Partition const&     cycle_type,
                                 std::optional<Split> split_choice) {
    if (cycle_type.n() != group.n) {
      throw ArgumentError("cycle type " + cycle_type.to_string()
                          + " is not a partition of " + std::to_string(group.n));
    }
    ClassDescriptor c;
    c.group      = group;
    c.cycle_type = cycle_type;
    c.even       = cycle_type.even();
    mpz_class cent = sym_centralizer_order(cycle_type);
    mpz_class sym_size;
    mpz_fac_ui(sym_size.get_mpz_t(), static_cast<unsigned long>(group.n));
    sym_size /= cent;

    if (group.family == Family::Sym) {
      if (split_choice && *split_choice != Split::NotSplit) {
        throw ArgumentError("split tag given for a Sym(n) class");
      }
      c.size              = sym_size;
      c.centralizer_order = cent;
      return c;
    }
    if (!c.even) {
      throw DomainError("cycle type [" + cycle_type.to_string()
                        + "] is odd and has no class in Alt("
                        + std::to_string(group.n) + ")");
    }
    bool splits = splits_in_alt(cycle_type) && group.n >= 2;
    if (splits) {
      if (!split_choice || *split_choice == Split::NotSplit) {
        throw ArgumentError("type [" + cycle_type.to_string()
                            + "] splits in Alt(n); a +/- tag is required");
      }
      c.split             = *split_choice;
      c.size              = sym_size / 2;
      c.centralizer_order = cent;
    } else {
      if (split_choice && *split_choice != Split::NotSplit) {
        throw ArgumentError("type [" + cycle_type.to_string()
                            + "] does not split in Alt(n)");
      }
      c.size              = sym_size;
      c.centralizer_order = group.n >= 2 ? mpz_class(cent / 2) : cent;
    }
    return c;
  }

  std::vector<ClassDescriptor> all_classes(GroupSpec group) {
    std::vector<ClassDescriptor> out;
    for (auto const& p : enumerate_partitions(group.n)) {
      if (group.family == Family::Sym) {
        out.push_back(describe_class(group, p));
      } else if (p.even()) {
        if (splits_in_alt(p) && group.n >= 2) {
          out.push_back(describe_class(group, p, Split::Plus));
          out.push_back(describe_class(group, p, Split::Minus));
        } else {
          out.push_back(describe_class(group, p));
        }
      }
    }
    return out;
  }

  std::vector<int> diagonal_hooks(Partition const& p) {
    Partition t = p.transpose();
    if (!(t == p)) {
      throw ArgumentError("diagonal_hooks: [" + p.to_string()
                          + "] is not self-conjugate");
    }
    std::vector<int> hooks;
    for (std::size_t i = 0; i < p.length(); ++i) {
      int arm = p[i] - static_cast<int>(i) - 1;
      if (arm < 0) {
        break;
      }
      int leg = t[i] - static_cast<int>(i) - 1;
      hooks.push_back(arm + leg + 1);
    }
    return hooks;
  }

  mpz_class hook_degree(Partition const& p) {
    Partition t = p.transpose();
    mpz_class prod = 1;
    for (std::size_t i = 0; i < p.length(); ++i) {
      for (int j = 0; j < p[i]; ++j) {
        prod *= (p[i] - j - 1) + (t[j] - static_cast<int>(i) - 1) + 1;
      }
    }
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(p.n()));
    return f / prod;
  }

  GroupSpec parse_group_spec(std::string_view text) {
    GroupSpec g;
    std::size_t pos = 0;
    if (text.starts_with("sym:")) {
      g.family = Family::Sym;
    } else if (text.starts_with("alt:")) {
      g.family = Family::Alt;
    } else {
      throw ParseError("expected 'sym:' or 'alt:'", 0);
    }
    pos   = 4;
    g.n   = parse_int(text, pos, 0);
    if (pos != text.size()) {
      throw ParseError("trailing characters after degree", pos);
    }
    if (g.n < 1) {
      throw ParseError("degree must be positive", 4);
    }
    return g;
  }

  ClassDescriptor parse_class_id(std::string_view         text,
                                 std::optional<GroupSpec> group) {
    std::size_t base = 0;
    GroupSpec   g;
    auto        bracket = text.find('[');
    if (bracket == std::string_view::npos) {
      throw ParseError("expected '[' starting the cycle type", text.size());
    }
    if (bracket > 0) {
      if (text[bracket - 1] != ':') {
        throw ParseError("expected ':' before '['", bracket - 1);
      }
      g = parse_group_spec(text.substr(0, bracket - 1));
      if (group && !(*group == g)) {
        throw ParseError("class belongs to " + g.to_string() + ", expected "
                             + group->to_string(),
                         0);
      }
    } else if (group) {
      g = *group;
    } else {
      throw ParseError("class id needs a group prefix", 0);
    }
    base               = bracket + 1;
    std::string_view r = text.substr(base);
    std::size_t      pos = 0;
    auto             parts = parse_int_list(r, pos, base);
    if (pos >= r.size() || r[pos] != ']') {
      throw ParseError("expected ']'", base + pos);
    }
    ++pos;
    std::optional<Split> split;
    if (pos < r.size()) {
      if (r[pos] != ':' || pos + 2 != r.size()) {
        throw ParseError("expected ':+' or ':-' suffix", base + pos);
      }
      char s = r[pos + 1];
      if (s == '+') {
        split = Split::Plus;
      } else if (s == '-') {
        split = Split::Minus;
      } else {
        throw ParseError("split tag must be '+' or '-'", base + pos + 1);
      }
    }
    Partition p(std::move(parts));
    if (p.n() != g.n) {
      throw ParseError("parts sum to " + std::to_string(p.n()) + ", expected "
                           + std::to_string(g.n),
                       bracket);
    }
    return describe_class(g, p, split);
  }

}  // namespace covering
