#include "covering/characters.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "covering/errors.hpp"
#include "covering/parallel.hpp"
#include "covering/permutation.hpp"

namespace covering {

  namespace {

    // Beta-set encoding: bead i of an l-part partition sits at
    // lambda_i + (l - i). Removing a k-border strip moves one bead down by k
    // onto an empty position; the sign is the parity of beads jumped over.
    struct MemoKey {
      std::uint64_t beta;
      std::uint64_t mu;
      bool operator==(MemoKey const&) const = default;
    };

    struct MemoKeyHash {
      std::size_t operator()(MemoKey const& k) const noexcept {
        return std::hash<std::uint64_t>()(k.beta * 0x9E3779B97F4A7C15ULL ^ k.mu);
      }
    };

    constexpr int mn_degree_cap = 31;
    constexpr std::size_t memo_limit = 1u << 22;

    thread_local std::unordered_map<MemoKey, std::int64_t, MemoKeyHash> mn_memo;

    std::uint64_t beta_set(Partition const& lambda) {
      std::uint64_t beta = 0;
      auto          l    = lambda.length();
      for (std::size_t i = 0; i < l; ++i) {
        beta |= std::uint64_t{1} << (lambda[i] + (l - 1 - i));
      }
      return beta;
    }

    std::int64_t mn_recurse(std::uint64_t        beta,
                            int const*           mu,
                            std::size_t          len,
                            std::uint64_t const* codes) {
      if (len == 0) {
        return 1;
      }
      // Beads packed at the bottom are empty rows; drop them.
      beta >>= std::countr_one(beta);
      MemoKey key{beta, codes[0]};
      if (auto it = mn_memo.find(key); it != mn_memo.end()) {
        return it->second;
      }
      int          k     = mu[0];
      std::int64_t total = 0;
      for (std::uint64_t rest = beta; rest != 0; rest &= rest - 1) {
        int b = std::countr_zero(rest);
        if (b < k || (beta >> (b - k) & 1) != 0) {
          continue;
        }
        std::uint64_t between = beta & ((std::uint64_t{1} << b) - 1)
                                & ~((std::uint64_t{1} << (b - k + 1)) - 1);
        std::int64_t sub = mn_recurse(
            beta ^ (std::uint64_t{1} << b) ^ (std::uint64_t{1} << (b - k)),
            mu + 1,
            len - 1,
            codes + 1);
        total += (std::popcount(between) % 2 == 0) ? sub : -sub;
      }
      if (mn_memo.size() > memo_limit) {
        mn_memo.clear();
      }
      mn_memo.emplace(key, total);
      return total;
    }

    std::int64_t mn_int(Partition const& lambda, Partition const& mu) {
      if (lambda.n() != mu.n()) {
        throw ArgumentError("mn_value: |lambda| = " + std::to_string(lambda.n())
                            + " but |mu| = " + std::to_string(mu.n()));
      }
      if (lambda.n() > mn_degree_cap) {
        throw ResourceError("mn_value: degree above "
                            + std::to_string(mn_degree_cap));
      }
      auto const&                parts = mu.parts();
      std::vector<std::uint64_t> codes(parts.size() + 1, 1);
      // codes[i] encodes parts[i..] in unary with separators.
      for (std::size_t i = parts.size(); i-- > 0;) {
        int p    = parts[i];
        codes[i] = (codes[i + 1] << (p + 1))
                   | (((std::uint64_t{1} << p) - 1) << 1);
      }
      return mn_recurse(beta_set(lambda), parts.data(), parts.size(), codes.data());
    }

    std::string split_suffix(Split s) {
      switch (s) {
        case Split::Plus:
          return ":+";
        case Split::Minus:
          return ":-";
        default:
          return "";
      }
    }

    Split parse_suffix(std::string& text) {
      if (text.size() >= 2 && text[text.size() - 2] == ':') {
        char c = text.back();
        text.resize(text.size() - 2);
        if (c == '+') {
          return Split::Plus;
        }
        if (c == '-') {
          return Split::Minus;
        }
        throw ArgumentError("bad split suffix in table cache");
      }
      return Split::NotSplit;
    }

    void check_cap(int n, int cap) {
      if (n < 1) {
        throw ArgumentError("character table degree must be positive");
      }
      if (n > cap) {
        throw ResourceError("character table for degree " + std::to_string(n)
                            + " exceeds cap " + std::to_string(cap));
      }
    }

  }  // namespace

  mpz_class mn_value(Partition const& lambda, Partition const& mu) {
    return mpz_class(static_cast<long>(mn_int(lambda, mu)));
  }

  std::string IrreducibleLabel::to_string() const {
    return partition.to_string() + split_suffix(half);
  }

  CharacterTable::CharacterTable(GroupSpec                     group,
                                 std::vector<IrreducibleLabel> irreducibles,
                                 std::vector<ClassDescriptor>  classes,
                                 std::vector<AlgebraicValue>   values)
      : _group(group),
        _irreducibles(std::move(irreducibles)),
        _classes(std::move(classes)),
        _values(std::move(values)) {
    if (_values.size() != _irreducibles.size() * _classes.size()) {
      throw ArgumentError("character table shape mismatch");
    }
    bool found = false;
    for (std::size_t j = 0; j < _classes.size(); ++j) {
      if (_classes[j].is_identity()) {
        _identity = j;
        found     = true;
      }
    }
    if (!found) {
      throw ArgumentError("character table has no identity class");
    }
    for (std::size_t i = 0; i < _irreducibles.size(); ++i) {
      auto const& v = value(i, _identity);
      if (!v.is_rational() || v.den() != 1 || v.a() <= 0) {
        throw InternalError("degree of " + _irreducibles[i].to_string()
                            + " is not a positive integer");
      }
      _degrees.push_back(v.a());
    }
    for (auto const& c : _classes) {
      _inverse.push_back(class_index(inverse_class(c)));
    }
  }

  std::size_t CharacterTable::class_index(ClassDescriptor const& c) const {
    for (std::size_t j = 0; j < _classes.size(); ++j) {
      if (_classes[j] == c) {
        return j;
      }
    }
    throw ArgumentError("class " + c.id() + " not in table for "
                        + _group.to_string());
  }

  void CharacterTable::save(std::filesystem::path const& file) const {
    std::ofstream out(file);
    if (!out) {
      throw ResourceError("cannot write table cache " + file.string());
    }
    out << "covering-character-table v" << table_cache_version << ' '
        << _group.to_string() << ' ' << _irreducibles.size() << ' '
        << _classes.size() << '\n';
    for (std::size_t i = 0; i < _irreducibles.size(); ++i) {
      for (std::size_t j = 0; j < _classes.size(); ++j) {
        auto const& v = value(i, j);
        out << _irreducibles[i].to_string() << ';'
            << _classes[j].cycle_type.to_string() << split_suffix(_classes[j].split)
            << ';' << v.a().get_str() << ';' << v.b().get_str() << ';' << v.d()
            << ';' << v.den() << '\n';
      }
    }
  }

  CharacterTable CharacterTable::load(std::filesystem::path const& file) {
    std::ifstream in(file);
    if (!in) {
      throw ResourceError("cannot read table cache " + file.string());
    }
    std::string magic, version, group_text;
    std::size_t rows = 0, cols = 0;
    in >> magic >> version >> group_text >> rows >> cols;
    if (magic != "covering-character-table"
        || version != "v" + std::to_string(table_cache_version)) {
      throw ArgumentError("unrecognised table cache header in " + file.string());
    }
    GroupSpec group = parse_group_spec(group_text);
    std::string line;
    std::getline(in, line);

    std::vector<IrreducibleLabel> irr;
    std::vector<ClassDescriptor>  classes;
    std::vector<AlgebraicValue>   values;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (!std::getline(in, line)) {
          throw ArgumentError("truncated table cache " + file.string());
        }
        std::vector<std::string> fields;
        std::stringstream        ss(line);
        for (std::string f; std::getline(ss, f, ';');) {
          fields.push_back(f);
        }
        if (fields.size() != 6) {
          throw ArgumentError("malformed table cache record: " + line);
        }
        if (j == 0) {
          Split half = parse_suffix(fields[0]);
          irr.push_back({Partition::parse(fields[0]), half});
        }
        if (i == 0) {
          Split s = parse_suffix(fields[1]);
          classes.push_back(describe_class(
              group, Partition::parse(fields[1]),
              s == Split::NotSplit ? std::optional<Split>{} : s));
        }
        values.push_back(AlgebraicValue::make(mpz_class(fields[2]),
                                              mpz_class(fields[3]),
                                              std::stol(fields[4]),
                                              std::stoi(fields[5])));
      }
    }
    return CharacterTable(group, std::move(irr), std::move(classes), std::move(values));
  }

  CharacterTable build_sym_table(int n, int cap) {
    check_cap(n, cap);
    GroupSpec group{Family::Sym, n};
    auto      parts   = enumerate_partitions(n);
    auto      classes = all_classes(group);
    std::size_t k     = parts.size();

    std::vector<std::int64_t> raw(k * k);
    parallel_for(k, [&](std::size_t i) {
      for (std::size_t j = 0; j < k; ++j) {
        raw[i * k + j] = mn_int(parts[i], classes[j].cycle_type);
      }
    });

    std::vector<IrreducibleLabel> irr;
    std::vector<AlgebraicValue>   values;
    values.reserve(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      irr.push_back({parts[i], Split::NotSplit});
      // identity class is the last column
      if (mpz_class(static_cast<long>(raw[i * k + k - 1])) != hook_degree(parts[i])) {
        throw InternalError("hook-length degree disagrees with MN value for ["
                            + parts[i].to_string() + "]");
      }
      for (std::size_t j = 0; j < k; ++j) {
        values.emplace_back(mpz_class(static_cast<long>(raw[i * k + j])));
      }
    }
    return CharacterTable(group, std::move(irr), std::move(classes), std::move(values));
  }

  CharacterTable build_alt_table(int n, int cap) {
    check_cap(n, cap);
    if (n < 3) {
      throw ArgumentError("build_alt_table: n must be at least 3");
    }
    CharacterTable sym = build_sym_table(n, cap);
    GroupSpec      group{Family::Alt, n};
    auto           classes = all_classes(group);

    // Column of the Sym table holding each Alt class's cycle type.
    std::vector<std::size_t> sym_col;
    for (auto const& c : classes) {
      sym_col.push_back(sym.class_index(describe_class(sym.group(), c.cycle_type)));
    }

    std::vector<IrreducibleLabel> irr;
    std::vector<AlgebraicValue>   values;
    auto const&                   parts = sym.irreducibles();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      Partition const& lambda = parts[i].partition;
      Partition        conj   = lambda.transpose();
      if (conj < lambda) {
        irr.push_back({lambda, Split::NotSplit});
        for (std::size_t j = 0; j < classes.size(); ++j) {
          values.push_back(sym.value(i, sym_col[j]));
        }
        continue;
      }
      if (!(conj == lambda)) {
        continue;  // the pair was emitted at its larger member
      }
      auto      hooks = diagonal_hooks(lambda);
      Partition hook_type(hooks);
      int       r   = static_cast<int>(hooks.size());
      long      eps = ((n - r) / 2) % 2 == 0 ? 1 : -1;
      mpz_class prod = 1;
      for (int h : hooks) {
        prod *= h;
      }
      mpz_class s;
      long      d;
      squarefree_decompose(prod * eps, s, d);

      for (Split half : {Split::Plus, Split::Minus}) {
        irr.push_back({lambda, half});
        for (std::size_t j = 0; j < classes.size(); ++j) {
          auto const& c = classes[j];
          if (c.cycle_type == hook_type) {
            bool      same = (c.split == half);
            mpz_class b    = same ? s : mpz_class(-s);
            values.push_back(AlgebraicValue::make(eps, b, d, 2));
          } else {
            auto const& v = sym.value(i, sym_col[j]);
            if (!mpz_even_p(v.a().get_mpz_t())) {
              throw InternalError("odd value of self-conjugate character ["
                                  + lambda.to_string() + "] off its split classes");
            }
            values.emplace_back(mpz_class(v.a() / 2));
          }
        }
      }
    }
    return CharacterTable(group, std::move(irr), std::move(classes), std::move(values));
  }

  CharacterTable build_table(GroupSpec group, int cap) {
    return group.family == Family::Sym ? build_sym_table(group.n, cap)
                                       : build_alt_table(group.n, cap);
  }

  CharacterTable cached_table(GroupSpec                    group,
                              std::filesystem::path const& cache_dir,
                              int                          cap) {
    if (cache_dir.empty()) {
      return build_table(group, cap);
    }
    check_cap(group.n, cap);
    auto file = cache_dir
                / ((group.family == Family::Sym ? "sym-" : "alt-")
                   + std::to_string(group.n) + "-v"
                   + std::to_string(table_cache_version) + ".tbl");
    if (std::filesystem::exists(file)) {
      try {
        auto table = CharacterTable::load(file);
        if (table.group() == group) {
          return table;
        }
      } catch (std::exception const&) {
        // unreadable cache entries are rebuilt below
      }
    }
    auto table = build_table(group, cap);
    std::filesystem::create_directories(cache_dir);
    auto tmp = file;
    tmp += ".tmp";
    table.save(tmp);
    std::filesystem::rename(tmp, file);
    return table;
  }

  std::vector<mpz_class> irreducible_degrees(GroupSpec group, int cap) {
    check_cap(group.n, cap);
    std::vector<mpz_class> out;
    for (auto const& lambda : enumerate_partitions(group.n)) {
      mpz_class f = hook_degree(lambda);
      if (group.family == Family::Sym) {
        out.push_back(f);
        continue;
      }
      Partition conj = lambda.transpose();
      if (conj < lambda) {
        out.push_back(f);
      } else if (conj == lambda) {
        if (group.n < 3) {
          out.push_back(f);  // Alt(1), Alt(2) are trivial
        } else {
          out.push_back(f / 2);
          out.push_back(f / 2);
        }
      }
    }
    return out;
  }

  ClassDescriptor inverse_class(ClassDescriptor const& c) {
    if (c.split == Split::NotSplit) {
      return c;
    }
    Permutation x = canonical_representative(c.cycle_type);
    // Conjugator sending x to x^-1: reverse every cycle around its first point.
    std::vector<Permutation::point_type> images(x.degree());
    for (auto const& cycle : x.cycles()) {
      std::size_t len = cycle.size();
      for (std::size_t i = 0; i < len; ++i) {
        images[cycle[i]] = cycle[(len - i) % len];
      }
    }
    Permutation g(std::move(images));
    if (g.even()) {
      return c;
    }
    ClassDescriptor other = c;
    other.split           = (c.split == Split::Plus) ? Split::Minus : Split::Plus;
    return other;
  }

}  // namespace covering
