#include "covering/group.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "covering/errors.hpp"
#include "covering/frobenius.hpp"

namespace covering {

  std::shared_ptr<GroupContext const> GroupContext::with_table(CharacterTable table) {
    std::shared_ptr<GroupContext> g(new GroupContext());
    g->_natural     = table.group();
    g->_description = table.group().to_string();
    g->_order       = table.group().order();
    for (std::size_t c = 0; c < table.num_classes(); ++c) {
      auto const& d = table.classes()[c];
      g->_sizes.push_back(d.size);
      g->_labels.push_back(d.short_id());
      g->_descriptors.push_back(d);
      g->_inverse.push_back(table.inverse_class_index(c));
    }
    g->_identity = table.identity_class();
    g->_table    = std::move(table);
    g->finish();
    return g;
  }

  std::shared_ptr<GroupContext const> GroupContext::with_oracle(
      std::shared_ptr<PermGroup const> group,
      std::string                      description,
      std::optional<GroupSpec>         natural) {
    std::shared_ptr<GroupContext> g(new GroupContext());
    g->_description = std::move(description);
    g->_order       = static_cast<unsigned long>(group->order());
    g->_natural     = natural;
    for (std::size_t c = 0; c < group->num_classes(); ++c) {
      g->_sizes.emplace_back(static_cast<unsigned long>(group->class_size(c)));
      if (natural) {
        auto d = describe_oracle_class(*group, c, *natural);
        g->_labels.push_back(d.short_id());
        g->_descriptors.push_back(std::move(d));
      } else {
        g->_labels.push_back("c" + std::to_string(c));
      }
      g->_inverse.push_back(group->inverse_class(c));
    }
    g->_identity = group->class_of(0);
    g->_oracle   = std::move(group);
    g->finish();
    return g;
  }

  void GroupContext::finish() {
    std::size_t k = _sizes.size();
    _supports.resize(k * k);
  }

  ClassDescriptor const& GroupContext::descriptor(std::size_t c) const {
    if (_descriptors.empty()) {
      throw CapabilityError(_description + " has no Sym/Alt class descriptors");
    }
    return _descriptors.at(c);
  }

  std::size_t GroupContext::parse_class(std::string_view text) const {
    if (!text.empty() && text.front() == 'c' && _descriptors.empty()) {
      std::size_t c    = 0;
      auto        last = text.data() + text.size();
      auto [ptr, ec]   = std::from_chars(text.data() + 1, last, c);
      if (ec != std::errc() || ptr != last) {
        throw ParseError("expected class label c<index>", 1);
      }
      if (c >= num_classes()) {
        throw ParseError("class index out of range for " + _description, 1);
      }
      return c;
    }
    if (!_natural) {
      throw ParseError("classes of " + _description + " are labelled c0..c"
                           + std::to_string(num_classes() - 1),
                       0);
    }
    auto d = parse_class_id(text, *_natural);
    for (std::size_t c = 0; c < _descriptors.size(); ++c) {
      if (_descriptors[c] == d) {
        return c;
      }
    }
    throw ArgumentError("class " + d.id() + " not found in " + _description);
  }

  ClassSet const& GroupContext::pair_support(std::size_t i, std::size_t j) const {
    std::size_t k = num_classes();
    if (i >= k || j >= k) {
      throw ArgumentError("pair_support: class index out of range");
    }
    {
      std::lock_guard lock(_mutex);
      if (auto const& p = _supports[i * k + j]) {
        return *p;
      }
    }
    ClassSet support(k);
    if (_table) {
      for (std::size_t c = 0; c < k; ++c) {
        if (class_in_product(*_table, i, j, c)) {
          support.set(c);
        }
      }
    } else {
      support = _oracle->brute_product_support(i, j);
    }
    std::lock_guard lock(_mutex);
    auto&           slot = _supports[i * k + j];
    if (!slot) {
      slot = std::make_unique<ClassSet>(std::move(support));
    }
    return *slot;
  }

  mpz_class GroupContext::min_nontrivial_degree() const {
    if (!_table) {
      throw CapabilityError(_description + " has no character table");
    }
    std::optional<mpz_class> best;
    for (auto const& d : _table->degrees()) {
      if (d > 1 && (!best || d < *best)) {
        best = d;
      }
    }
    if (!best) {
      throw DomainError(_description + " has no irreducible of degree > 1");
    }
    return *best;
  }

  std::shared_ptr<PermGroup const> enumerate_cached(std::size_t                     degree,
                                                    std::vector<Permutation> const& gens,
                                                    GroupOptions const& options) {
    if (options.cache_dir.empty()) {
      return std::make_shared<PermGroup const>(
          PermGroup::enumerate(degree, gens, options.oracle_cap));
    }
    // Same digest as PermGroup::content_hash, computed before enumeration.
    std::uint64_t h = 14695981039346656037ULL;
    auto          mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ULL;
    };
    mix(degree);
    for (auto const& g : gens) {
      for (std::size_t i = 0; i < g.degree(); ++i) {
        mix(g[i]);
      }
      mix(0xFFFF);
    }
    std::ostringstream name;
    name << "oracle-" << std::hex << h << ".grp";
    auto file = options.cache_dir / name.str();
    if (std::filesystem::exists(file)) {
      try {
        auto g = PermGroup::load(file);
        if (g.generators() == gens) {
          return std::make_shared<PermGroup const>(std::move(g));
        }
      } catch (std::exception const&) {
        // rebuilt below
      }
    }
    auto g = PermGroup::enumerate(degree, gens, options.oracle_cap);
    std::filesystem::create_directories(options.cache_dir);
    auto tmp = file;
    tmp += ".tmp";
    g.save(tmp);
    std::filesystem::rename(tmp, file);
    return std::make_shared<PermGroup const>(std::move(g));
  }

  GroupPtr make_group(std::string_view text, GroupOptions const& options) {
    if (text.starts_with("sym:") || text.starts_with("alt:")) {
      auto spec = parse_group_spec(text);
      if (spec.family == Family::Alt && spec.n < 3) {
        throw ArgumentError("alt:N needs N >= 3");
      }
      return GroupContext::with_table(
          cached_table(spec, options.cache_dir, options.table_cap));
    }
    if (text.starts_with("oracle:")) {
      auto spec = parse_group_spec(text.substr(7));
      auto gens = spec.family == Family::Sym ? sym_generators(spec.n)
                                             : alt_generators(spec.n);
      auto perm = enumerate_cached(spec.n, gens, options);
      return GroupContext::with_oracle(perm, std::string(text), spec);
    }
    if (text.starts_with("psl:2:")) {
      int  q    = 0;
      auto rest = text.substr(6);
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), q);
      if (ec != std::errc() || ptr != rest.data() + rest.size()) {
        throw ParseError("expected psl:2:Q", 6);
      }
      auto gens = psl2_generators(q);
      auto perm = enumerate_cached(static_cast<std::size_t>(q) + 1, gens, options);
      return GroupContext::with_oracle(perm, std::string(text));
    }
    if (text.starts_with("file:")) {
      std::string   path(text.substr(5));
      std::ifstream in(path);
      if (!in) {
        throw ArgumentError("cannot open group definition " + path);
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      auto def  = parse_group_definition(buffer.str());
      auto perm = enumerate_cached(def.degree, def.generators, options);
      return GroupContext::with_oracle(perm, std::string(text));
    }
    throw ParseError("unknown group '" + std::string(text)
                         + "' (expected sym:N, alt:N, oracle:alt:N, psl:2:Q or file:PATH)",
                     0);
  }

  std::vector<std::size_t> match_classes(GroupContext const& oracle_ctx,
                                         GroupContext const& table_ctx) {
    std::vector<std::size_t> map;
    for (std::size_t c = 0; c < oracle_ctx.num_classes(); ++c) {
      auto const& d     = oracle_ctx.descriptor(c);
      bool        found = false;
      for (std::size_t t = 0; t < table_ctx.num_classes(); ++t) {
        if (table_ctx.descriptor(t) == d) {
          map.push_back(t);
          found = true;
          break;
        }
      }
      if (!found) {
        throw ArgumentError("oracle class " + d.id() + " missing from table");
      }
    }
    return map;
  }

}  // namespace covering
