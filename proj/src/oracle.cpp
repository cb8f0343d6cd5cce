#include "covering/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "covering/errors.hpp"

namespace covering {

  std::uint64_t PermGroup::key(std::uint8_t const* img) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < _degree; ++i) {
      k |= std::uint64_t{img[i]} << (4 * i);
    }
    return k;
  }

  std::size_t PermGroup::lookup(std::uint8_t const* img) const {
    auto it = _index.find(key(img));
    if (it == _index.end()) {
      throw ArgumentError("permutation is not an element of the group");
    }
    return it->second;
  }

  PermGroup PermGroup::enumerate(std::size_t                     degree,
                                 std::vector<Permutation> const& generators,
                                 std::size_t                     cap) {
    if (degree < 1 || degree > max_degree) {
      throw ArgumentError("oracle degree must be in 1.." + std::to_string(max_degree));
    }
    for (auto const& g : generators) {
      if (g.degree() != degree) {
        throw ArgumentError("generator " + g.to_string() + " has degree "
                            + std::to_string(g.degree()) + ", expected "
                            + std::to_string(degree));
      }
    }
    PermGroup G;
    G._degree     = degree;
    G._generators = generators;
    G._elements.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      G._elements[i] = static_cast<std::uint8_t>(i);
    }
    G._index.emplace(G.key(G._elements.data()), 0);
    G._order = 1;

    std::vector<std::uint8_t> next(degree);
    for (std::size_t id = 0; id < G._order; ++id) {
      for (auto const& gen : generators) {
        auto const* x = G.images(id);
        for (std::size_t i = 0; i < degree; ++i) {
          next[i] = static_cast<std::uint8_t>(gen[x[i]]);
        }
        auto k = G.key(next.data());
        if (G._index.contains(k)) {
          continue;
        }
        if (G._order >= cap) {
          throw ResourceError("group order exceeds enumeration cap "
                              + std::to_string(cap));
        }
        G._index.emplace(k, static_cast<std::uint32_t>(G._order));
        G._elements.insert(G._elements.end(), next.begin(), next.end());
        ++G._order;
      }
    }
    G.build_index();
    G.build_classes();
    return G;
  }

  void PermGroup::build_index() {
    if (_index.size() != _order) {
      _index.clear();
      for (std::size_t id = 0; id < _order; ++id) {
        _index.emplace(key(images(id)), static_cast<std::uint32_t>(id));
      }
    }
    if (_order <= table_limit) {
      _table.assign(_order * _order, 0);
      std::vector<std::uint8_t> prod(_degree);
      for (std::size_t a = 0; a < _order; ++a) {
        auto const* x = images(a);
        for (std::size_t b = 0; b < _order; ++b) {
          auto const* y = images(b);
          for (std::size_t i = 0; i < _degree; ++i) {
            prod[i] = y[x[i]];
          }
          _table[a * _order + b] = static_cast<std::uint32_t>(lookup(prod.data()));
        }
      }
    }
  }

  void PermGroup::build_classes() {
    std::vector<Permutation> gen_inv;
    for (auto const& g : _generators) {
      gen_inv.push_back(g.inverse());
    }
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    _class_of.assign(_order, unset);
    _class_members.clear();
    std::vector<std::uint8_t> conj(_degree);
    for (std::size_t id = 0; id < _order; ++id) {
      if (_class_of[id] != unset) {
        continue;
      }
      auto cls = static_cast<std::uint32_t>(_class_members.size());
      _class_members.emplace_back();
      auto& members = _class_members.back();
      _class_of[id] = cls;
      members.push_back(static_cast<std::uint32_t>(id));
      for (std::size_t head = 0; head < members.size(); ++head) {
        auto const* x = images(members[head]);
        for (std::size_t k = 0; k < _generators.size(); ++k) {
          // g^-1 x g maps i(g) to i(x)(g)
          auto const& g  = _generators[k];
          auto const& gi = gen_inv[k];
          for (std::size_t i = 0; i < _degree; ++i) {
            conj[i] = static_cast<std::uint8_t>(g[x[gi[i]]]);
          }
          auto c = lookup(conj.data());
          if (_class_of[c] == unset) {
            _class_of[c] = cls;
            members.push_back(static_cast<std::uint32_t>(c));
          }
        }
      }
      std::sort(members.begin(), members.end());
    }
  }

  Permutation PermGroup::element(std::size_t id) const {
    if (id >= _order) {
      throw ArgumentError("element id out of range");
    }
    auto const*                          x = images(id);
    std::vector<Permutation::point_type> img(x, x + _degree);
    return Permutation(std::move(img));
  }

  std::size_t PermGroup::index_of(Permutation const& p) const {
    if (p.degree() != _degree) {
      throw ArgumentError("permutation degree does not match group degree");
    }
    std::vector<std::uint8_t> img(_degree);
    for (std::size_t i = 0; i < _degree; ++i) {
      img[i] = static_cast<std::uint8_t>(p[i]);
    }
    return lookup(img.data());
  }

  bool PermGroup::contains(Permutation const& p) const {
    if (p.degree() != _degree) {
      return false;
    }
    std::vector<std::uint8_t> img(_degree);
    for (std::size_t i = 0; i < _degree; ++i) {
      img[i] = static_cast<std::uint8_t>(p[i]);
    }
    return _index.contains(key(img.data()));
  }

  std::size_t PermGroup::multiply(std::size_t a, std::size_t b) const {
    if (!_table.empty()) {
      return _table[a * _order + b];
    }
    std::uint8_t prod[max_degree];
    auto const*  x = images(a);
    auto const*  y = images(b);
    for (std::size_t i = 0; i < _degree; ++i) {
      prod[i] = y[x[i]];
    }
    return lookup(prod);
  }

  std::size_t PermGroup::inverse(std::size_t a) const {
    std::uint8_t inv[max_degree];
    auto const*  x = images(a);
    for (std::size_t i = 0; i < _degree; ++i) {
      inv[x[i]] = static_cast<std::uint8_t>(i);
    }
    return lookup(inv);
  }

  Bitset PermGroup::brute_product_support(std::size_t c1, std::size_t c2) const {
    return brute_product_support(c1, c2, class_rep(c1));
  }

  Bitset PermGroup::brute_product_support(std::size_t c1,
                                          std::size_t c2,
                                          std::size_t rep) const {
    if (c1 >= num_classes() || c2 >= num_classes()) {
      throw ArgumentError("class id out of range");
    }
    if (_class_of[rep] != c1) {
      throw ArgumentError("representative is not in the first class");
    }
    Bitset support(num_classes());
    for (auto x : _class_members[c2]) {
      support.set(_class_of[multiply(rep, x)]);
    }
    return support;
  }

  Bitset PermGroup::subset_product(Bitset const& a, Bitset const& b) const {
    Bitset result(_order);
    auto   bs = b.members();
    for (auto x : a.members()) {
      for (auto y : bs) {
        result.set(multiply(x, y));
      }
    }
    return result;
  }

  Bitset PermGroup::class_set_elements(Bitset const& classes) const {
    Bitset result(_order);
    for (auto c : classes.members()) {
      for (auto x : _class_members[c]) {
        result.set(x);
      }
    }
    return result;
  }

  std::string PermGroup::content_hash() const {
    std::uint64_t h   = 14695981039346656037ULL;
    auto          mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ULL;
    };
    mix(_degree);
    for (auto const& g : _generators) {
      for (std::size_t i = 0; i < _degree; ++i) {
        mix(g[i]);
      }
      mix(0xFFFF);
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
  }

  void PermGroup::save(std::filesystem::path const& file) const {
    std::ofstream out(file, std::ios::binary);
    if (!out) {
      throw ResourceError("cannot write oracle cache " + file.string());
    }
    out << "covering-oracle v1 " << _degree << ' ' << _order << ' '
        << _generators.size() << '\n';
    for (auto const& g : _generators) {
      out << g.to_string() << '\n';
    }
    out.write(reinterpret_cast<char const*>(_elements.data()),
              static_cast<std::streamsize>(_elements.size()));
  }

  PermGroup PermGroup::load(std::filesystem::path const& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      throw ResourceError("cannot read oracle cache " + file.string());
    }
    std::string magic, version;
    std::size_t degree = 0, order = 0, ngens = 0;
    in >> magic >> version >> degree >> order >> ngens;
    if (magic != "covering-oracle" || version != "v1" || degree < 1
        || degree > max_degree) {
      throw ArgumentError("unrecognised oracle cache " + file.string());
    }
    std::string line;
    std::getline(in, line);
    PermGroup G;
    G._degree = degree;
    G._order  = order;
    for (std::size_t i = 0; i < ngens; ++i) {
      std::getline(in, line);
      G._generators.push_back(Permutation::parse(line, degree));
    }
    G._elements.resize(degree * order);
    in.read(reinterpret_cast<char*>(G._elements.data()),
            static_cast<std::streamsize>(G._elements.size()));
    if (static_cast<std::size_t>(in.gcount()) != G._elements.size()) {
      throw ArgumentError("truncated oracle cache " + file.string());
    }
    G.build_index();
    if (G._index.size() != order) {
      throw ArgumentError("oracle cache holds repeated elements");
    }
    G.build_classes();
    return G;
  }

  bool brute_subset_pair_product(PermGroup const& g, Bitset const& a, Bitset const& b) {
    Bitset      seen(g.order());
    std::size_t covered = 0;
    auto        bs      = b.members();
    for (auto x : a.members()) {
      for (auto y : bs) {
        auto z = g.multiply(x, y);
        if (!seen.test(z)) {
          seen.set(z);
          if (++covered == g.order()) {
            return true;
          }
        }
      }
    }
    return covered == g.order();
  }

  bool brute_subset_triple_product(PermGroup const& g,
                                   Bitset const&    a,
                                   Bitset const&    b,
                                   Bitset const&    c) {
    if (g.order() > triple_product_limit) {
      throw ResourceError("triple product check limited to groups of order <= "
                          + std::to_string(triple_product_limit));
    }
    return brute_subset_pair_product(g, g.subset_product(a, b), c);
  }

  std::vector<Permutation> sym_generators(int n) {
    if (n < 2) {
      return {};
    }
    std::vector<int> cycle(n);
    for (int i = 0; i < n; ++i) {
      cycle[i] = i + 1;
    }
    return {Permutation::from_cycles(n, {{1, 2}}), Permutation::from_cycles(n, {cycle})};
  }

  std::vector<Permutation> alt_generators(int n) {
    std::vector<Permutation> gens;
    // 3-cycles (1 2 k) generate Alt(n)
    for (int k = 3; k <= n; ++k) {
      gens.push_back(Permutation::from_cycles(n, {{1, 2, k}}));
    }
    return gens;
  }

  namespace {

    // GF(q) for q = p^k <= 13 via tables built from a fixed irreducible
    // polynomial; elements are base-p digit vectors packed into ints.
    struct SmallField {
      int              q = 0, p = 0, k = 0;
      std::vector<int> add, mul;

      explicit SmallField(int order) : q(order) {
        std::vector<int> modulus;  // monic, low degree first
        switch (order) {
          case 4: p = 2; k = 2; modulus = {1, 1, 1}; break;
          case 8: p = 2; k = 3; modulus = {1, 1, 0, 1}; break;
          case 9: p = 3; k = 2; modulus = {1, 0, 1}; break;
          default:
            if (order < 2 || order > 13) {
              throw ArgumentError("PSL(2,q) supported for q <= 13");
            }
            for (int d = 2; d < order; ++d) {
              if (order % d == 0) {
                throw ArgumentError("PSL(2," + std::to_string(order)
                                    + "): q must be a prime power <= 13");
              }
            }
            p = order;
            k = 1;
            modulus = {0, 1};
        }
        auto digits = [&](int v) {
          std::vector<int> d(k);
          for (int i = 0; i < k; ++i) {
            d[i] = v % p;
            v /= p;
          }
          return d;
        };
        auto pack = [&](std::vector<int> const& d) {
          int v = 0;
          for (int i = k - 1; i >= 0; --i) {
            v = v * p + d[i];
          }
          return v;
        };
        add.assign(q * q, 0);
        mul.assign(q * q, 0);
        for (int a = 0; a < q; ++a) {
          for (int b = 0; b < q; ++b) {
            auto da = digits(a), db = digits(b);
            std::vector<int> s(k);
            for (int i = 0; i < k; ++i) {
              s[i] = (da[i] + db[i]) % p;
            }
            add[a * q + b] = pack(s);
            std::vector<int> prod(2 * k, 0);
            for (int i = 0; i < k; ++i) {
              for (int j = 0; j < k; ++j) {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
              }
            }
            for (int deg = 2 * k - 1; deg >= k; --deg) {
              int c = prod[deg];
              if (c == 0) {
                continue;
              }
              for (int i = 0; i <= k; ++i) {
                prod[deg - k + i] = ((prod[deg - k + i] - c * modulus[i]) % p + p) % p;
              }
            }
            prod.resize(k);
            mul[a * q + b] = pack(prod);
          }
        }
      }

      int plus(int a, int b) const { return add[a * q + b]; }
      int times(int a, int b) const { return mul[a * q + b]; }
      int neg(int a) const {
        for (int b = 0; b < q; ++b) {
          if (plus(a, b) == 0) {
            return b;
          }
        }
        return 0;
      }
      int inv(int a) const {
        for (int b = 1; b < q; ++b) {
          if (times(a, b) == 1) {
            return b;
          }
        }
        throw ArgumentError("zero has no inverse");
      }
      int primitive() const {
        for (int g = 1; g < q; ++g) {
          int x = g, ord = 1;
          while (x != 1) {
            x = times(x, g);
            ++ord;
          }
          if (ord == q - 1) {
            return g;
          }
        }
        return 1;
      }
    };

  }  // namespace

  std::vector<Permutation> psl2_generators(int q) {
    SmallField F(q);
    int const  inf = q;  // point q is infinity
    std::size_t deg = static_cast<std::size_t>(q) + 1;
    auto mobius = [&](auto&& f) {
      std::vector<Permutation::point_type> img(deg);
      for (int z = 0; z <= q; ++z) {
        img[z] = static_cast<Permutation::point_type>(f(z));
      }
      return Permutation(std::move(img));
    };
    std::vector<Permutation> gens;
    // z -> z + b for b running over an F_p-basis (b = p^i as packed digits)
    for (int i = 0, b = 1; i < F.k; ++i, b *= F.p) {
      gens.push_back(mobius([&](int z) { return z == inf ? inf : F.plus(z, b); }));
    }
    int w2 = F.times(F.primitive(), F.primitive());
    if (w2 != 1) {
      gens.push_back(mobius([&](int z) { return z == inf ? inf : F.times(w2, z); }));
    }
    // z -> -1/z
    gens.push_back(mobius([&](int z) {
      if (z == inf) {
        return 0;
      }
      if (z == 0) {
        return inf;
      }
      return F.neg(F.inv(z));
    }));
    return gens;
  }

  GroupDefinition parse_group_definition(std::string_view text) {
    GroupDefinition    def;
    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        line_no = 0;
    bool               have_degree = false;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.resize(hash);
      }
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) {
        continue;
      }
      line = line.substr(first);
      while (!line.empty() && (line.back() == ' ' || line.back() == '\r'
                               || line.back() == '\t')) {
        line.pop_back();
      }
      if (!have_degree) {
        std::istringstream ls(line);
        std::string        word;
        long               n = 0;
        if (!(ls >> word >> n) || word != "degree" || n < 1) {
          throw ParseError("line " + std::to_string(line_no)
                               + ": expected 'degree N'",
                           0);
        }
        def.degree  = static_cast<std::size_t>(n);
        have_degree = true;
        continue;
      }
      try {
        def.generators.push_back(Permutation::parse(line, def.degree));
      } catch (ParseError const& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                         e.position);
      }
    }
    if (!have_degree) {
      throw ParseError("group definition lacks a 'degree N' line", 0);
    }
    return def;
  }

  ClassDescriptor describe_oracle_class(PermGroup const& g,
                                        std::size_t      cls,
                                        GroupSpec        spec) {
    if (g.degree() != static_cast<std::size_t>(spec.n)) {
      throw ArgumentError("oracle degree does not match " + spec.to_string());
    }
    Partition type = g.element(g.class_rep(cls)).cycle_type();
    if (spec.family == Family::Alt && splits_in_alt(type) && spec.n >= 2) {
      auto  canon = g.index_of(canonical_representative(type));
      Split s     = g.class_of(canon) == cls ? Split::Plus : Split::Minus;
      return describe_class(spec, type, s);
    }
    return describe_class(spec, type);
  }

}  // namespace covering
