#include "covering/permutation.hpp"

#include <algorithm>
#include <cctype>

#include "covering/errors.hpp"

namespace covering {

  Permutation::Permutation(std::size_t degree) : _images(degree) {
    for (std::size_t i = 0; i < degree; ++i) {
      _images[i] = static_cast<point_type>(i);
    }
  }

  Permutation::Permutation(std::vector<point_type> images)
      : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (auto p : _images) {
      if (p >= _images.size() || seen[p]) {
        throw ArgumentError("images do not form a permutation");
      }
      seen[p] = true;
    }
  }

  Permutation Permutation::from_cycles(std::size_t                          degree,
                                       std::vector<std::vector<int>> const& cycles) {
    Permutation       result(degree);
    std::vector<bool> used(degree, false);
    for (auto const& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        int a = cycle[i];
        if (a < 1 || static_cast<std::size_t>(a) > degree) {
          throw ArgumentError("point " + std::to_string(a)
                              + " outside 1.." + std::to_string(degree));
        }
        if (used[a - 1]) {
          throw ArgumentError("point " + std::to_string(a)
                              + " occurs twice in cycle notation");
        }
        used[a - 1] = true;
        int b = cycle[(i + 1) % cycle.size()];
        result._images[a - 1] = static_cast<point_type>(b - 1);
      }
    }
    return result;
  }

  Permutation Permutation::parse(std::string_view text, std::size_t degree) {
    std::vector<std::vector<int>> cycles;
    std::size_t                   pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };
    skip_ws();
    while (pos < text.size()) {
      if (text[pos] != '(') {
        throw ParseError("expected '('", pos);
      }
      ++pos;
      std::vector<int> cycle;
      while (true) {
        skip_ws();
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        if (pos < text.size() && text[pos] == ',' && !cycle.empty()) {
          ++pos;
          skip_ws();
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
          throw ParseError("expected a point or ')'", pos);
        }
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          v = v * 10 + (text[pos] - '0');
          ++pos;
        }
        cycle.push_back(v);
      }
      if (!cycle.empty()) {
        cycles.push_back(std::move(cycle));
      }
      skip_ws();
    }
    return from_cycles(degree, cycles);
  }

  Permutation Permutation::operator*(Permutation const& that) const {
    if (degree() != that.degree()) {
      throw ArgumentError("degree mismatch in permutation product");
    }
    Permutation result(degree());
    for (std::size_t i = 0; i < degree(); ++i) {
      result._images[i] = that._images[_images[i]];
    }
    return result;
  }

  Permutation Permutation::inverse() const {
    Permutation result(degree());
    for (std::size_t i = 0; i < degree(); ++i) {
      result._images[_images[i]] = static_cast<point_type>(i);
    }
    return result;
  }

  Permutation Permutation::conjugate_by(Permutation const& g) const {
    return g.inverse() * *this * g;
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::vector<Permutation::point_type>> Permutation::cycles() const {
    std::vector<std::vector<point_type>> result;
    std::vector<bool>                    seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::vector<point_type> cycle;
      for (auto j = static_cast<point_type>(i); !seen[j]; j = _images[j]) {
        seen[j] = true;
        cycle.push_back(j);
      }
      result.push_back(std::move(cycle));
    }
    return result;
  }

  bool Permutation::even() const {
    std::size_t transpositions = 0;
    for (auto const& c : cycles()) {
      transpositions += c.size() - 1;
    }
    return transpositions % 2 == 0;
  }

  Partition Permutation::cycle_type() const {
    std::vector<int> parts;
    for (auto const& c : cycles()) {
      parts.push_back(static_cast<int>(c.size()));
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  std::size_t Permutation::orbit_count() const {
    return cycles().size();
  }

  std::vector<int> Permutation::fixed_points() const {
    std::vector<int> result;
    for (std::size_t i = 0; i < degree(); ++i) {
      if (_images[i] == i) {
        result.push_back(static_cast<int>(i) + 1);
      }
    }
    return result;
  }

  std::string Permutation::to_string() const {
    std::string out;
    for (auto const& c : cycles()) {
      if (c.size() == 1) {
        continue;
      }
      out += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) {
          out += ' ';
        }
        out += std::to_string(c[i] + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  Permutation canonical_representative(Partition const& cycle_type) {
    std::vector<Permutation::point_type> images(cycle_type.n());
    int                                  start = 0;
    for (int len : cycle_type.parts()) {
      for (int i = 0; i < len; ++i) {
        images[start + i] = static_cast<Permutation::point_type>(start + (i + 1) % len);
      }
      start += len;
    }
    return Permutation(std::move(images));
  }

}  // namespace covering
