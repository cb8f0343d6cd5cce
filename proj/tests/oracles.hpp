#pragma once

// Independent reference computations for the test suites. None of these
// share code with the library; they are deliberately naive.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace oracles {

  // Number of partitions of n by the coin-change recurrence over part sizes.
  inline mpz_class partition_count(int n) {
    std::vector<mpz_class> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part) {
      for (int m = part; m <= n; ++m) {
        ways[m] += ways[m - part];
      }
    }
    return ways[n];
  }

  // All partitions of n, parts non-increasing, by plain recursion.
  inline void partitions_into(int n, int max_part, std::vector<int>& prefix,
                              std::vector<std::vector<int>>& out) {
    if (n == 0) {
      out.push_back(prefix);
      return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
      prefix.push_back(p);
      partitions_into(n - p, p, prefix, out);
      prefix.pop_back();
    }
  }

  inline std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int>              prefix;
    partitions_into(n, n, prefix, out);
    return out;
  }

  // Hook lengths read off the Young diagram cell by cell.
  inline std::vector<int> hook_lengths(std::vector<int> const& lambda) {
    std::vector<int> hooks;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      for (int j = 0; j < lambda[i]; ++j) {
        int arm = lambda[i] - j - 1;
        int leg = 0;
        for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k) {
          ++leg;
        }
        hooks.push_back(arm + leg + 1);
      }
    }
    return hooks;
  }

  inline mpz_class hook_degree(std::vector<int> const& lambda) {
    int       n = std::accumulate(lambda.begin(), lambda.end(), 0);
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) {
      f *= i;
    }
    for (int h : hook_lengths(lambda)) {
      f /= h;
    }
    return f;
  }

  // Hooks of the diagonal cells.
  inline std::vector<int> diagonal_hooks(std::vector<int> const& lambda) {
    std::vector<int> out;
    for (std::size_t i = 0; i < lambda.size() && lambda[i] > static_cast<int>(i); ++i) {
      int arm = lambda[i] - static_cast<int>(i) - 1;
      int leg = 0;
      for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > static_cast<int>(i); ++k) {
        ++leg;
      }
      out.push_back(arm + leg + 1);
    }
    return out;
  }

  // chi_lambda(mu) by removing rim hooks on a sorted list of beta numbers.
  inline long character_on_beta(std::vector<int> beta, std::vector<int> mu) {
    if (mu.empty()) {
      return 1;
    }
    int k = mu.back();
    mu.pop_back();
    long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      int b = beta[i], c = b - k;
      if (c < 0 || std::find(beta.begin(), beta.end(), c) != beta.end()) {
        continue;
      }
      int between = 0;
      for (int x : beta) {
        between += (x > c && x < b) ? 1 : 0;
      }
      auto next = beta;
      next[i]   = c;
      total += (between % 2 ? -1 : 1) * character_on_beta(next, mu);
    }
    return total;
  }

  inline long character(std::vector<int> const& lambda, std::vector<int> const& mu) {
    std::vector<int> beta;
    int              len = static_cast<int>(lambda.size());
    for (int i = 0; i < len; ++i) {
      beta.push_back(lambda[i] + (len - 1 - i));
    }
    return character_on_beta(beta, mu);
  }

  // Class size in Sym(n): n! / prod (i^m_i m_i!).
  inline mpz_class sym_class_size(std::vector<int> const& type) {
    int       n = std::accumulate(type.begin(), type.end(), 0);
    mpz_class size = 1;
    for (int i = 2; i <= n; ++i) {
      size *= i;
    }
    std::map<int, int> mult;
    for (int p : type) {
      ++mult[p];
    }
    for (auto [part, m] : mult) {
      for (int j = 0; j < m; ++j) {
        size /= part;
      }
      for (int j = 2; j <= m; ++j) {
        size /= j;
      }
    }
    return size;
  }

  // Product of two permutations given as 0-based image lists, applying a
  // first: (a b)(i) = b(a(i)).
  inline std::vector<int> compose(std::vector<int> const& a, std::vector<int> const& b) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i] = b[a[i]];
    }
    return out;
  }

  inline std::vector<int> cycle_type(std::vector<int> const& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int>  type;
    for (std::size_t i = 0; i < p.size(); ++i) {
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
        seen[j] = true;
        ++len;
      }
      if (len) {
        type.push_back(len);
      }
    }
    std::sort(type.rbegin(), type.rend());
    return type;
  }

}  // namespace oracles
