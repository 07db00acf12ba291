#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "../core/error.hpp"
#include "../core/object.hpp"

namespace prenormal {

  //! Relabels a table on {0..n-1} along the permutation `p`.
  inline Table permute_table(Table const& t, std::size_t n, std::vector<Element> const& p) {
    Table r(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) r[p[a] * n + p[b]] = p[t[a * n + b]];
    }
    return r;
  }

  //! Least relabelling of a monoid table under permutations fixing the
  //! identity 0.
  inline Table canonical_monoid_table(Table const& t, std::size_t n) {
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), Element{0});
    Table best = t;
    while (std::next_permutation(p.begin() + 1, p.end())) {
      auto r = permute_table(t, n, p);
      if (r < best) best = std::move(r);
    }
    return best;
  }

  //! All monoid tables of order n with identity 0, one per isomorphism
  //! class, in increasing order of their canonical tables.
  inline std::vector<Table> enumerate_monoids(std::size_t n, bool commutative) {
    if (n == 0) return {};
    if (n > 4) fail(ErrorKind::unsupported, "monoid enumeration is limited to order 4");
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t a = 1; a < n; ++a) {
      for (std::size_t b = commutative ? a : 1; b < n; ++b) cells.emplace_back(a, b);
    }
    Table t(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      t[a] = static_cast<Element>(a);
      t[a * n] = static_cast<Element>(a);
    }
    std::set<Table> seen;
    auto associative = [&] {
      for (std::size_t a = 1; a < n; ++a) {
        for (std::size_t b = 1; b < n; ++b) {
          auto ab = t[a * n + b];
          for (std::size_t c = 1; c < n; ++c) {
            if (t[ab * n + c] != t[a * n + t[b * n + c]]) return false;
          }
        }
      }
      return true;
    };
    std::vector<std::size_t> digit(cells.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        auto [a, b]  = cells[i];
        auto v       = static_cast<Element>(digit[i]);
        t[a * n + b] = v;
        if (commutative) t[b * n + a] = v;
      }
      if (associative()) seen.insert(canonical_monoid_table(t, n));
      std::size_t i = 0;
      while (i < digit.size() && ++digit[i] == n) digit[i++] = 0;
      if (i == digit.size()) break;
    }
    return {seen.begin(), seen.end()};
  }

}  // namespace prenormal
