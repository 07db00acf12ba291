#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "../closure/congruence.hpp"
#include "../core/backend.hpp"
#include "../core/signature.hpp"

namespace prenormal::detail {

  //! A one-element object with the same signature as x.
  inline ObjectPtr point_like(Object const& x, std::string name = "0") {
    Object z;
    z.backend = x.backend;
    z.name    = std::move(name);
    z.size    = 1;
    z.names   = {"0"};
    if (x.labelled()) fail(ErrorKind::backend_bug, "point_like on a labelled object");
    for (auto const& [k, v] : x.constants) z.constants[k] = 0;
    for (auto const& [k, v] : x.unary) z.unary[k] = {0};
    for (auto const& [k, v] : x.binary) z.binary[k] = {0};
    for (auto const& [k, v] : x.relations) z.relations[k] = {1};
    for (auto const& [k, v] : x.predicates) z.predicates[k] = {1};
    return make_object(std::move(z));
  }

  //! Coreflection onto the zero object of a pointed backend whose
  //! basepoint is the constant `point`.
  inline Coreflection zero_coreflection(ObjectPtr const& x, std::string const& point) {
    auto z = point_like(*x);
    return Coreflection{z, Morphism{z, x, {x->constant(point)}}};
  }

  inline bool constant_at(Morphism const& f, std::string const& point) {
    auto z = f.cod->constant(point);
    for (auto v : f.map) {
      if (v != z) return false;
    }
    return true;
  }

  //! Quotient of cod f by the smallest congruence of the given kind
  //! identifying the image of f with the basepoint.
  inline QuotientResult kill_image(Morphism const& f, std::string const& point,
                                   CongruenceKind kind) {
    auto z = f.cod->constant(point);
    PairList seed;
    for (auto v : f.map) {
      if (v != z) seed.emplace_back(v, z);
    }
    return quotient(f.cod, smallest_congruence(*f.cod, seed, kind));
  }

  //! The preimage of the basepoint, as a subobject of the domain.
  inline Morphism preimage_of_point(Morphism const& f, std::string const& point) {
    auto z = f.cod->constant(point);
    std::vector<std::uint8_t> keep(f.dom->size, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = f.map[i] == z;
    return substructure(f.dom, keep, "ker").inclusion;
  }

  inline std::vector<Element> first_other_than(Object const& x, Element point) {
    for (std::size_t i = 0; i < x.size; ++i) {
      if (static_cast<Element>(i) != point) return {static_cast<Element>(i)};
    }
    return {};
  }

  inline void require(bool ok, Object const& x, std::string const& what) {
    if (!ok) fail(ErrorKind::invalid_object, (x.name.empty() ? "object" : x.name) + ": " + what);
  }

  inline void require_signature(Object const& x, std::vector<std::string> const& constants,
                                std::vector<std::string> const& unary,
                                std::vector<std::string> const& binary,
                                std::vector<std::string> const& relations,
                                std::vector<std::string> const& predicates) {
    auto keys = [](auto const& m) {
      std::vector<std::string> out;
      for (auto const& [k, v] : m) out.push_back(k);
      return out;
    };
    auto sorted = [](std::vector<std::string> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    require(keys(x.constants) == sorted(constants), x, "unexpected constants");
    require(keys(x.unary) == sorted(unary), x, "unexpected unary operations");
    require(keys(x.binary) == sorted(binary), x, "unexpected binary operations");
    require(keys(x.relations) == sorted(relations), x, "unexpected relations");
    require(keys(x.predicates) == sorted(predicates), x, "unexpected predicates");
    require(!x.labelled(), x, "labels are not allowed here");
    require(x.names.empty() || x.names.size() == x.size, x, "names do not match the carrier");
    for (auto const& [k, c] : x.constants) {
      require(c >= 0 && static_cast<std::size_t>(c) < x.size, x, "constant " + k + " out of range");
    }
    auto const n = x.size;
    for (auto const& [k, t] : x.unary) {
      require(t.size() == n, x, "table " + k + " has the wrong size");
      for (auto v : t) {
        require(v == undefined || (v >= 0 && static_cast<std::size_t>(v) < n), x,
                "table " + k + " out of range");
      }
    }
    for (auto const& [k, t] : x.binary) {
      require(t.size() == n * n, x, "table " + k + " has the wrong size");
      for (auto v : t) {
        require(v == undefined || (v >= 0 && static_cast<std::size_t>(v) < n), x,
                "table " + k + " out of range");
      }
    }
    for (auto const& [k, t] : x.relations) {
      require(t.size() == n * n, x, "relation " + k + " has the wrong size");
    }
    for (auto const& [k, t] : x.predicates) {
      require(t.size() == n, x, "predicate " + k + " has the wrong size");
    }
  }

  inline void require_total(Object const& x, std::string const& key) {
    for (auto v : x.binary_table(key)) require(v != undefined, x, key + " is not total");
  }

  inline void require_monoid(Object const& x, bool commutative) {
    auto const n = x.size;
    require(n >= 1, x, "empty carrier");
    require_total(x, sig::op);
    auto const& t = x.binary_table(sig::op);
    auto u        = x.constant(sig::unit);
    for (std::size_t a = 0; a < n; ++a) {
      require(t[u * n + a] == static_cast<Element>(a) && t[a * n + u] == static_cast<Element>(a),
              x, "unit is not neutral");
      for (std::size_t b = 0; b < n; ++b) {
        if (commutative) {
          require(t[a * n + b] == t[b * n + a], x, "operation is not commutative");
        }
        auto ab = t[a * n + b];
        for (std::size_t c = 0; c < n; ++c) {
          require(t[ab * n + c] == t[a * n + t[b * n + c]], x, "operation is not associative");
        }
      }
    }
  }

  inline Object monoid_object(std::string backend, std::string name, std::size_t n, Table op,
                              std::vector<std::string> names = {}) {
    Object x;
    x.backend           = std::move(backend);
    x.name              = std::move(name);
    x.size              = n;
    x.names             = std::move(names);
    x.constants[sig::unit] = 0;
    x.binary[sig::op]      = std::move(op);
    return x;
  }

  //! Cyclic group Z_n written additively.
  inline Table cyclic_table(std::size_t n) {
    Table t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
    }
    return t;
  }

  //! Addition on {0..n-1} truncated at n-1.
  inline Table truncated_table(std::size_t n) {
    Table t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a * n + b] = static_cast<Element>(std::min(a + b, n - 1));
      }
    }
    return t;
  }

  //! Join (max) on the chain 0 < 1 < ... < n-1.
  inline Table join_table(std::size_t n) {
    Table t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>(std::max(a, b));
    }
    return t;
  }

  //! Product of two monoid tables, elements ordered lexicographically.
  inline Table product_table(Table const& s, std::size_t n, Table const& t, std::size_t m) {
    auto const k = n * m;
    Table r(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        auto x = s[(a / m) * n + (b / m)];
        auto y = t[(a % m) * m + (b % m)];
        r[a * k + b] = static_cast<Element>(x * m + y);
      }
    }
    return r;
  }

  inline std::size_t default_cap(CatalogCaps const& caps, std::size_t fallback) {
    return caps.max_order == 0 ? fallback : caps.max_order;
  }

  inline std::vector<ObjectPtr> apply_object_cap(std::vector<ObjectPtr> v, CatalogCaps const& caps) {
    if (caps.max_objects != 0 && v.size() > caps.max_objects) v.resize(caps.max_objects);
    return v;
  }

}  // namespace prenormal::detail
