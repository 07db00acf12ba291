#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace prenormal {

  using Element = std::int32_t;

  //! Marks an undefined entry of a partial operation table.
  inline constexpr Element undefined = -1;

  using Table   = std::vector<Element>;
  using BitRows = std::vector<std::uint8_t>;

  //! A finite structure over a signature of constants, partial unary and
  //! binary operations, binary relations and unary predicates.
  //!
  //! Names (of the object and of its elements) are for display only and do
  //! not take part in equality.  Labels are an extra colouring of the
  //! carrier that morphisms must preserve; the slice and functor-category
  //! combinators use them for the structure map and the fibre index.
  struct Object {
    std::string              backend;
    std::string              name;
    std::size_t              size = 0;
    std::vector<std::string> names;
    Table                    labels;

    std::map<std::string, Element> constants;
    std::map<std::string, Table>   unary;
    std::map<std::string, Table>   binary;
    std::map<std::string, BitRows> relations;
    std::map<std::string, BitRows> predicates;

    [[nodiscard]] std::string element_name(Element x) const {
      if (x >= 0 && static_cast<std::size_t>(x) < names.size()) {
        return names[x];
      }
      return std::to_string(x);
    }

    [[nodiscard]] Element constant(std::string const& key) const {
      auto it = constants.find(key);
      if (it == constants.end()) {
        fail(ErrorKind::invalid_object,
             "object " + name + " has no constant '" + key + "'");
      }
      return it->second;
    }

    [[nodiscard]] Table const& unary_table(std::string const& key) const {
      auto it = unary.find(key);
      if (it == unary.end()) {
        fail(ErrorKind::invalid_object,
             "object " + name + " has no unary operation '" + key + "'");
      }
      return it->second;
    }

    [[nodiscard]] Table const& binary_table(std::string const& key) const {
      auto it = binary.find(key);
      if (it == binary.end()) {
        fail(ErrorKind::invalid_object,
             "object " + name + " has no binary operation '" + key + "'");
      }
      return it->second;
    }

    [[nodiscard]] BitRows const& relation(std::string const& key) const {
      auto it = relations.find(key);
      if (it == relations.end()) {
        fail(ErrorKind::invalid_object,
             "object " + name + " has no relation '" + key + "'");
      }
      return it->second;
    }

    [[nodiscard]] BitRows const& predicate(std::string const& key) const {
      auto it = predicates.find(key);
      if (it == predicates.end()) {
        fail(ErrorKind::invalid_object,
             "object " + name + " has no predicate '" + key + "'");
      }
      return it->second;
    }

    [[nodiscard]] Element op(std::string const& key, Element a, Element b) const {
      return binary_table(key)[a * size + b];
    }

    [[nodiscard]] bool related(std::string const& key, Element a, Element b) const {
      return relation(key)[a * size + b] != 0;
    }

    [[nodiscard]] bool labelled() const noexcept {
      return !labels.empty();
    }

    //! Structural equality; names are ignored.
    friend bool operator==(Object const& x, Object const& y) {
      return x.backend == y.backend && x.size == y.size && x.labels == y.labels
             && x.constants == y.constants && x.unary == y.unary
             && x.binary == y.binary && x.relations == y.relations
             && x.predicates == y.predicates;
    }

    [[nodiscard]] std::size_t fingerprint() const {
      std::size_t h = std::hash<std::string>{}(backend) ^ (size * 0x9e3779b97f4a7c15ULL);
      auto mix = [&h](std::size_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      };
      for (auto l : labels) mix(static_cast<std::size_t>(l));
      for (auto const& [k, v] : constants) {
        mix(std::hash<std::string>{}(k));
        mix(static_cast<std::size_t>(v));
      }
      for (auto const* m : {&unary, &binary}) {
        for (auto const& [k, t] : *m) {
          mix(std::hash<std::string>{}(k));
          for (auto v : t) mix(static_cast<std::size_t>(v + 1));
        }
      }
      for (auto const* m : {&relations, &predicates}) {
        for (auto const& [k, t] : *m) {
          mix(std::hash<std::string>{}(k));
          for (auto v : t) mix(v);
        }
      }
      return h;
    }
  };

  using ObjectPtr = std::shared_ptr<Object const>;

  inline ObjectPtr make_object(Object obj) {
    if (obj.names.empty()) {
      obj.names.reserve(obj.size);
      for (std::size_t i = 0; i < obj.size; ++i) {
        obj.names.push_back(std::to_string(i));
      }
    }
    return std::make_shared<Object const>(std::move(obj));
  }

  inline bool same_object(ObjectPtr const& x, ObjectPtr const& y) {
    return x == y || (x && y && *x == *y);
  }

  //! Same keys for every component of the signature.
  inline bool same_signature(Object const& x, Object const& y) {
    auto keys_match = [](auto const& a, auto const& b) {
      if (a.size() != b.size()) return false;
      auto it = b.begin();
      for (auto const& [k, v] : a) {
        if (k != (it++)->first) return false;
      }
      return true;
    };
    return x.backend == y.backend
           && (x.labelled() == y.labelled() || x.size == 0 || y.size == 0)
           && keys_match(x.constants, y.constants) && keys_match(x.unary, y.unary)
           && keys_match(x.binary, y.binary) && keys_match(x.relations, y.relations)
           && keys_match(x.predicates, y.predicates);
  }

  //! The object with every operation, relation and predicate kept but labels
  //! dropped (or replaced).
  inline ObjectPtr relabel(Object const& x, Table labels, std::string const& backend) {
    Object y    = x;
    y.labels    = std::move(labels);
    y.backend   = backend;
    return make_object(std::move(y));
  }

  namespace bits {
    inline bool at(BitRows const& r, std::size_t n, Element a, Element b) {
      return r[a * n + b] != 0;
    }
    inline void set(BitRows& r, std::size_t n, Element a, Element b) {
      r[a * n + b] = 1;
    }
    inline BitRows diagonal(std::size_t n) {
      BitRows r(n * n, 0);
      for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1;
      return r;
    }
    inline BitRows full(std::size_t n) {
      return BitRows(n * n, 1);
    }
    inline bool is_reflexive(BitRows const& r, std::size_t n) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!r[i * n + i]) return false;
      }
      return true;
    }
    inline bool is_symmetric(BitRows const& r, std::size_t n) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (r[i * n + j] != r[j * n + i]) return false;
        }
      }
      return true;
    }
    inline bool is_transitive(BitRows const& r, std::size_t n) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!r[i * n + j]) continue;
          for (std::size_t k = 0; k < n; ++k) {
            if (r[j * n + k] && !r[i * n + k]) return false;
          }
        }
      }
      return true;
    }
    inline bool is_antisymmetric(BitRows const& r, std::size_t n) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (r[i * n + j] && r[j * n + i]) return false;
        }
      }
      return true;
    }
    inline std::size_t count(BitRows const& r) {
      std::size_t c = 0;
      for (auto v : r) c += v != 0;
      return c;
    }
  }  // namespace bits

}  // namespace prenormal
