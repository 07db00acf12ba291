#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "../core/morphism.hpp"
#include "../engine/report.hpp"

namespace prenormal::io {

  //! Keys keep insertion order, so serialized output is stable.
  using Json = nlohmann::ordered_json;

  inline constexpr int schema_version = 1;

  namespace detail {
    inline Json table_json(Table const& t) {
      Json out = Json::array();
      for (auto v : t) out.push_back(v == undefined ? Json(nullptr) : Json(v));
      return out;
    }

    inline Json rows_json(Table const& t, std::size_t n) {
      Json out = Json::array();
      for (std::size_t a = 0; a < n; ++a) {
        out.push_back(table_json(Table(t.begin() + static_cast<std::ptrdiff_t>(a * n),
                                       t.begin() + static_cast<std::ptrdiff_t>((a + 1) * n))));
      }
      return out;
    }

    inline Json bit_rows_json(BitRows const& t, std::size_t n) {
      Json out = Json::array();
      for (std::size_t a = 0; a < n; ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < n; ++b) row.push_back(static_cast<int>(t[a * n + b]));
        out.push_back(std::move(row));
      }
      return out;
    }

    [[noreturn]] inline void schema_error(std::string const& where, std::string const& what) {
      fail(ErrorKind::schema, where + ": " + what);
    }

    inline void only_fields(Json const& j, std::set<std::string> const& allowed, std::string const& where) {
      if (!j.is_object()) schema_error(where, "expected a JSON object");
      for (auto const& [key, value] : j.items()) {
        if (!allowed.count(key)) schema_error(where, "unknown field '" + key + "'");
      }
    }

    inline Json const& field(Json const& j, std::string const& key, std::string const& where) {
      auto it = j.find(key);
      if (it == j.end()) schema_error(where, "missing field '" + key + "'");
      return *it;
    }

    inline Element element_of(Json const& v, std::size_t n, std::string const& where) {
      if (v.is_null()) return undefined;
      if (!v.is_number_integer()) schema_error(where, "table entries must be integers or null");
      auto x = v.get<long long>();
      if (x < 0 || static_cast<std::size_t>(x) >= n) schema_error(where, "entry " + std::to_string(x) + " out of range");
      return static_cast<Element>(x);
    }

    inline Table table_of(Json const& j, std::size_t len, std::size_t n, std::string const& where) {
      if (!j.is_array() || j.size() != len) schema_error(where, "expected an array of " + std::to_string(len) + " entries");
      Table t;
      for (auto const& v : j) t.push_back(element_of(v, n, where));
      return t;
    }

    inline Table rows_of(Json const& j, std::size_t n, std::string const& where) {
      if (!j.is_array() || j.size() != n) schema_error(where, "expected " + std::to_string(n) + " rows");
      Table t;
      for (auto const& row : j) {
        auto r = table_of(row, n, n, where);
        t.insert(t.end(), r.begin(), r.end());
      }
      return t;
    }

    inline BitRows bits_of(Json const& j, std::size_t len, std::string const& where) {
      if (!j.is_array() || j.size() != len) schema_error(where, "expected an array of " + std::to_string(len) + " bits");
      BitRows t;
      for (auto const& v : j) {
        if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1)) schema_error(where, "bits must be 0 or 1");
        t.push_back(static_cast<std::uint8_t>(v.get<int>()));
      }
      return t;
    }

    inline BitRows bit_rows_of(Json const& j, std::size_t n, std::string const& where) {
      if (!j.is_array() || j.size() != n) schema_error(where, "expected " + std::to_string(n) + " rows");
      BitRows t;
      for (auto const& row : j) {
        auto r = bits_of(row, n, where);
        t.insert(t.end(), r.begin(), r.end());
      }
      return t;
    }
  }  // namespace detail

  //! Object schema: backend, name, size, optional elements and labels, then
  //! constants, unary and binary operations (rows), relations (0/1 rows)
  //! and predicates.  Undefined entries of partial operations are null.
  inline Json to_json(Object const& x) {
    Json j;
    j["backend"] = x.backend;
    j["name"]    = x.name;
    j["size"]    = x.size;
    if (!x.names.empty()) j["elements"] = x.names;
    if (x.labelled()) j["labels"] = detail::table_json(x.labels);
    if (!x.constants.empty()) {
      Json c = Json::object();
      for (auto const& [k, v] : x.constants) c[k] = v;
      j["constants"] = std::move(c);
    }
    if (!x.unary.empty()) {
      Json u = Json::object();
      for (auto const& [k, t] : x.unary) u[k] = detail::table_json(t);
      j["unary"] = std::move(u);
    }
    if (!x.binary.empty()) {
      Json b = Json::object();
      for (auto const& [k, t] : x.binary) b[k] = detail::rows_json(t, x.size);
      j["binary"] = std::move(b);
    }
    if (!x.relations.empty()) {
      Json r = Json::object();
      for (auto const& [k, t] : x.relations) r[k] = detail::bit_rows_json(t, x.size);
      j["relations"] = std::move(r);
    }
    if (!x.predicates.empty()) {
      Json p = Json::object();
      for (auto const& [k, t] : x.predicates) {
        Json bits = Json::array();
        for (auto v : t) bits.push_back(static_cast<int>(v));
        p[k] = std::move(bits);
      }
      j["predicates"] = std::move(p);
    }
    return j;
  }

  //! Parses an object, rejecting unknown fields and malformed tables.  The
  //! result is not checked against any backend's axioms.
  inline ObjectPtr object_from_json(Json const& j, std::string const& where = "object") {
    detail::only_fields(j, {"backend", "name", "size", "elements", "labels", "constants", "unary", "binary",
                            "relations", "predicates"},
                        where);
    Object x;
    x.backend = detail::field(j, "backend", where).get<std::string>();
    x.name    = j.value("name", std::string{});
    auto const& size = detail::field(j, "size", where);
    if (!size.is_number_unsigned()) detail::schema_error(where, "size must be a non-negative integer");
    x.size = size.get<std::size_t>();
    auto const n = x.size;
    if (j.contains("elements")) {
      x.names = j["elements"].get<std::vector<std::string>>();
      if (x.names.size() != n) detail::schema_error(where, "elements must name every element");
    }
    if (j.contains("labels")) {
      auto const& l = j["labels"];
      if (!l.is_array() || l.size() != n) detail::schema_error(where, "labels must label every element");
      for (auto const& v : l) {
        if (!v.is_number_integer() || v.get<long long>() < 0) detail::schema_error(where, "labels must be non-negative integers");
        x.labels.push_back(static_cast<Element>(v.get<long long>()));
      }
    }
    if (j.contains("constants")) {
      for (auto const& [k, v] : j["constants"].items()) x.constants[k] = detail::element_of(v, n, where + ".constants." + k);
    }
    if (j.contains("unary")) {
      for (auto const& [k, v] : j["unary"].items()) x.unary[k] = detail::table_of(v, n, n, where + ".unary." + k);
    }
    if (j.contains("binary")) {
      for (auto const& [k, v] : j["binary"].items()) x.binary[k] = detail::rows_of(v, n, where + ".binary." + k);
    }
    if (j.contains("relations")) {
      for (auto const& [k, v] : j["relations"].items()) {
        x.relations[k] = detail::bit_rows_of(v, n, where + ".relations." + k);
      }
    }
    if (j.contains("predicates")) {
      for (auto const& [k, v] : j["predicates"].items()) x.predicates[k] = detail::bits_of(v, n, where + ".predicates." + k);
    }
    return make_object(std::move(x));
  }

  //! Morphism schema: the full domain and codomain objects and the map.
  inline Json to_json(Morphism const& f) {
    Json j;
    j["dom"] = to_json(*f.dom);
    j["cod"] = to_json(*f.cod);
    j["map"] = detail::table_json(f.map);
    return j;
  }

  inline Morphism morphism_from_json(Json const& j, std::string const& where = "morphism") {
    detail::only_fields(j, {"dom", "cod", "map"}, where);
    auto dom = object_from_json(detail::field(j, "dom", where), where + ".dom");
    auto cod = object_from_json(detail::field(j, "cod", where), where + ".cod");
    auto map = detail::table_of(detail::field(j, "map", where), dom->size, cod->size, where + ".map");
    for (auto v : map) {
      if (v == undefined) detail::schema_error(where, "map entries must be defined");
    }
    return make_morphism(dom, cod, std::move(map));
  }

  inline Json to_json(Witness const& w) {
    Json j;
    j["note"]   = w.note;
    Json arrows = Json::array();
    for (auto const& a : w.arrows) {
      Json e;
      e["name"]     = a.name;
      e["morphism"] = to_json(a.f);
      arrows.push_back(std::move(e));
    }
    j["arrows"] = std::move(arrows);
    return j;
  }

  inline Json to_json(LawReport const& r) {
    Json j;
    j["law"]        = r.law;
    j["backend"]    = r.backend;
    j["verdict"]    = to_string(r.verdict);
    j["mode"]       = to_string(r.mode);
    j["seed"]       = r.seed;
    j["objects"]    = r.objects;
    j["cases"]      = r.cases;
    j["applicable"] = r.applicable;
    j["violations"] = r.violations;
    j["capped"]     = r.capped;
    j["notes"]      = r.notes;
    Json ws         = Json::array();
    for (auto const& w : r.witnesses) ws.push_back(to_json(w));
    j["witnesses"] = std::move(ws);
    return j;
  }

  //! One line per report, then its notes and witness descriptions.
  inline std::string to_text(LawReport const& r) {
    std::string out = r.law + ": " + to_string(r.verdict) + " (" + std::to_string(r.cases) + " cases, "
                      + std::to_string(r.applicable) + " applicable, " + std::to_string(r.violations)
                      + " violations)\n";
    for (auto const& n : r.notes) out += "  note: " + n + "\n";
    for (auto const& w : r.witnesses) {
      out += "  witness: " + w.note + "\n";
      for (auto const& a : w.arrows) out += "    " + a.name + " = " + describe(a.f) + "\n";
    }
    return out;
  }

}  // namespace prenormal::io
