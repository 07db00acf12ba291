#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "../closure/union_find.hpp"
#include "../core/error.hpp"

namespace prenormal::casestudies {

  using Word = std::string;

  //! Every word of length at most `max_length` over `alphabet`, shortest
  //! first and lexicographic within a length.
  inline std::vector<Word> all_words(std::string const& alphabet, std::size_t max_length) {
    std::vector<Word> out{""};
    std::size_t from = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
      auto to = out.size();
      for (auto i = from; i < to; ++i) {
        for (char c : alphabet) out.push_back(out[i] + c);
      }
      from = to;
    }
    return out;
  }

  inline std::size_t count_of(Word const& w, char c) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), c));
  }

  //! Every word obtained from w by one application of a relation, in
  //! either direction, at any position, staying within the length bound.
  inline std::vector<Word> rewrites(Word const& w, std::vector<std::pair<Word, Word>> const& relations,
                                    std::size_t max_length) {
    std::vector<Word> out;
    for (auto const& [l, r] : relations) {
      for (auto const* from : {&l, &r}) {
        auto const& to = from == &l ? r : l;
        if (w.size() - from->size() + to.size() > max_length) continue;
        for (auto pos = w.find(*from); pos != Word::npos; pos = w.find(*from, pos + 1)) {
          out.push_back(w.substr(0, pos) + to + w.substr(pos + from->size()));
        }
      }
    }
    return out;
  }

  //! A finitely presented monoid cut off at words of length L: its
  //! elements are the classes of words of length at most L under the
  //! relations applied inside the bound.
  class BoundedFPMonoid {
   public:
    BoundedFPMonoid(std::string generators, std::vector<std::pair<Word, Word>> relations,
                    std::size_t max_length)
        : _generators(std::move(generators)), _relations(std::move(relations)), _max(max_length),
          _words(all_words(_generators, _max)) {
      for (std::size_t i = 0; i < _words.size(); ++i) _index.emplace(_words[i], i);
      UnionFind uf(_words.size());
      for (std::size_t i = 0; i < _words.size(); ++i) {
        for (auto const& v : rewrites(_words[i], _relations, _max)) uf.unite(i, _index.at(v));
      }
      std::unordered_map<std::size_t, std::size_t> slot;
      _class.resize(_words.size());
      for (std::size_t i = 0; i < _words.size(); ++i) {
        auto [it, fresh] = slot.emplace(uf.find(i), _members.size());
        if (fresh) _members.emplace_back();
        _class[i] = it->second;
        _members[it->second].push_back(i);
      }
    }

    [[nodiscard]] std::size_t max_length() const {
      return _max;
    }

    [[nodiscard]] std::string const& generators() const {
      return _generators;
    }

    [[nodiscard]] std::vector<std::pair<Word, Word>> const& relations() const {
      return _relations;
    }

    [[nodiscard]] std::vector<Word> const& words() const {
      return _words;
    }

    [[nodiscard]] std::size_t class_count() const {
      return _members.size();
    }

    [[nodiscard]] std::size_t word_index(Word const& w) const {
      auto it = _index.find(w);
      if (it == _index.end()) fail(ErrorKind::invalid_input, "word '" + w + "' is outside the bound");
      return it->second;
    }

    [[nodiscard]] std::size_t class_of(Word const& w) const {
      return _class[word_index(w)];
    }

    [[nodiscard]] bool equal(Word const& a, Word const& b) const {
      return class_of(a) == class_of(b);
    }

    //! The words of a class.
    [[nodiscard]] std::vector<Word> members(std::size_t cls) const {
      std::vector<Word> out;
      for (auto i : _members[cls]) out.push_back(_words[i]);
      return out;
    }

   private:
    std::string                         _generators;
    std::vector<std::pair<Word, Word>>  _relations;
    std::size_t                         _max;
    std::vector<Word>                   _words;
    std::unordered_map<Word, std::size_t> _index;
    std::vector<std::size_t>            _class;
    std::vector<std::vector<std::size_t>> _members;
  };

  //! The largest number of x and of y over the spellings of an element.
  struct WordClassStats {
    std::size_t chi_x = 0;
    std::size_t chi_y = 0;

    friend bool operator==(WordClassStats const&, WordClassStats const&) = default;
  };

  inline std::vector<WordClassStats> class_stats(BoundedFPMonoid const& m) {
    std::vector<WordClassStats> out(m.class_count());
    for (std::size_t c = 0; c < out.size(); ++c) {
      for (auto const& w : m.members(c)) {
        out[c].chi_x = std::max(out[c].chi_x, count_of(w, 'x'));
        out[c].chi_y = std::max(out[c].chi_y, count_of(w, 'y'));
      }
    }
    return out;
  }

  //! Every spelling of w, by breadth-first rewriting from w alone.
  inline std::set<Word> rewrite_orbit(Word const& w, std::vector<std::pair<Word, Word>> const& relations,
                                      std::size_t max_length) {
    std::set<Word>   seen{w};
    std::deque<Word> todo{w};
    while (!todo.empty()) {
      auto u = todo.front();
      todo.pop_front();
      for (auto& v : rewrites(u, relations, max_length)) {
        if (seen.insert(v).second) todo.push_back(std::move(v));
      }
    }
    return seen;
  }

  inline WordClassStats orbit_stats(Word const& w, std::vector<std::pair<Word, Word>> const& relations,
                                    std::size_t max_length) {
    WordClassStats s;
    for (auto const& v : rewrite_orbit(w, relations, max_length)) {
      s.chi_x = std::max(s.chi_x, count_of(v, 'x'));
      s.chi_y = std::max(s.chi_y, count_of(v, 'y'));
    }
    return s;
  }

  //! The monoid M = <x, y, z | xx = yy> at length bound L.
  inline BoundedFPMonoid bounded_m(std::size_t max_length) {
    return BoundedFPMonoid("xyz", {{"xx", "yy"}}, max_length);
  }

  //! The monoid N = <x, y | xx = yy> at length bound L.
  inline BoundedFPMonoid bounded_n(std::size_t max_length) {
    return BoundedFPMonoid("xy", {{"xx", "yy"}}, max_length);
  }

  inline Word erase_z(Word w) {
    w.erase(std::remove(w.begin(), w.end(), 'z'), w.end());
    return w;
  }

  //! Membership in M': an even number of x (invariant under xx = yy).
  inline bool in_m_prime(Word const& w) {
    return count_of(w, 'x') % 2 == 0;
  }

  //! The congruence on M' generated by (z^j, 1) for j >= 1, restricted to
  //! words of length at most L: the equivalence closure of s z^j t ~ s t
  //! with s, t in M', on top of the classes of M.
  class BoundedCongruence {
   public:
    explicit BoundedCongruence(BoundedFPMonoid const& m) : _m(m), _uf(m.class_count()) {
      for (auto const& w : m.words()) {
        if (!in_m_prime(w)) continue;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (w[i] != 'z' || !in_m_prime(w.substr(0, i))) continue;
          for (std::size_t j = i; j < w.size() && w[j] == 'z'; ++j) {
            auto shorter = w.substr(0, i) + w.substr(j + 1);
            if (_uf.unite(m.class_of(w), m.class_of(shorter))) ++_merges;
            ++_generating_pairs;
          }
        }
      }
    }

    [[nodiscard]] bool related(Word const& a, Word const& b) {
      return _uf.find(_m.class_of(a)) == _uf.find(_m.class_of(b));
    }

    //! Groups of M'-classes that the congruence identifies.
    [[nodiscard]] std::vector<std::vector<std::size_t>> blocks() {
      std::map<std::size_t, std::vector<std::size_t>> by_root;
      for (std::size_t c = 0; c < _m.class_count(); ++c) {
        if (!in_m_prime(_m.members(c).front())) continue;
        by_root[_uf.find(c)].push_back(c);
      }
      std::vector<std::vector<std::size_t>> out;
      for (auto& [r, cs] : by_root) out.push_back(std::move(cs));
      return out;
    }

    [[nodiscard]] std::size_t generating_pairs() const {
      return _generating_pairs;
    }

   private:
    BoundedFPMonoid const& _m;
    UnionFind              _uf;
    std::size_t            _merges           = 0;
    std::size_t            _generating_pairs = 0;
  };

  struct BoundedWordReport {
    std::size_t    bound = 0;
    std::size_t    words = 0;
    std::size_t    m_classes = 0;
    std::size_t    m_prime_classes = 0;
    std::size_t    n_classes = 0;
    std::size_t    congruence_blocks = 0;
    std::size_t    generating_pairs = 0;
    Word           a = "xzx";
    Word           b = "yzy";
    bool           in_kernel_pair = false;
    bool           in_congruence  = true;
    WordClassStats chi_a;
    WordClassStats chi_b;
    //! Related pairs (w1, w2) with chi(w1) = (2, 0) that were checked, and
    //! the first one breaking the invariant.
    std::size_t                      related_pairs_checked = 0;
    std::optional<std::pair<Word, Word>> invariant_violation;

    [[nodiscard]] bool passed() const {
      return in_kernel_pair && !in_congruence && !invariant_violation && chi_a == WordClassStats{2, 0}
             && chi_b.chi_y == 2;
    }
  };

  //! Bounded check that p' : M' -> N' is not a normal epi: (xzx, yzy) lies
  //! in its kernel pair but not in the congruence generated by its kernel,
  //! and the chi invariant separating them is preserved by that congruence.
  inline BoundedWordReport mon_counterexample_check(std::size_t max_length = 8) {
    if (max_length < 4) {
      fail(ErrorKind::invalid_input, "length bound " + std::to_string(max_length) + " is below the minimum of 4");
    }
    BoundedWordReport r;
    r.bound = max_length;
    auto m  = bounded_m(max_length);
    auto n  = bounded_n(max_length);
    r.words     = m.words().size();
    r.m_classes = m.class_count();
    r.n_classes = n.class_count();
    for (std::size_t c = 0; c < m.class_count(); ++c) r.m_prime_classes += in_m_prime(m.members(c).front());
    r.in_kernel_pair = in_m_prime(r.a) && in_m_prime(r.b) && n.equal(erase_z(r.a), erase_z(r.b));
    BoundedCongruence cong(m);
    r.generating_pairs = cong.generating_pairs();
    r.in_congruence    = cong.related(r.a, r.b);
    auto stats         = class_stats(m);
    r.chi_a            = stats[m.class_of(r.a)];
    r.chi_b            = stats[m.class_of(r.b)];
    auto blocks        = cong.blocks();
    r.congruence_blocks = blocks.size();
    for (auto const& block : blocks) {
      for (auto c1 : block) {
        if (!(stats[c1] == WordClassStats{2, 0})) continue;
        for (auto c2 : block) {
          ++r.related_pairs_checked;
          if (!(stats[c2] == WordClassStats{2, 0}) && !r.invariant_violation) {
            r.invariant_violation = std::pair{m.members(c1).front(), m.members(c2).front()};
          }
        }
      }
    }
    return r;
  }

}  // namespace prenormal::casestudies
