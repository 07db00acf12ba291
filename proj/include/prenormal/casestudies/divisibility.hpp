#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "../core/error.hpp"

namespace prenormal::casestudies {

  //! The one-object category whose arrows are the positive integers under
  //! multiplication, with the multiples of 10 as trivial maps.  Searches
  //! for universal arrows range over 1..bound.
  class IdealCategory {
   public:
    static constexpr std::uint64_t modulus = 10;

    explicit IdealCategory(std::uint64_t bound = 1000) : _bound(bound) {
      if (bound < modulus) fail(ErrorKind::invalid_input, "bound must be at least 10");
    }

    [[nodiscard]] std::uint64_t bound() const {
      return _bound;
    }

    [[nodiscard]] static bool is_trivial(std::uint64_t n) {
      return n % modulus == 0;
    }

    //! The least k with n k trivial through which every such m factors,
    //! by exhaustive search; nothing when no such k exists within bound.
    [[nodiscard]] std::optional<std::uint64_t> kernel(std::uint64_t n) const {
      require(n);
      std::optional<std::uint64_t> least;
      for (std::uint64_t k = 1; k <= _bound; ++k) {
        if (!is_trivial(n * k)) continue;
        if (!least) {
          least = k;
        } else if (k % *least != 0) {
          return std::nullopt;
        }
      }
      return least;
    }

    //! The least c with c n trivial through which every such m factors.
    [[nodiscard]] std::optional<std::uint64_t> cokernel(std::uint64_t n) const {
      require(n);
      std::optional<std::uint64_t> least;
      for (std::uint64_t c = 1; c <= _bound; ++c) {
        if (!is_trivial(c * n)) continue;
        if (!least) {
          least = c;
        } else if (c % *least != 0) {
          return std::nullopt;
        }
      }
      return least;
    }

    //! The only isomorphism is 1, so e is a normal epi iff it is the
    //! cokernel of its own kernel.
    [[nodiscard]] bool is_normal_epi(std::uint64_t e) const {
      auto k = kernel(e);
      return k && cokernel(*k) == e;
    }

    [[nodiscard]] bool has_trivial_kernel(std::uint64_t m) const {
      auto k = kernel(m);
      return k && is_trivial(*k);
    }

    [[nodiscard]] std::set<std::uint64_t> normal_epis() const {
      std::set<std::uint64_t> out;
      for (std::uint64_t e = 1; e <= _bound; ++e) {
        if (is_normal_epi(e)) out.insert(e);
      }
      return out;
    }

   private:
    void require(std::uint64_t n) const {
      if (n == 0 || n > _bound) {
        fail(ErrorKind::invalid_input, std::to_string(n) + " is not an arrow within bound " + std::to_string(_bound));
      }
    }

    std::uint64_t _bound;
  };

  //! 10 / gcd(n, 10).
  inline std::uint64_t kernel_by_gcd(std::uint64_t n) {
    return IdealCategory::modulus / std::gcd(n, IdealCategory::modulus);
  }

  //! 0 when k divides n, 1 otherwise.
  inline unsigned divisibility_defect(std::uint64_t n, std::uint64_t k) {
    return n % k == 0 ? 0 : 1;
  }

  //! 2^D(n,5) 5^D(n,2), the kernel formula as it is usually displayed.
  inline std::uint64_t displayed_formula(std::uint64_t n) {
    return (divisibility_defect(n, 5) ? 2 : 1) * (divisibility_defect(n, 2) ? 5 : 1);
  }

  //! 2^D(n,2) 5^D(n,5), the displayed formula with its arguments swapped.
  inline std::uint64_t transposed_formula(std::uint64_t n) {
    return (divisibility_defect(n, 2) ? 2 : 1) * (divisibility_defect(n, 5) ? 5 : 1);
  }

  struct IdealFactorisation {
    std::uint64_t n = 0;
    //! Every split n = e m with e a normal epi and m of trivial kernel.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> factorisations;
    //! The forced candidate: e = coker(ker n), then m = n / e.
    std::uint64_t kernel_of_n = 0;
    std::uint64_t forced_e    = 0;
    std::uint64_t residual_m  = 0;
    std::uint64_t kernel_of_m = 0;
    std::string   obstruction;

    [[nodiscard]] bool exists() const {
      return !factorisations.empty();
    }
  };

  inline IdealFactorisation ideal_factorise(IdealCategory const& c, std::uint64_t n) {
    IdealFactorisation r;
    r.n = n;
    for (std::uint64_t e = 1; e <= n; ++e) {
      if (n % e != 0) continue;
      if (c.is_normal_epi(e) && c.has_trivial_kernel(n / e)) r.factorisations.emplace_back(e, n / e);
    }
    auto k = c.kernel(n);
    if (!k) {
      r.obstruction = "no kernel within bound";
      return r;
    }
    r.kernel_of_n = *k;
    r.forced_e    = c.cokernel(*k).value_or(0);
    if (r.forced_e == 0 || n % r.forced_e != 0) {
      r.obstruction = "the cokernel of the kernel does not divide n";
      return r;
    }
    r.residual_m  = n / r.forced_e;
    r.kernel_of_m = c.kernel(r.residual_m).value_or(0);
    if (!r.exists()) {
      r.obstruction = "ker(" + std::to_string(n) + ") = " + std::to_string(r.kernel_of_n) + ", coker("
                      + std::to_string(r.kernel_of_n) + ") = " + std::to_string(r.forced_e) + ", so e = "
                      + std::to_string(r.forced_e) + " and m = " + std::to_string(r.residual_m)
                      + ", but ker(" + std::to_string(r.residual_m) + ") = " + std::to_string(r.kernel_of_m)
                      + " is not a multiple of 10";
    }
    return r;
  }

}  // namespace prenormal::casestudies
