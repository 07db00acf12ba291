#pragma once

#include <string>

namespace prenormal::sig {

  // monoid-like structures
  inline std::string const op       = "op";
  inline std::string const unit     = "unit";
  inline std::string const inv      = "inv";
  inline std::string const le       = "le";
  inline std::string const positive = "positive";

  // pointed sets
  inline std::string const base = "base";

  // relational structures
  inline std::string const rel = "rel";

  // groupoids: the carrier is the set of arrows, `comp(a, b)` is "a then b"
  // and is defined exactly when tgt(a) == src(b); src and tgt return the
  // identity arrow at the corresponding object.
  inline std::string const comp = "comp";
  inline std::string const src  = "src";
  inline std::string const tgt  = "tgt";

}  // namespace prenormal::sig
