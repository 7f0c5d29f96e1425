#pragma once

#include "gfree/io.hpp"

#include <doctest.h>

#include <optional>
#include <string>
#include <vector>

namespace gfree::testing {

inline ProblemFile problem(const std::string& text) { return parse_problem(text); }

inline FreeElem elem(const ProblemFile& p, const std::string& s) { return parse_element(p, s); }

inline std::string str(const FreeModule& F, const FreeElem& w) { return to_string(F, w); }

inline RingElem zz(long v) { return CoeffDomain::integers().from_int(v); }

// A few random GF(2)[t] instances have very long pair queues; fuzz loops skip them.
inline std::optional<GroebnerBasis> capped_gb(const FreeModule& F, const std::vector<FreeElem>& gens,
                                              Exec exec = Exec::Serial) {
  BuchbergerOptions o;
  o.fuel = 400;
  o.exec = exec;
  try {
    return buchberger(F, gens, o);
  } catch (const FuelExhausted&) {
    return std::nullopt;
  }
}

}  // namespace gfree::testing
