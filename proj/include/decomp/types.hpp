#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace decomp {

// Dense indices into a Dfa's state set and alphabet.
using State = std::uint32_t;
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

inline constexpr State kNoState = std::numeric_limits<State>::max();

}  // namespace decomp
