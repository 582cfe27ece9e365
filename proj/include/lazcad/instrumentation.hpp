#pragma once

#include <cstdint>

namespace lazcad {

// Work counters for the reuse-accounting checks. Single-threaded by design.
struct Counters {
    std::uint64_t resultant_calls = 0;
    std::uint64_t discriminant_calls = 0;
    std::uint64_t lazard_eval_calls = 0;

    void reset() { *this = Counters{}; }
};

Counters& counters();

}  // namespace lazcad
