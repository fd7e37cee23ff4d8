#ifndef FUZZFRAC_SRC_PARALLEL_HPP
#define FUZZFRAC_SRC_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace fuzzfrac::detail {

// Splits [0, count) into contiguous chunks, one per worker, and runs
// body(begin, end) on each. Exceptions from workers are rethrown on the
// calling thread. Small ranges run inline.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace fuzzfrac::detail

#endif  // FUZZFRAC_SRC_PARALLEL_HPP
