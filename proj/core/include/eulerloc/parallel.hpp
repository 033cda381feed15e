#pragma once

#include <cstddef>
#include <functional>

namespace eulerloc {

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Exceptions are
/// rethrown on the caller (the one with the smallest index wins, so failures
/// are reported deterministically).
void parallel_for(std::size_t jobs, std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace eulerloc
