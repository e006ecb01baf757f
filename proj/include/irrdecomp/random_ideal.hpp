#pragma once

#include <cstddef>
#include <cstdint>

#include "irrdecomp/core.hpp"

namespace irrdecomp {

/// Seeded random ideal with p generators in n variables and exponents in
/// [0, maxdeg]; the zero vector is never drawn. With generic set, each
/// variable's exponents are drawn without repetition, which needs
/// p <= maxdeg + 1 (UsageError otherwise). The result is normalized, so it
/// may hold fewer than p generators.
GeneratorSet gen_random(std::size_t n, std::size_t p, std::uint64_t maxdeg, std::uint64_t seed,
                        bool generic);

}  // namespace irrdecomp
