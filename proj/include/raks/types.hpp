#pragma once

#include <cstdint>
#include <limits>

namespace raks {

using NodeId = std::uint32_t;
using EdgeId = std::uint64_t;
using LabelId = std::uint32_t;

// Integer coarsened edge weight.
using Activation = std::uint32_t;

// Coarse path score / keyword-to-node distance.
using Distance = std::uint32_t;
inline constexpr Distance unreached = std::numeric_limits<Distance>::max();

}  // namespace raks
