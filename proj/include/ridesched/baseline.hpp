#pragma once

#include "ridesched/model.hpp"
#include "ridesched/preprocess.hpp"

namespace ridesched {

// Classical 8-step forward-slack scheduler: earliest schedule, route-level
// slack applied at the depot, then ride-time-aware slack applied at each
// pickup in order. Station-free routes only.
Schedule eight_step(const RouteSequence& route, const PreprocessedRoute& pre);

}  // namespace ridesched
