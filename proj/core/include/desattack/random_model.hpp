#pragma once

#include "desattack/model_file.hpp"

#include <cstddef>
#include <cstdint>

namespace desattack {

struct RandomModelOptions
{
    std::size_t states = 6;
    std::size_t events = 4;
    std::size_t max_unobservable = 2;
    /// Probability that a given (state, event) transition exists.
    double density = 0.45;
    double controllable_probability = 0.7;
    double compromised_probability = 0.4;
    /// Probability that the supervisor disables a controllable observation.
    double disable_probability = 0.3;
    /// Number of memory states the supervisor may keep beyond the observer.
    std::size_t supervisor_memory = 2;
};

/// Random plant with a supervisor built as a reachable product of the
/// plant observer with a small memory automaton over E_o. The supervisor
/// only disables controllable events, self-loops every unobservable event,
/// and never follows an observation the plant cannot produce.
[[nodiscard]] ModelFile random_model( const RandomModelOptions& options, std::uint64_t seed );

} // namespace desattack
