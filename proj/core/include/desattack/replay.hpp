#pragma once

#include "desattack/attack_alphabet.hpp"
#include "desattack/attack_structure.hpp"
#include "desattack/model_file.hpp"

#include <optional>
#include <string>
#include <vector>

namespace desattack {

struct ReplayStep
{
    AttackLabel label;
    /// Node of the attack structure reached by this step.
    StateIndex node;
    std::string node_name;
    EstimationState estimate;
    /// Supervisor state after the step; empty once the attack is exposed.
    std::optional<StateIndex> supervisor;
    /// ξ in force when the label occurred, and ξ' after any enablement.
    ControlInput control;
    ControlInput corrupted;
    bool target = false;
    bool exposing = false;
};

struct ReplayTrace
{
    StateIndex start = 0;
    std::string start_name;
    std::vector<ReplayStep> steps;

    /// Node where the trace ends (the start node if there are no steps).
    [[nodiscard]] StateIndex final_node() const { return steps.empty() ? start : steps.back().node; }
};

/// Walks `structure` along `word`. Throws WordRejectedError at the first
/// label without an edge.
[[nodiscard]] ReplayTrace replay( const AttackStructure& structure,
                                  const Automaton<EventId>& sup,
                                  const EventUniverse& universe,
                                  const AttackWord& word );

/// Builds the attack structure of `model` and replays `word` through it.
/// Throws Error if the model has no supervisor.
[[nodiscard]] ReplayTrace replay( const ModelFile& model, const AttackWord& word );

} // namespace desattack
