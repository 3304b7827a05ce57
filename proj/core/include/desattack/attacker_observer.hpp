#pragma once

#include "desattack/attack_alphabet.hpp"
#include "desattack/automaton.hpp"
#include "desattack/observer.hpp"

#include <vector>

namespace desattack {

/// Obs_att(G): the attacker's estimate of the plant state under any attack
/// word. Same states as Obs(G); insertions self-loop, erasures and
/// enablements copy the genuine edge.
struct AttackerObserver
{
    Automaton<AttackLabel> automaton;
    std::vector<EstimationState> estimates;
};

[[nodiscard]] AttackerObserver build_attacker_observer( const Automaton<EventId>& plant, const EventUniverse& universe );

/// Same construction starting from an already built observer.
[[nodiscard]] AttackerObserver build_attacker_observer( const Observer& observer, const EventUniverse& universe );

} // namespace desattack
