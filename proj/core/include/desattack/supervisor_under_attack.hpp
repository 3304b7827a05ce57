#pragma once

#include "desattack/attack_alphabet.hpp"
#include "desattack/automaton.hpp"
#include "desattack/observer.hpp"

#include <string_view>
#include <vector>

namespace desattack {

/// Display name of the dummy state y_∅ reached when the attack is detected.
inline constexpr std::string_view dummy_state_name = "y_empty";

/// Throws RealizationError if an unobservable transition of `sup` is not a
/// self-loop, UnknownEventError if `sup` uses an undeclared event.
///
/// A supervisor is an automaton over E that is driven by observations only;
/// unobservable events may appear solely as self-loops, and the active
/// events at y (plus E_uc) form the control input there.
void check_supervisor_realization( const Automaton<EventId>& sup, const EventUniverse& universe );

/// Γ(y) ∪ E_uc at supervisor state y.
[[nodiscard]] ControlInput control_input( const Automaton<EventId>& sup, StateIndex y, const EventUniverse& universe );

/// S_P/G = G ∥ S_P, with unobservable self-loops completed on the supervisor
/// side since unobservable events cannot be disabled.
[[nodiscard]] Automaton<EventId> closed_loop( const Automaton<EventId>& plant, const Automaton<EventId>& sup, const EventUniverse& universe );

struct ConsistentPair
{
    StateIndex observer_state;
    StateIndex supervisor_state;
    /// D(b, y) = Γ(b) \ (Γ(y) ∪ E_uc): observable events the plant could
    /// execute that the supervisor disables.
    EventSet disabled;
};

/// Pairs (b, y) reachable by a common observation, found by a product sweep
/// of the observer with the observable part of the supervisor.
struct ConsistentPairs
{
    std::vector<ConsistentPair> pairs;

    [[nodiscard]] bool contains( StateIndex b, StateIndex y ) const;
    /// Union of D(b, y) over all pairs with supervisor state y.
    [[nodiscard]] EventSet disabled_at( StateIndex y ) const;
};

[[nodiscard]] ConsistentPairs consistent_pairs( const Observer& observer, const Automaton<EventId>& sup, const EventUniverse& universe );

/// S_Pa over the attack alphabet. States 0..|Y|-1 mirror the supervisor;
/// `dummy` is y_∅, which has no outgoing transitions.
struct SupervisorUnderAttack
{
    Automaton<AttackLabel> automaton;
    StateIndex dummy = 0;

    [[nodiscard]] bool is_dummy( StateIndex y ) const { return y == dummy; }
};

[[nodiscard]] SupervisorUnderAttack build_supervisor_under_attack( const Automaton<EventId>& plant, const Automaton<EventId>& sup, const EventUniverse& universe );
[[nodiscard]] SupervisorUnderAttack build_supervisor_under_attack( const Observer& observer, const Automaton<EventId>& sup, const EventUniverse& universe );

} // namespace desattack
