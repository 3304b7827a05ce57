#include "desattack/attacker_observer.hpp"

namespace desattack {

AttackerObserver build_attacker_observer( const Automaton<EventId>& plant, const EventUniverse& universe )
{
    return build_attacker_observer( build_observer( plant, universe ), universe );
}

AttackerObserver build_attacker_observer( const Observer& observer, const EventUniverse& universe )
{
    AttackerObserver result;
    auto& aut = result.automaton;
    aut.add_labels( attack_alphabet( universe ) );
    const auto& obs = observer.automaton;
    for ( StateIndex b = 0; b < obs.size(); ++b )
        aut.add_state( obs.name( b ) );
    aut.set_initial( obs.initial() );
    result.estimates = observer.estimates;

    for ( StateIndex b = 0; b < obs.size(); ++b ) {
        for ( const auto& [event, target] : obs.edges( b ) ) {
            aut.add_transition( b, AttackLabel::genuine( event ), target );
            if ( universe.erasable.contains( event ) )
                aut.add_transition( b, AttackLabel::erased( event ), target );
            if ( universe.enableable.contains( event ) )
                aut.add_transition( b, AttackLabel::enabled( event ), target );
        }
        for ( const auto& event : universe.insertable )
            aut.add_transition( b, AttackLabel::inserted( event ), b );
    }
    return result;
}

} // namespace desattack
