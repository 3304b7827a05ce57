#include "desattack/supervisor_under_attack.hpp"

#include "desattack/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace desattack {

void check_supervisor_realization( const Automaton<EventId>& sup, const EventUniverse& universe )
{
    for ( const auto& e : sup.alphabet() )
        if ( !universe.contains( e ) )
            throw UnknownEventError( "supervisor uses undeclared event '" + e + "'" );
    for ( StateIndex y = 0; y < sup.size(); ++y )
        for ( const auto& [event, target] : sup.edges( y ) )
            if ( !universe.is_observable( event ) && target != y )
                throw RealizationError( "unobservable event '" + event + "' at supervisor state '" + sup.name( y ) + "' must be a self-loop" );
}

ControlInput control_input( const Automaton<EventId>& sup, StateIndex y, const EventUniverse& universe )
{
    return ControlInput( active_events( sup, y ), universe );
}

Automaton<EventId> closed_loop( const Automaton<EventId>& plant, const Automaton<EventId>& sup, const EventUniverse& universe )
{
    check_supervisor_realization( sup, universe );
    Automaton<EventId> realized;
    realized.add_labels( universe.events );
    for ( StateIndex y = 0; y < sup.size(); ++y )
        realized.add_state( sup.name( y ) );
    if ( !sup.empty() )
        realized.set_initial( sup.initial() );
    const EventSet unobservable = universe.unobservable();
    for ( StateIndex y = 0; y < sup.size(); ++y ) {
        for ( const auto& [event, target] : sup.edges( y ) )
            realized.add_transition( y, event, target );
        for ( const auto& e : unobservable )
            realized.add_transition( y, e, y );
    }
    return parallel_compose( plant, realized ).automaton;
}

bool ConsistentPairs::contains( StateIndex b, StateIndex y ) const
{
    return std::ranges::any_of( pairs, [&]( const ConsistentPair& p ) { return p.observer_state == b && p.supervisor_state == y; } );
}

EventSet ConsistentPairs::disabled_at( StateIndex y ) const
{
    EventSet result;
    for ( const auto& p : pairs )
        if ( p.supervisor_state == y )
            result.insert( p.disabled.begin(), p.disabled.end() );
    return result;
}

ConsistentPairs consistent_pairs( const Observer& observer, const Automaton<EventId>& sup, const EventUniverse& universe )
{
    check_supervisor_realization( sup, universe );
    const auto& obs = observer.automaton;
    ConsistentPairs result;
    std::set<std::pair<StateIndex, StateIndex>> seen{ { obs.initial(), sup.initial() } };
    std::deque<std::pair<StateIndex, StateIndex>> queue{ { obs.initial(), sup.initial() } };
    while ( !queue.empty() ) {
        const auto [b, y] = queue.front();
        queue.pop_front();
        const EventSet allowed = control_input( sup, y, universe ).enabled();
        ConsistentPair pair{ b, y, {} };
        for ( const auto& [event, target] : obs.edges( b ) ) {
            if ( !allowed.contains( event ) )
                pair.disabled.insert( event );
            // Synchronize on observations both sides can follow.
            if ( auto next = sup.successor( y, event ); next && seen.insert( { target, *next } ).second )
                queue.emplace_back( target, *next );
        }
        result.pairs.push_back( std::move( pair ) );
    }
    return result;
}

SupervisorUnderAttack build_supervisor_under_attack( const Automaton<EventId>& plant, const Automaton<EventId>& sup, const EventUniverse& universe )
{
    return build_supervisor_under_attack( build_observer( plant, universe ), sup, universe );
}

SupervisorUnderAttack build_supervisor_under_attack( const Observer& observer, const Automaton<EventId>& sup, const EventUniverse& universe )
{
    const ConsistentPairs relation = consistent_pairs( observer, sup, universe );

    SupervisorUnderAttack result;
    auto& aut = result.automaton;
    aut.add_labels( attack_alphabet( universe ) );
    for ( StateIndex y = 0; y < sup.size(); ++y )
        aut.add_state( sup.name( y ) );
    result.dummy = aut.add_state( std::string( dummy_state_name ) );
    aut.set_initial( sup.initial() );

    for ( StateIndex y = 0; y < sup.size(); ++y )
        for ( const auto& [event, target] : sup.edges( y ) )
            if ( universe.is_observable( event ) )
                aut.add_transition( y, AttackLabel::genuine( event ), target );

    std::vector<EventSet> disabled( sup.size() );
    for ( StateIndex y = 0; y < sup.size(); ++y )
        disabled[y] = relation.disabled_at( y );

    // Enablement of an event the supervisor disables while the plant can
    // execute it; the three conditions are independent.
    for ( const auto& e : universe.enableable ) {
        for ( StateIndex y = 0; y < sup.size(); ++y ) {
            if ( !disabled[y].contains( e ) )
                continue;
            aut.add_transition( y, AttackLabel::enabled( e ), result.dummy );
            if ( universe.insertable.contains( e ) )
                aut.add_transition( y, AttackLabel::inserted( e ), result.dummy );
            if ( universe.erasable.contains( e ) )
                aut.add_transition( y, AttackLabel::erased( e ), y );
        }
    }

    // Observations the supervisor cannot explain without an attack.
    for ( const auto& e : universe.observable ) {
        const auto genuine = AttackLabel::genuine( e );
        for ( StateIndex y = 0; y < sup.size(); ++y )
            if ( !aut.successor( y, genuine ) && !disabled[y].contains( e ) )
                aut.add_transition( y, genuine, result.dummy );
    }

    // Insertions look like the genuine event to the supervisor.
    for ( const auto& e : universe.insertable ) {
        const auto genuine = AttackLabel::genuine( e );
        for ( StateIndex y = 0; y < aut.size(); ++y )
            if ( auto target = aut.successor( y, genuine ) )
                aut.add_transition( y, AttackLabel::inserted( e ), *target );
    }

    // Erasures are invisible to the supervisor.
    for ( const auto& e : universe.erasable ) {
        const auto genuine = AttackLabel::genuine( e );
        for ( StateIndex y = 0; y < aut.size(); ++y )
            if ( aut.successor( y, genuine ) )
                aut.add_transition( y, AttackLabel::erased( e ), y );
    }
    return result;
}

} // namespace desattack
