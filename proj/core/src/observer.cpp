#include "desattack/observer.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace desattack {

bool EstimationState::intersects( const std::set<StateIndex>& other ) const
{
    return std::ranges::any_of( members_, [&]( StateIndex x ) { return other.contains( x ); } );
}

std::string EstimationState::render( const Automaton<EventId>& plant ) const
{
    std::vector<std::string> names;
    for ( StateIndex x : members_ )
        names.push_back( plant.name( x ) );
    std::ranges::sort( names );
    std::string out = "{";
    for ( std::size_t i = 0; i < names.size(); ++i ) {
        if ( i > 0 )
            out += ',';
        out += names[i];
    }
    return out + "}";
}

Word natural_projection( std::span<const EventId> word, const EventSet& keep )
{
    Word result;
    for ( const auto& e : word )
        if ( keep.contains( e ) )
            result.push_back( e );
    return result;
}

namespace {

void close_unobservable( const Automaton<EventId>& plant, const EventUniverse& universe, std::set<StateIndex>& members )
{
    std::vector<StateIndex> stack( members.begin(), members.end() );
    while ( !stack.empty() ) {
        const StateIndex current = stack.back();
        stack.pop_back();
        for ( const auto& [event, target] : plant.edges( current ) ) {
            if ( universe.is_observable( event ) )
                continue;
            if ( members.insert( target ).second )
                stack.push_back( target );
        }
    }
}

} // namespace

EstimationState unobservable_reach( const Automaton<EventId>& plant, const EventUniverse& universe, StateIndex x )
{
    plant.check_state( x );
    std::set<StateIndex> members{ x };
    close_unobservable( plant, universe, members );
    return EstimationState( std::move( members ) );
}

Observer build_observer( const Automaton<EventId>& plant, const EventUniverse& universe )
{
    Observer obs;
    for ( const auto& e : plant.alphabet() )
        if ( universe.is_observable( e ) )
            obs.automaton.add_label( e );

    std::map<EstimationState, StateIndex> index;
    std::deque<StateIndex> queue;
    auto visit = [&]( EstimationState estimate ) {
        auto it = index.find( estimate );
        if ( it != index.end() )
            return it->second;
        const StateIndex id = obs.automaton.add_state( estimate.render( plant ) );
        index.emplace( estimate, id );
        obs.estimates.push_back( std::move( estimate ) );
        queue.push_back( id );
        return id;
    };

    obs.automaton.set_initial( visit( unobservable_reach( plant, universe, plant.initial() ) ) );
    while ( !queue.empty() ) {
        const StateIndex current = queue.front();
        queue.pop_front();
        std::map<EventId, std::set<StateIndex>> moves;
        for ( StateIndex x : obs.estimates[current].members() )
            for ( const auto& [event, target] : plant.edges( x ) )
                if ( universe.is_observable( event ) )
                    moves[event].insert( target );
        for ( auto& [event, targets] : moves ) {
            close_unobservable( plant, universe, targets );
            const StateIndex next = visit( EstimationState( std::move( targets ) ) );
            obs.automaton.add_transition( current, event, next );
        }
    }
    return obs;
}

} // namespace desattack
