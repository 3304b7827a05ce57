#include "desattack/random_model.hpp"

#include "desattack/observer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

namespace desattack {

ModelFile random_model( const RandomModelOptions& options, std::uint64_t seed )
{
    std::mt19937_64 rng( seed );
    std::bernoulli_distribution edge( options.density );
    std::bernoulli_distribution controllable( options.controllable_probability );
    std::bernoulli_distribution compromised( options.compromised_probability );
    std::bernoulli_distribution disable( options.disable_probability );
    auto pick = [&rng]( std::size_t n ) { return std::uniform_int_distribution<std::size_t>( 0, n - 1 )( rng ); };

    ModelFile model;
    auto& u = model.universe;
    std::vector<EventId> events;
    for ( std::size_t i = 0; i < options.events; ++i )
        events.push_back( std::string( 1, static_cast<char>( 'a' + i ) ) );
    u.events.insert( events.begin(), events.end() );

    const std::size_t unobservable = std::min( pick( options.max_unobservable + 1 ), options.events > 0 ? options.events - 1 : 0 );
    std::vector<EventId> shuffled = events;
    std::ranges::shuffle( shuffled, rng );
    for ( std::size_t i = unobservable; i < shuffled.size(); ++i )
        u.observable.insert( shuffled[i] );
    for ( const auto& e : u.observable ) {
        if ( controllable( rng ) )
            u.controllable.insert( e );
        if ( compromised( rng ) )
            u.insertable.insert( e );
        if ( compromised( rng ) )
            u.erasable.insert( e );
    }
    for ( const auto& e : u.controllable )
        if ( compromised( rng ) )
            u.enableable.insert( e );

    auto& plant = model.plant;
    plant.add_labels( u.events );
    for ( std::size_t x = 0; x < options.states; ++x )
        plant.add_state( std::to_string( x ) );
    plant.set_initial( 0 );
    for ( std::size_t x = 0; x < options.states; ++x )
        for ( const auto& e : events )
            if ( edge( rng ) )
                plant.add_transition( x, e, pick( options.states ) );
    if ( options.states > 1 )
        model.unsafe.insert( 1 + pick( options.states - 1 ) );

    // Memory automaton over E_o: complete on uncontrollable observations,
    // partial on controllable ones.
    const std::size_t memory = std::max<std::size_t>( options.supervisor_memory, 1 );
    std::vector<std::map<EventId, std::size_t>> filter( memory );
    for ( auto& row : filter )
        for ( const auto& e : u.observable )
            if ( !u.is_controllable( e ) || !disable( rng ) )
                row[e] = pick( memory );

    const Observer obs = build_observer( plant, u );
    Automaton<EventId> sup;
    sup.add_labels( u.events );
    std::map<std::pair<StateIndex, std::size_t>, StateIndex> index;
    std::deque<std::pair<StateIndex, std::size_t>> queue;
    auto visit = [&]( std::pair<StateIndex, std::size_t> pair ) {
        auto [it, inserted] = index.emplace( pair, sup.size() );
        if ( inserted ) {
            sup.add_state( "y" + std::to_string( it->second ) );
            queue.push_back( pair );
        }
        return it->second;
    };
    sup.set_initial( visit( { obs.automaton.initial(), 0 } ) );
    while ( !queue.empty() ) {
        const auto [b, m] = queue.front();
        queue.pop_front();
        const StateIndex from = index.at( { b, m } );
        for ( const auto& [e, target] : obs.automaton.edges( b ) ) {
            auto it = filter[m].find( e );
            if ( it != filter[m].end() )
                sup.add_transition( from, e, visit( { target, it->second } ) );
        }
    }
    for ( StateIndex y = 0; y < sup.size(); ++y )
        for ( const auto& e : u.unobservable() )
            sup.add_transition( y, e, y );
    model.supervisor = std::move( sup );
    return model;
}

} // namespace desattack
