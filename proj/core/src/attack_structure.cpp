#include "desattack/attack_structure.hpp"

#include "desattack/attacker_observer.hpp"
#include "desattack/supervisor_under_attack.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

namespace desattack {

namespace {

void classify( AttackStructure& structure )
{
    structure.targets = target_states( structure );
    structure.exposing = exposing_states( structure );
}

/// Outgoing edges ordered by rendered label, for reproducible searches.
std::vector<std::pair<std::string, std::pair<AttackLabel, StateIndex>>> sorted_edges( const Automaton<AttackLabel>& aut, StateIndex node )
{
    std::vector<std::pair<std::string, std::pair<AttackLabel, StateIndex>>> out;
    for ( const auto& [label, target] : aut.edges( node ) )
        out.emplace_back( to_string( label ), std::make_pair( label, target ) );
    std::ranges::sort( out, []( const auto& a, const auto& b ) { return a.first < b.first; } );
    return out;
}

} // namespace

AttackStructure build_attack_structure( const Automaton<EventId>& plant,
                                        const Automaton<EventId>& sup,
                                        const EventUniverse& universe,
                                        const std::set<StateIndex>& unsafe )
{
    for ( StateIndex x : unsafe )
        plant.check_state( x );
    const Observer observer = build_observer( plant, universe );
    const AttackerObserver attacker = build_attacker_observer( observer, universe );
    const SupervisorUnderAttack supervisor = build_supervisor_under_attack( observer, sup, universe );
    auto product = parallel_compose( attacker.automaton, supervisor.automaton );

    AttackStructure structure;
    structure.automaton = std::move( product.automaton );
    structure.unsafe = unsafe;
    structure.nodes.reserve( product.pairs.size() );
    for ( const auto& [b, y] : product.pairs ) {
        AttackNode node{ attacker.estimates[b], std::nullopt };
        if ( !supervisor.is_dummy( y ) )
            node.supervisor = y;
        structure.nodes.push_back( std::move( node ) );
    }
    classify( structure );
    return structure;
}

NodeSet target_states( const AttackStructure& structure )
{
    NodeSet result;
    for ( StateIndex r = 0; r < structure.nodes.size(); ++r )
        if ( structure.nodes[r].estimate.intersects( structure.unsafe ) )
            result.insert( r );
    return result;
}

NodeSet exposing_states( const AttackStructure& structure )
{
    NodeSet result;
    for ( StateIndex r = 0; r < structure.nodes.size(); ++r )
        if ( structure.nodes[r].is_dummy() )
            result.insert( r );
    return result;
}

EventSet spontaneous_events( const Automaton<AttackLabel>& structure, StateIndex node )
{
    EventSet genuine;
    EventSet erased;
    EventSet enabled;
    for ( const auto& [label, target] : structure.edges( node ) ) {
        switch ( label.kind ) {
        case AttackKind::Genuine:
            genuine.insert( label.event );
            break;
        case AttackKind::Erased:
            erased.insert( label.event );
            break;
        case AttackKind::Enabled:
            enabled.insert( label.event );
            break;
        case AttackKind::Inserted:
            break;
        }
    }
    for ( const auto& e : erased )
        if ( !enabled.contains( e ) )
            genuine.insert( e );
    return genuine;
}

NodeSet weakly_exposing_region( const AttackStructure& structure )
{
    const auto& aut = structure.automaton;
    const std::size_t n = aut.size();

    std::vector<EventSet> spontaneous( n );
    // Insertion edges leaving the region, per node.
    std::vector<std::size_t> escapes( n, 0 );
    // Variant edges (e, e-) leaving the region, per node and spontaneous event.
    std::vector<std::map<EventId, std::size_t>> pending( n );
    std::vector<std::vector<std::pair<StateIndex, const AttackLabel*>>> predecessors( n );

    for ( StateIndex r = 0; r < n; ++r ) {
        spontaneous[r] = spontaneous_events( aut, r );
        for ( const auto& [label, target] : aut.edges( r ) ) {
            predecessors[target].emplace_back( r, &label );
            if ( label.kind == AttackKind::Inserted )
                ++escapes[r];
            else if ( label.kind != AttackKind::Enabled && spontaneous[r].contains( label.event ) )
                ++pending[r][label.event];
        }
    }

    std::vector<bool> in_region( n, false );
    std::deque<StateIndex> queue;
    for ( StateIndex r : exposing_states( structure ) ) {
        in_region[r] = true;
        queue.push_back( r );
    }

    while ( !queue.empty() ) {
        const StateIndex t = queue.front();
        queue.pop_front();
        for ( const auto& [r, label] : predecessors[t] ) {
            if ( in_region[r] )
                continue;
            if ( label->kind == AttackKind::Inserted )
                --escapes[r];
            else if ( label->kind != AttackKind::Enabled && spontaneous[r].contains( label->event ) )
                --pending[r][label->event];
            else
                continue;
            const bool forced = std::ranges::any_of( pending[r], []( const auto& entry ) { return entry.second == 0; } );
            if ( escapes[r] == 0 && forced ) {
                in_region[r] = true;
                queue.push_back( r );
            }
        }
    }

    NodeSet region;
    for ( StateIndex r = 0; r < n; ++r )
        if ( in_region[r] )
            region.insert( r );
    return region;
}

AttackStructure with_weakly_exposing_region( AttackStructure structure )
{
    structure.weakly_exposing = weakly_exposing_region( structure );
    return structure;
}

AttackStructure supremal_substructure( const AttackStructure& structure )
{
    const NodeSet region = structure.weakly_exposing ? *structure.weakly_exposing : weakly_exposing_region( structure );
    std::vector<bool> keep( structure.size(), true );
    for ( StateIndex r : region )
        keep[r] = false;

    auto restriction = restrict_states( structure.automaton, keep );
    AttackStructure result;
    result.automaton = std::move( restriction.automaton );
    result.unsafe = structure.unsafe;
    for ( StateIndex original : restriction.original )
        result.nodes.push_back( structure.nodes[original] );
    classify( result );
    result.weakly_exposing = weakly_exposing_region( result );
    return result;
}

std::optional<AttackWord> shortest_target_word( const AttackStructure& structure )
{
    if ( structure.empty() )
        return std::nullopt;
    const auto& aut = structure.automaton;
    const auto targets = target_states( structure );

    std::vector<std::optional<std::pair<StateIndex, AttackLabel>>> parent( aut.size() );
    std::vector<bool> seen( aut.size(), false );
    std::deque<StateIndex> queue{ aut.initial() };
    seen[aut.initial()] = true;
    // FIFO order with sorted expansion visits every node first along its
    // lexicographically least shortest word.
    while ( !queue.empty() ) {
        const StateIndex current = queue.front();
        queue.pop_front();
        if ( targets.contains( current ) ) {
            AttackWord word;
            for ( StateIndex at = current; parent[at]; at = parent[at]->first )
                word.push_back( parent[at]->second );
            std::ranges::reverse( word );
            return word;
        }
        for ( const auto& [text, edge] : sorted_edges( aut, current ) ) {
            const auto& [label, target] = edge;
            if ( seen[target] )
                continue;
            seen[target] = true;
            parent[target] = std::make_pair( current, label );
            queue.push_back( target );
        }
    }
    return std::nullopt;
}

Analysis run_analysis( const Automaton<EventId>& plant,
                       const Automaton<EventId>& sup,
                       const EventUniverse& universe,
                       const std::set<StateIndex>& unsafe )
{
    Analysis analysis;
    analysis.structure = with_weakly_exposing_region( build_attack_structure( plant, sup, universe, unsafe ) );
    analysis.supremal = supremal_substructure( analysis.structure );

    auto& verdict = analysis.verdict;
    verdict.effective = !analysis.structure.targets.empty();
    verdict.stealthy_effective = !analysis.supremal.targets.empty();
    if ( verdict.stealthy_effective )
        verdict.witness = shortest_target_word( analysis.supremal );
    verdict.robust = !verdict.stealthy_effective;
    return analysis;
}

Verdict analyze( const Automaton<EventId>& plant,
                 const Automaton<EventId>& sup,
                 const EventUniverse& universe,
                 const std::set<StateIndex>& unsafe )
{
    return run_analysis( plant, sup, universe, unsafe ).verdict;
}

std::optional<AttackWord> find_stealthiness_violation( const AttackStructure& supremal,
                                                       const Automaton<EventId>& plant,
                                                       const Automaton<EventId>& sup,
                                                       const EventUniverse& universe,
                                                       std::size_t max_len )
{
    if ( supremal.empty() )
        return std::nullopt;
    const Observer observed = build_observer( closed_loop( plant, sup, universe ), universe );
    const auto& obs = observed.automaton;

    struct Item
    {
        StateIndex node;
        StateIndex observation;
        AttackWord word;
    };
    std::set<std::pair<StateIndex, StateIndex>> seen{ { supremal.automaton.initial(), obs.initial() } };
    std::deque<Item> queue{ { supremal.automaton.initial(), obs.initial(), {} } };
    while ( !queue.empty() ) {
        Item item = std::move( queue.front() );
        queue.pop_front();
        if ( item.word.size() >= max_len )
            continue;
        for ( const auto& [text, edge] : sorted_edges( supremal.automaton, item.node ) ) {
            const auto& [label, target] = edge;
            AttackWord word = item.word;
            word.push_back( label );
            StateIndex observation = item.observation;
            if ( label.kind != AttackKind::Erased ) {
                auto next = obs.successor( observation, label.event );
                if ( !next )
                    return word;
                observation = *next;
            }
            if ( seen.insert( { target, observation } ).second )
                queue.push_back( { target, observation, std::move( word ) } );
        }
    }
    return std::nullopt;
}

} // namespace desattack
