#include "desattack/replay.hpp"

#include "desattack/errors.hpp"
#include "desattack/supervisor_under_attack.hpp"

#include <algorithm>

namespace desattack {

WordRejectedError::WordRejectedError( std::size_t position, std::string label, std::vector<std::string> available )
    : Error( "word rejected at position " + std::to_string( position ) + ": no edge labelled '" + label + "'" ),
      position_{ position }, label_{ std::move( label ) }, available_{ std::move( available ) }
{}

ReplayTrace replay( const AttackStructure& structure, const Automaton<EventId>& sup, const EventUniverse& universe, const AttackWord& word )
{
    const auto& aut = structure.automaton;
    ReplayTrace trace;
    trace.start = aut.initial();
    trace.start_name = aut.name( trace.start );

    StateIndex current = trace.start;
    for ( std::size_t i = 0; i < word.size(); ++i ) {
        const auto& label = word[i];
        auto next = aut.successor( current, label );
        if ( !next ) {
            std::vector<std::string> available;
            for ( const auto& [l, target] : aut.edges( current ) )
                available.push_back( to_string( l ) );
            std::ranges::sort( available );
            throw WordRejectedError( i + 1, to_string( label ), std::move( available ) );
        }
        // The dummy node has no outgoing edges, so the source always has a
        // supervisor state.
        const ControlInput control = control_input( sup, *structure.nodes[current].supervisor, universe );
        EventSet enable;
        if ( label.kind == AttackKind::Enabled )
            enable.insert( label.event );
        const AttackNode& node = structure.nodes[*next];
        trace.steps.push_back( ReplayStep{
            label,
            *next,
            aut.name( *next ),
            node.estimate,
            node.supervisor,
            control,
            corrupt_control_input( control, enable, universe ),
            structure.targets.contains( *next ),
            structure.exposing.contains( *next ),
        } );
        current = *next;
    }
    return trace;
}

ReplayTrace replay( const ModelFile& model, const AttackWord& word )
{
    if ( !model.supervisor )
        throw Error( "model has no [supervisor] section" );
    const auto structure = build_attack_structure( model.plant, *model.supervisor, model.universe, model.unsafe );
    return replay( structure, *model.supervisor, model.universe, word );
}

} // namespace desattack
