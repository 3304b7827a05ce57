#include "desattack/dot.hpp"

#include <functional>
#include <sstream>

namespace desattack {

namespace {

template <typename Label>
std::string render( const Automaton<Label>& aut, std::string_view graph_name, const std::function<std::string_view( StateIndex )>& color )
{
    std::ostringstream out;
    out << "digraph " << dot_quote( graph_name ) << " {\n";
    out << "  rankdir=LR;\n";
    if ( !aut.empty() ) {
        out << "  \"__start\" [shape=point, label=\"\"];\n";
        for ( StateIndex s = 0; s < aut.size(); ++s ) {
            out << "  " << dot_quote( aut.name( s ) );
            if ( color )
                out << " [style=filled, fillcolor=" << color( s ) << "]";
            out << ";\n";
        }
        out << "  \"__start\" -> " << dot_quote( aut.name( aut.initial() ) ) << ";\n";
        for ( StateIndex s = 0; s < aut.size(); ++s )
            for ( const auto& [label, target] : aut.edges( s ) )
                out << "  " << dot_quote( aut.name( s ) ) << " -> " << dot_quote( aut.name( target ) ) << " [label=" << dot_quote( to_string( label ) ) << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace

std::string dot_quote( std::string_view text )
{
    std::string out = "\"";
    for ( char c : text ) {
        if ( c == '"' || c == '\\' )
            out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string export_dot( const Automaton<EventId>& aut, std::string_view graph_name )
{
    return render( aut, graph_name, {} );
}

std::string export_dot( const Automaton<AttackLabel>& aut, std::string_view graph_name )
{
    return render( aut, graph_name, {} );
}

std::string_view node_color( const AttackStructure& structure, StateIndex r )
{
    if ( structure.exposing.contains( r ) )
        return "gray";
    if ( structure.weakly_exposing && structure.weakly_exposing->contains( r ) )
        return "yellow";
    if ( structure.targets.contains( r ) )
        return "green";
    return "white";
}

std::string export_dot( const AttackStructure& structure, std::string_view graph_name )
{
    return render( structure.automaton, graph_name, [&]( StateIndex r ) { return node_color( structure, r ); } );
}

} // namespace desattack
