#include "desattack/model_file.hpp"

#include "desattack/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>
#include <vector>

namespace desattack {

namespace {

struct Line
{
    std::size_t number;
    std::vector<std::string> tokens;
};

struct Section
{
    std::size_t header_line = 0;
    std::vector<Line> lines;
};

std::vector<std::string> tokenize( std::string_view text )
{
    std::vector<std::string> tokens;
    std::istringstream in{ std::string( text ) };
    std::string token;
    while ( in >> token )
        tokens.push_back( token );
    return tokens;
}

/// Splits `key: a b c` (the colon may be glued to the key or stand alone).
std::optional<std::pair<std::string, std::vector<std::string>>> split_key( const Line& line )
{
    const auto& first = line.tokens.front();
    const auto colon = first.find( ':' );
    if ( colon == std::string::npos ) {
        if ( line.tokens.size() < 2 || !line.tokens[1].starts_with( ':' ) )
            return std::nullopt;
        std::vector<std::string> values;
        if ( line.tokens[1].size() > 1 )
            values.push_back( line.tokens[1].substr( 1 ) );
        values.insert( values.end(), line.tokens.begin() + 2, line.tokens.end() );
        return std::make_pair( first, std::move( values ) );
    }
    std::vector<std::string> values;
    if ( colon + 1 < first.size() )
        values.push_back( first.substr( colon + 1 ) );
    values.insert( values.end(), line.tokens.begin() + 1, line.tokens.end() );
    return std::make_pair( first.substr( 0, colon ), std::move( values ) );
}

std::map<std::string, Section> split_sections( std::string_view text )
{
    static const std::set<std::string> known{ "events", "compromised", "plant", "supervisor" };
    std::map<std::string, Section> sections;
    Section* current = nullptr;
    std::size_t number = 0;
    std::size_t start = 0;
    while ( start <= text.size() ) {
        auto end = text.find( '\n', start );
        if ( end == std::string_view::npos )
            end = text.size();
        std::string_view raw = text.substr( start, end - start );
        start = end + 1;
        ++number;
        if ( auto hash = raw.find( '#' ); hash != std::string_view::npos )
            raw = raw.substr( 0, hash );
        auto tokens = tokenize( raw );
        if ( tokens.empty() )
            continue;
        if ( tokens.front().starts_with( '[' ) ) {
            if ( tokens.size() != 1 || !tokens.front().ends_with( ']' ) )
                throw ParseError( number, "malformed section header" );
            const std::string name = tokens.front().substr( 1, tokens.front().size() - 2 );
            if ( !known.contains( name ) )
                throw ParseError( number, "unknown section [" + name + "]" );
            auto [it, inserted] = sections.emplace( name, Section{ number, {} } );
            if ( !inserted )
                throw ParseError( number, "duplicate section [" + name + "]" );
            current = &it->second;
            continue;
        }
        if ( current == nullptr )
            throw ParseError( number, "content before the first section" );
        current->lines.push_back( { number, std::move( tokens ) } );
    }
    return sections;
}

EventUniverse parse_events( const Section& section )
{
    EventUniverse universe;
    for ( const auto& line : section.lines ) {
        const auto& name = line.tokens.front();
        try {
            check_event_name( name );
        } catch ( const UniverseError& e ) {
            throw ParseError( line.number, e.what() );
        }
        if ( !universe.events.insert( name ).second )
            throw ParseError( line.number, "duplicate event '" + name + "'" );
        std::optional<bool> observable;
        std::optional<bool> controllable;
        for ( std::size_t i = 1; i < line.tokens.size(); ++i ) {
            const auto& flag = line.tokens[i];
            auto& slot = ( flag == "o" || flag == "uo" ) ? observable : controllable;
            if ( flag != "o" && flag != "uo" && flag != "c" && flag != "uc" )
                throw ParseError( line.number, "unknown event flag '" + flag + "'" );
            if ( slot )
                throw ParseError( line.number, "conflicting flags for event '" + name + "'" );
            slot = ( flag == "o" || flag == "c" );
        }
        if ( !observable || !controllable )
            throw ParseError( line.number, "event '" + name + "' needs one of o|uo and one of c|uc" );
        if ( *controllable && !*observable )
            throw ParseError( line.number, "controllable event '" + name + "' must be observable" );
        if ( *observable )
            universe.observable.insert( name );
        if ( *controllable )
            universe.controllable.insert( name );
    }
    return universe;
}

void parse_compromised( const Section& section, EventUniverse& universe )
{
    std::set<std::string> seen;
    for ( const auto& line : section.lines ) {
        auto entry = split_key( line );
        if ( !entry )
            throw ParseError( line.number, "expected 'ins:', 'era:' or 'ena:'" );
        auto& [key, names] = *entry;
        if ( !seen.insert( key ).second )
            throw ParseError( line.number, "duplicate '" + key + ":' line" );
        EventSet* target = nullptr;
        if ( key == "ins" )
            target = &universe.insertable;
        else if ( key == "era" )
            target = &universe.erasable;
        else if ( key == "ena" )
            target = &universe.enableable;
        else
            throw ParseError( line.number, "unknown compromised set '" + key + "'" );
        for ( const auto& name : names ) {
            if ( !universe.contains( name ) )
                throw ParseError( line.number, "undeclared event '" + name + "'" );
            if ( key == "ena" && !universe.is_controllable( name ) )
                throw ParseError( line.number, "enableable event '" + name + "' must be controllable" );
            if ( key != "ena" && !universe.is_observable( name ) )
                throw ParseError( line.number, ( key == "ins" ? "insertable" : "erasable" ) + std::string( " event '" ) + name + "' must be observable" );
            target->insert( name );
        }
    }
}

struct ParsedAutomaton
{
    Automaton<EventId> automaton;
    std::vector<std::string> unsafe;
};

ParsedAutomaton parse_automaton( const Section& section, const EventUniverse& universe, const char* what, bool allow_unsafe )
{
    ParsedAutomaton result;
    auto& aut = result.automaton;
    aut.add_labels( universe.events );
    auto ensure = [&aut]( const std::string& name ) {
        if ( auto found = aut.find_state( name ) )
            return *found;
        return aut.add_state( name );
    };

    std::optional<std::string> initial;
    std::vector<const Line*> transitions;
    bool seen_states = false;
    bool seen_unsafe = false;
    for ( const auto& line : section.lines ) {
        auto entry = split_key( line );
        if ( !entry ) {
            if ( line.tokens.size() != 3 )
                throw ParseError( line.number, "expected 'source event target'" );
            transitions.push_back( &line );
            continue;
        }
        auto& [key, values] = *entry;
        if ( key == "initial" ) {
            if ( initial )
                throw ParseError( line.number, "duplicate 'initial:' line" );
            if ( values.size() != 1 )
                throw ParseError( line.number, "'initial:' takes exactly one state" );
            initial = values.front();
        } else if ( key == "states" ) {
            if ( seen_states )
                throw ParseError( line.number, "duplicate 'states:' line" );
            seen_states = true;
            for ( const auto& name : values )
                ensure( name );
        } else if ( key == "unsafe" && allow_unsafe ) {
            if ( seen_unsafe )
                throw ParseError( line.number, "duplicate 'unsafe:' line" );
            seen_unsafe = true;
            result.unsafe = values;
        } else {
            throw ParseError( line.number, "unknown key '" + key + ":' in [" + what + "]" );
        }
    }
    if ( !initial )
        throw ParseError( section.header_line, std::string( "[" ) + what + "] has no 'initial:' line" );
    aut.set_initial( ensure( *initial ) );

    for ( const Line* line : transitions ) {
        const auto& source = line->tokens[0];
        const auto& event = line->tokens[1];
        const auto& target = line->tokens[2];
        if ( !universe.contains( event ) )
            throw ParseError( line->number, "undeclared event '" + event + "'" );
        const StateIndex from = ensure( source );
        const StateIndex to = ensure( target );
        try {
            aut.add_transition( from, event, to );
        } catch ( const NondeterminismError& ) {
            throw ParseError( line->number, "nondeterministic transition on '" + event + "' from '" + source + "'" );
        }
    }
    for ( const auto& name : result.unsafe )
        ensure( name );
    return result;
}

void write_list( std::ostringstream& out, const std::string& key, const std::vector<std::string>& values )
{
    out << key << ':';
    for ( const auto& v : values )
        out << ' ' << v;
    out << '\n';
}

std::vector<std::string> sorted_names( const Automaton<EventId>& aut )
{
    std::vector<std::string> names;
    for ( StateIndex s = 0; s < aut.size(); ++s )
        names.push_back( aut.name( s ) );
    std::ranges::sort( names );
    return names;
}

using NamedEdge = std::tuple<std::string, std::string, std::string>;

std::vector<NamedEdge> named_edges( const Automaton<EventId>& aut )
{
    std::vector<NamedEdge> edges;
    for ( StateIndex s = 0; s < aut.size(); ++s )
        for ( const auto& [event, target] : aut.edges( s ) )
            edges.emplace_back( aut.name( s ), event, aut.name( target ) );
    std::ranges::sort( edges );
    return edges;
}

void write_automaton( std::ostringstream& out, const Automaton<EventId>& aut )
{
    out << "initial: " << aut.name( aut.initial() ) << '\n';
    write_list( out, "states", sorted_names( aut ) );
}

void write_edges( std::ostringstream& out, const Automaton<EventId>& aut )
{
    for ( const auto& [source, event, target] : named_edges( aut ) )
        out << source << ' ' << event << ' ' << target << '\n';
}

} // namespace

ModelFile parse_model( std::string_view text )
{
    const auto sections = split_sections( text );
    ModelFile model;
    if ( auto it = sections.find( "events" ); it != sections.end() )
        model.universe = parse_events( it->second );
    if ( auto it = sections.find( "compromised" ); it != sections.end() )
        parse_compromised( it->second, model.universe );

    auto plant_it = sections.find( "plant" );
    if ( plant_it == sections.end() )
        throw ParseError( 1, "missing [plant] section" );
    auto plant = parse_automaton( plant_it->second, model.universe, "plant", true );
    model.plant = std::move( plant.automaton );
    for ( const auto& name : plant.unsafe )
        model.unsafe.insert( model.plant.state( name ) );

    if ( auto it = sections.find( "supervisor" ); it != sections.end() ) {
        auto sup = parse_automaton( it->second, model.universe, "supervisor", false );
        for ( const auto& line : it->second.lines ) {
            if ( line.tokens.size() != 3 || split_key( line ) )
                continue;
            if ( !model.universe.is_observable( line.tokens[1] ) && line.tokens[0] != line.tokens[2] )
                throw ParseError( line.number, "unobservable event '" + line.tokens[1] + "' must be a self-loop in the supervisor" );
        }
        model.supervisor = std::move( sup.automaton );
    }
    return model;
}

ModelFile load_model( const std::filesystem::path& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw Error( "cannot read '" + path.string() + "'" );
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_model( buffer.str() );
}

std::string serialize_model( const ModelFile& model )
{
    const auto& u = model.universe;
    std::ostringstream out;
    out << "[events]\n";
    for ( const auto& e : u.events )
        out << e << ' ' << ( u.is_observable( e ) ? "o" : "uo" ) << ' ' << ( u.is_controllable( e ) ? "c" : "uc" ) << '\n';

    out << "[compromised]\n";
    write_list( out, "ins", { u.insertable.begin(), u.insertable.end() } );
    write_list( out, "era", { u.erasable.begin(), u.erasable.end() } );
    write_list( out, "ena", { u.enableable.begin(), u.enableable.end() } );

    out << "[plant]\n";
    write_automaton( out, model.plant );
    std::vector<std::string> unsafe;
    for ( StateIndex x : model.unsafe )
        unsafe.push_back( model.plant.name( x ) );
    std::ranges::sort( unsafe );
    write_list( out, "unsafe", unsafe );
    write_edges( out, model.plant );

    if ( model.supervisor ) {
        out << "[supervisor]\n";
        write_automaton( out, *model.supervisor );
        write_edges( out, *model.supervisor );
    }
    return out.str();
}

bool same_structure( const Automaton<EventId>& a, const Automaton<EventId>& b )
{
    if ( a.empty() || b.empty() )
        return a.empty() && b.empty();
    return a.alphabet() == b.alphabet() && a.name( a.initial() ) == b.name( b.initial() ) && sorted_names( a ) == sorted_names( b )
        && named_edges( a ) == named_edges( b );
}

bool same_model( const ModelFile& a, const ModelFile& b )
{
    auto unsafe_names = []( const ModelFile& m ) {
        std::set<std::string> names;
        for ( StateIndex x : m.unsafe )
            names.insert( m.plant.name( x ) );
        return names;
    };
    if ( a.universe != b.universe || !same_structure( a.plant, b.plant ) || unsafe_names( a ) != unsafe_names( b ) )
        return false;
    if ( a.supervisor.has_value() != b.supervisor.has_value() )
        return false;
    return !a.supervisor || same_structure( *a.supervisor, *b.supervisor );
}

} // namespace desattack
