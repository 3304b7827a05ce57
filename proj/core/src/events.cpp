#include "desattack/events.hpp"

#include "desattack/errors.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

namespace desattack {

namespace {

void require_subset( const EventSet& subset, const EventSet& superset, const char* what )
{
    for ( const auto& e : subset )
        if ( !superset.contains( e ) )
            throw UniverseError( std::string( what ) + ": event '" + e + "'" );
}

} // namespace

void check_event_name( const std::string& name )
{
    if ( name.empty() )
        throw UniverseError( "empty event name" );
    const bool printable = std::all_of( name.begin(), name.end(), []( unsigned char c ) { return std::isgraph( c ) != 0 || c >= 0x80; } );
    if ( !printable )
        throw UniverseError( "event name '" + name + "' contains whitespace or control characters" );
    if ( name.find( ':' ) != std::string::npos )
        throw UniverseError( "event name '" + name + "' contains ':'" );
    // The attack-label suffixes would make rendered words ambiguous.
    const char last = name.back();
    if ( last == '+' || last == '-' || last == '!' )
        throw UniverseError( "event name '" + name + "' ends with a reserved attack suffix" );
}

void EventUniverse::validate() const
{
    for ( const auto& e : events )
        check_event_name( e );
    require_subset( observable, events, "observable event not declared" );
    require_subset( controllable, events, "controllable event not declared" );
    require_subset( controllable, observable, "controllable event must be observable" );
    require_subset( insertable, observable, "insertable event must be observable" );
    require_subset( erasable, observable, "erasable event must be observable" );
    require_subset( enableable, controllable, "enableable event must be controllable" );
}

EventSet EventUniverse::unobservable() const
{
    EventSet result;
    std::ranges::set_difference( events, observable, std::inserter( result, result.end() ) );
    return result;
}

EventSet EventUniverse::uncontrollable() const
{
    EventSet result;
    std::ranges::set_difference( events, controllable, std::inserter( result, result.end() ) );
    return result;
}

} // namespace desattack
