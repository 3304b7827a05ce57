#include "desattack/attack_alphabet.hpp"

#include "desattack/errors.hpp"

#include <sstream>

namespace desattack {

std::string to_string( const AttackLabel& label )
{
    switch ( label.kind ) {
    case AttackKind::Genuine:
        return label.event;
    case AttackKind::Inserted:
        return label.event + "+";
    case AttackKind::Erased:
        return label.event + "-";
    case AttackKind::Enabled:
        return label.event + "!";
    }
    return label.event;
}

std::string to_string( const AttackWord& word )
{
    std::string out;
    for ( const auto& label : word ) {
        if ( !out.empty() )
            out += ' ';
        out += to_string( label );
    }
    return out;
}

AttackLabel parse_attack_label( std::string_view token, const EventUniverse& universe )
{
    if ( token.empty() )
        throw UnknownEventError( "empty attack label" );
    AttackKind kind = AttackKind::Genuine;
    std::string_view event = token;
    switch ( token.back() ) {
    case '+':
        kind = AttackKind::Inserted;
        break;
    case '-':
        kind = AttackKind::Erased;
        break;
    case '!':
        kind = AttackKind::Enabled;
        break;
    default:
        break;
    }
    if ( kind != AttackKind::Genuine )
        event.remove_suffix( 1 );
    if ( event.empty() || !universe.contains( std::string( event ) ) )
        throw UnknownEventError( "unknown event '" + std::string( event ) + "' in label '" + std::string( token ) + "'" );
    return { kind, std::string( event ) };
}

AttackWord parse_attack_word( std::string_view text, const EventUniverse& universe )
{
    AttackWord word;
    std::istringstream in{ std::string( text ) };
    std::string token;
    while ( in >> token )
        word.push_back( parse_attack_label( token, universe ) );
    return word;
}

std::set<AttackLabel> attack_alphabet( const EventUniverse& universe )
{
    std::set<AttackLabel> result;
    for ( const auto& e : universe.observable )
        result.insert( AttackLabel::genuine( e ) );
    for ( const auto& e : universe.insertable )
        result.insert( AttackLabel::inserted( e ) );
    for ( const auto& e : universe.erasable )
        result.insert( AttackLabel::erased( e ) );
    for ( const auto& e : universe.enableable )
        result.insert( AttackLabel::enabled( e ) );
    return result;
}

Word supervisor_projection( const AttackWord& word )
{
    Word result;
    for ( const auto& label : word )
        if ( label.kind != AttackKind::Erased )
            result.push_back( label.event );
    return result;
}

Word attacker_projection( const AttackWord& word )
{
    Word result;
    for ( const auto& label : word )
        if ( label.kind != AttackKind::Inserted )
            result.push_back( label.event );
    return result;
}

std::string_view to_string( ValidationReason reason )
{
    switch ( reason ) {
    case ValidationReason::BadGenuine:
        return "bad-genuine";
    case ValidationReason::BadInsert:
        return "bad-insert";
    case ValidationReason::BadErase:
        return "bad-erase";
    case ValidationReason::BadEnable:
        return "bad-enable";
    }
    return "unknown";
}

Validation validate_attack_word( const AttackWord& word, const EventUniverse& universe )
{
    for ( std::size_t i = 0; i < word.size(); ++i ) {
        const auto& [kind, event] = word[i];
        std::optional<ValidationReason> failure;
        switch ( kind ) {
        case AttackKind::Genuine:
            if ( !universe.is_observable( event ) )
                failure = ValidationReason::BadGenuine;
            break;
        case AttackKind::Inserted:
            if ( !universe.insertable.contains( event ) )
                failure = ValidationReason::BadInsert;
            break;
        case AttackKind::Erased:
            if ( !universe.erasable.contains( event ) )
                failure = ValidationReason::BadErase;
            break;
        case AttackKind::Enabled:
            if ( !universe.enableable.contains( event ) )
                failure = ValidationReason::BadEnable;
            break;
        }
        if ( failure )
            return { false, failure, i };
    }
    return {};
}

ControlInput::ControlInput( EventSet enabled, const EventUniverse& universe ) : enabled_{ std::move( enabled ) }
{
    for ( const auto& e : universe.uncontrollable() )
        enabled_.insert( e );
}

ControlInput corrupt_control_input( const ControlInput& xi, const EventSet& enable, const EventUniverse& universe )
{
    for ( const auto& e : enable )
        if ( !universe.enableable.contains( e ) )
            throw IllegalEnableError( "event '" + e + "' cannot be enabled by the attacker" );
    EventSet result = xi.enabled();
    result.insert( enable.begin(), enable.end() );
    return ControlInput( std::move( result ), universe );
}

} // namespace desattack
