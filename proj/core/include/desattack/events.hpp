#pragma once

#include <set>
#include <string>
#include <vector>

namespace desattack {

/// Event symbol: a non-empty printable token without whitespace.
using EventId = std::string;
using EventSet = std::set<EventId>;
using Word = std::vector<EventId>;

/// The event alphabet E with its observability and controllability
/// partitions and the three compromised sets.
///
/// Invariants (checked by validate()): E_c within E_o, E_ins and E_era within
/// E_o, E_ena within E_c. The compromised sets may overlap.
struct EventUniverse
{
    EventSet events;
    EventSet observable;
    EventSet controllable;
    EventSet insertable;
    EventSet erasable;
    EventSet enableable;

    /// Throws UniverseError naming the first violated inclusion.
    void validate() const;

    [[nodiscard]] bool contains( const EventId& e ) const { return events.contains( e ); }
    [[nodiscard]] bool is_observable( const EventId& e ) const { return observable.contains( e ); }
    [[nodiscard]] bool is_controllable( const EventId& e ) const { return controllable.contains( e ); }

    [[nodiscard]] EventSet unobservable() const;
    [[nodiscard]] EventSet uncontrollable() const;

    friend bool operator==( const EventUniverse&, const EventUniverse& ) = default;
};

/// Throws UniverseError if `name` is not a valid event token.
void check_event_name( const std::string& name );

} // namespace desattack
