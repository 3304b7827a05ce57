#pragma once

#include "desattack/automaton.hpp"
#include "desattack/events.hpp"

#include <compare>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace desattack {

/// Non-empty set of plant states consistent with an observation.
class EstimationState
{
public:
    EstimationState() = default;
    explicit EstimationState( std::set<StateIndex> members ) : members_{ std::move( members ) } {}

    [[nodiscard]] const std::set<StateIndex>& members() const { return members_; }
    [[nodiscard]] bool contains( StateIndex x ) const { return members_.contains( x ); }
    [[nodiscard]] bool intersects( const std::set<StateIndex>& other ) const;
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] std::size_t size() const { return members_.size(); }

    /// `{n1,n2,...}` with member names of `plant`, sorted by name.
    [[nodiscard]] std::string render( const Automaton<EventId>& plant ) const;

    friend auto operator<=>( const EstimationState&, const EstimationState& ) = default;

private:
    std::set<StateIndex> members_;
};

/// Obs(G): determinization over the observable events. State i of
/// `automaton` stands for `estimates[i]`.
struct Observer
{
    Automaton<EventId> automaton;
    std::vector<EstimationState> estimates;
};

/// Deletes every symbol not in `keep`, preserving order.
[[nodiscard]] Word natural_projection( std::span<const EventId> word, const EventSet& keep );

/// UR(x): states reachable from x by unobservable strings, x included.
[[nodiscard]] EstimationState unobservable_reach( const Automaton<EventId>& plant, const EventUniverse& universe, StateIndex x );

/// Reachable part of the observer, starting from UR(x0).
[[nodiscard]] Observer build_observer( const Automaton<EventId>& plant, const EventUniverse& universe );

} // namespace desattack
