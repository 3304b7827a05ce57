#pragma once

#include "desattack/errors.hpp"

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace desattack {

using StateIndex = std::size_t;

/// Deterministic finite automaton with a partial transition function.
///
/// States are dense indices carrying a display name. A missing entry in the
/// transition map means the transition is undefined; no sink state is added.
/// An automaton with zero states is the empty structure.
template <typename Label>
class Automaton
{
public:
    using label_type = Label;
    using EdgeMap = std::map<Label, StateIndex>;

    StateIndex add_state( std::string name )
    {
        const StateIndex index = names_.size();
        by_name_.emplace( name, index );
        names_.push_back( std::move( name ) );
        edges_.emplace_back();
        return index;
    }

    void add_label( const Label& label ) { alphabet_.insert( label ); }

    template <typename Range>
    void add_labels( const Range& labels )
    {
        for ( const auto& label : labels )
            alphabet_.insert( label );
    }

    /// Adds (from, label, to). Re-adding an identical edge is a no-op; a
    /// second target for the same (from, label) throws NondeterminismError.
    void add_transition( StateIndex from, const Label& label, StateIndex to )
    {
        check_state( from );
        check_state( to );
        alphabet_.insert( label );
        auto [it, inserted] = edges_[from].emplace( label, to );
        if ( !inserted && it->second != to )
            throw NondeterminismError( "state '" + names_[from] + "' already has a transition on this label" );
    }

    void set_initial( StateIndex state )
    {
        check_state( state );
        initial_ = state;
    }

    [[nodiscard]] bool empty() const { return names_.empty(); }
    [[nodiscard]] std::size_t size() const { return names_.size(); }

    [[nodiscard]] StateIndex initial() const
    {
        if ( empty() )
            throw UnknownStateError( "empty automaton has no initial state" );
        return initial_;
    }

    [[nodiscard]] const std::set<Label>& alphabet() const { return alphabet_; }
    [[nodiscard]] const std::string& name( StateIndex state ) const
    {
        check_state( state );
        return names_[state];
    }

    [[nodiscard]] std::optional<StateIndex> find_state( std::string_view name ) const
    {
        auto it = by_name_.find( std::string( name ) );
        if ( it == by_name_.end() )
            return std::nullopt;
        return it->second;
    }

    [[nodiscard]] StateIndex state( std::string_view name ) const
    {
        if ( auto found = find_state( name ) )
            return *found;
        throw UnknownStateError( "unknown state '" + std::string( name ) + "'" );
    }

    [[nodiscard]] const EdgeMap& edges( StateIndex state ) const
    {
        check_state( state );
        return edges_[state];
    }

    [[nodiscard]] std::optional<StateIndex> successor( StateIndex state, const Label& label ) const
    {
        const auto& out = edges( state );
        auto it = out.find( label );
        if ( it == out.end() )
            return std::nullopt;
        return it->second;
    }

    [[nodiscard]] std::size_t transition_count() const
    {
        std::size_t count = 0;
        for ( const auto& out : edges_ )
            count += out.size();
        return count;
    }

    void check_state( StateIndex state ) const
    {
        if ( state >= names_.size() )
            throw UnknownStateError( "state index " + std::to_string( state ) + " out of range" );
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, StateIndex> by_name_;
    std::vector<EdgeMap> edges_;
    std::set<Label> alphabet_;
    StateIndex initial_ = 0;
};

/// Γ(x): labels with a defined transition at `state`.
template <typename Label>
std::set<Label> active_events( const Automaton<Label>& aut, StateIndex state )
{
    std::set<Label> result;
    for ( const auto& [label, target] : aut.edges( state ) )
        result.insert( label );
    return result;
}

template <typename Label>
std::optional<StateIndex> extended_reach( const Automaton<Label>& aut, StateIndex from, std::span<const Label> word )
{
    aut.check_state( from );
    StateIndex current = from;
    for ( const auto& label : word ) {
        auto next = aut.successor( current, label );
        if ( !next )
            return std::nullopt;
        current = *next;
    }
    return current;
}

template <typename Label>
std::optional<StateIndex> extended_reach( const Automaton<Label>& aut, StateIndex from, const std::vector<Label>& word )
{
    return extended_reach( aut, from, std::span<const Label>( word ) );
}

/// States reachable from the initial state, as a mask over state indices.
template <typename Label>
std::vector<bool> reachable_mask( const Automaton<Label>& aut )
{
    std::vector<bool> seen( aut.size(), false );
    if ( aut.empty() )
        return seen;
    std::deque<StateIndex> queue{ aut.initial() };
    seen[aut.initial()] = true;
    while ( !queue.empty() ) {
        const StateIndex current = queue.front();
        queue.pop_front();
        for ( const auto& [label, target] : aut.edges( current ) ) {
            if ( !seen[target] ) {
                seen[target] = true;
                queue.push_back( target );
            }
        }
    }
    return seen;
}

template <typename Label>
struct Restriction
{
    Automaton<Label> automaton;
    /// original[i] is the index in the source automaton of new state i.
    std::vector<StateIndex> original;
};

/// Induced sub-automaton on the kept states, then trimmed to the part
/// reachable from the initial state. Empty if the initial state is dropped.
template <typename Label>
Restriction<Label> restrict_states( const Automaton<Label>& aut, const std::vector<bool>& keep )
{
    Restriction<Label> result;
    result.automaton.add_labels( aut.alphabet() );
    if ( aut.empty() || !keep.at( aut.initial() ) )
        return result;

    std::vector<std::optional<StateIndex>> renamed( aut.size() );
    std::deque<StateIndex> queue{ aut.initial() };
    renamed[aut.initial()] = result.automaton.add_state( aut.name( aut.initial() ) );
    result.original.push_back( aut.initial() );
    result.automaton.set_initial( 0 );
    while ( !queue.empty() ) {
        const StateIndex current = queue.front();
        queue.pop_front();
        for ( const auto& [label, target] : aut.edges( current ) ) {
            if ( !keep[target] )
                continue;
            if ( !renamed[target] ) {
                renamed[target] = result.automaton.add_state( aut.name( target ) );
                result.original.push_back( target );
                queue.push_back( target );
            }
            result.automaton.add_transition( *renamed[current], label, *renamed[target] );
        }
    }
    return result;
}

template <typename Label>
Automaton<Label> reachable_trim( const Automaton<Label>& aut )
{
    return restrict_states( aut, std::vector<bool>( aut.size(), true ) ).automaton;
}

/// Copy of `aut` keeping only transitions whose label is in `keep`.
template <typename Label>
Automaton<Label> restrict_alphabet( const Automaton<Label>& aut, const std::set<Label>& keep )
{
    Automaton<Label> result;
    for ( const auto& label : aut.alphabet() )
        if ( keep.contains( label ) )
            result.add_label( label );
    for ( StateIndex s = 0; s < aut.size(); ++s )
        result.add_state( aut.name( s ) );
    if ( aut.empty() )
        return result;
    result.set_initial( aut.initial() );
    for ( StateIndex s = 0; s < aut.size(); ++s )
        for ( const auto& [label, target] : aut.edges( s ) )
            if ( keep.contains( label ) )
                result.add_transition( s, label, target );
    return result;
}

template <typename Label>
struct Product
{
    Automaton<Label> automaton;
    std::vector<std::pair<StateIndex, StateIndex>> pairs;
};

/// Synchronous product: shared labels move both components, private labels
/// move one. Only pairs reachable from (x01, x02) are built.
template <typename Label>
Product<Label> parallel_compose( const Automaton<Label>& first, const Automaton<Label>& second )
{
    Product<Label> result;
    result.automaton.add_labels( first.alphabet() );
    result.automaton.add_labels( second.alphabet() );
    if ( first.empty() || second.empty() )
        return result;

    std::map<std::pair<StateIndex, StateIndex>, StateIndex> index;
    std::deque<std::pair<StateIndex, StateIndex>> queue;
    auto visit = [&]( std::pair<StateIndex, StateIndex> pair ) {
        auto it = index.find( pair );
        if ( it != index.end() )
            return it->second;
        const StateIndex id = result.automaton.add_state( "(" + first.name( pair.first ) + "," + second.name( pair.second ) + ")" );
        index.emplace( pair, id );
        result.pairs.push_back( pair );
        queue.push_back( pair );
        return id;
    };

    result.automaton.set_initial( visit( { first.initial(), second.initial() } ) );
    const auto& alpha1 = first.alphabet();
    const auto& alpha2 = second.alphabet();
    while ( !queue.empty() ) {
        const auto [x1, x2] = queue.front();
        queue.pop_front();
        const StateIndex from = index.at( { x1, x2 } );
        for ( const auto& [label, t1] : first.edges( x1 ) ) {
            if ( !alpha2.contains( label ) ) {
                result.automaton.add_transition( from, label, visit( { t1, x2 } ) );
            } else if ( auto t2 = second.successor( x2, label ) ) {
                result.automaton.add_transition( from, label, visit( { t1, *t2 } ) );
            }
        }
        for ( const auto& [label, t2] : second.edges( x2 ) ) {
            if ( !alpha1.contains( label ) )
                result.automaton.add_transition( from, label, visit( { x1, t2 } ) );
        }
    }
    return result;
}

/// All words of length <= max_len generated from the initial state.
template <typename Label>
std::set<std::vector<Label>> enumerate_language( const Automaton<Label>& aut, std::size_t max_len )
{
    std::set<std::vector<Label>> words;
    words.insert( std::vector<Label>{} );
    if ( aut.empty() )
        return words;
    std::vector<std::pair<std::vector<Label>, StateIndex>> layer{ { {}, aut.initial() } };
    for ( std::size_t depth = 0; depth < max_len && !layer.empty(); ++depth ) {
        std::vector<std::pair<std::vector<Label>, StateIndex>> next;
        for ( const auto& [word, state] : layer ) {
            for ( const auto& [label, target] : aut.edges( state ) ) {
                auto longer = word;
                longer.push_back( label );
                words.insert( longer );
                next.emplace_back( std::move( longer ), target );
            }
        }
        layer = std::move( next );
    }
    return words;
}

} // namespace desattack
