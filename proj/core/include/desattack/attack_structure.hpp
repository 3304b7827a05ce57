#pragma once

#include "desattack/attack_alphabet.hpp"
#include "desattack/automaton.hpp"
#include "desattack/observer.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace desattack {

using NodeSet = std::set<StateIndex>;

/// A node (b, y_a) of the attack structure. `supervisor` is empty for y_∅.
struct AttackNode
{
    EstimationState estimate;
    std::optional<StateIndex> supervisor;

    [[nodiscard]] bool is_dummy() const { return !supervisor.has_value(); }

    friend bool operator==( const AttackNode&, const AttackNode& ) = default;
};

/// A = Obs_att(G) ∥ S_Pa with its node classification.
///
/// `nodes[i]` describes state i of `automaton`. `unsafe` holds plant state
/// indices. `weakly_exposing` stays unset until the region has been computed.
struct AttackStructure
{
    Automaton<AttackLabel> automaton;
    std::vector<AttackNode> nodes;
    std::set<StateIndex> unsafe;
    NodeSet targets;
    NodeSet exposing;
    std::optional<NodeSet> weakly_exposing;

    [[nodiscard]] bool empty() const { return automaton.empty(); }
    [[nodiscard]] std::size_t size() const { return automaton.size(); }
    /// Index of the node rendered as `name`, e.g. `({1,2},y1)`.
    [[nodiscard]] StateIndex node( std::string_view name ) const { return automaton.state( name ); }
};

[[nodiscard]] AttackStructure build_attack_structure( const Automaton<EventId>& plant,
                                                      const Automaton<EventId>& sup,
                                                      const EventUniverse& universe,
                                                      const std::set<StateIndex>& unsafe );

/// Nodes whose estimate meets the unsafe states.
[[nodiscard]] NodeSet target_states( const AttackStructure& structure );

/// Nodes whose supervisor component is y_∅.
[[nodiscard]] NodeSet exposing_states( const AttackStructure& structure );

/// Least fixpoint containing the exposing nodes and every node r such that
/// some event e spontaneous at r has all its variants (e, e-) leading into
/// the region while every insertion from r also leads into it.
///
/// e is spontaneous at r if r has an e edge, or an e- edge and no e! edge.
/// Enablement edges are neither forced moves nor escapes.
[[nodiscard]] NodeSet weakly_exposing_region( const AttackStructure& structure );

/// Events the plant may execute at `node` without attacker consent.
[[nodiscard]] EventSet spontaneous_events( const Automaton<AttackLabel>& structure, StateIndex node );

/// Copy of `structure` with `weakly_exposing` filled in.
[[nodiscard]] AttackStructure with_weakly_exposing_region( AttackStructure structure );

/// A^ss: `structure` without the weakly exposing region, trimmed to the
/// part reachable from the initial node. Empty if the initial node is
/// removed. Computes the region first if it is unset.
[[nodiscard]] AttackStructure supremal_substructure( const AttackStructure& structure );

/// Shortest word from the initial node to a target node, ties broken by
/// the lexicographic order of rendered labels.
[[nodiscard]] std::optional<AttackWord> shortest_target_word( const AttackStructure& structure );

struct Verdict
{
    bool effective = false;
    bool stealthy_effective = false;
    std::optional<AttackWord> witness;
    bool robust = true;
};

struct Analysis
{
    AttackStructure structure;
    AttackStructure supremal;
    Verdict verdict;
};

[[nodiscard]] Analysis run_analysis( const Automaton<EventId>& plant,
                                     const Automaton<EventId>& sup,
                                     const EventUniverse& universe,
                                     const std::set<StateIndex>& unsafe );

[[nodiscard]] Verdict analyze( const Automaton<EventId>& plant,
                               const Automaton<EventId>& sup,
                               const EventUniverse& universe,
                               const std::set<StateIndex>& unsafe );

/// Bounded self-check of stealthiness: searches for a word of length
/// <= max_len in `supremal` whose supervisor projection leaves the observed
/// attack-free closed-loop language. Returns the first such word found.
[[nodiscard]] std::optional<AttackWord> find_stealthiness_violation( const AttackStructure& supremal,
                                                                     const Automaton<EventId>& plant,
                                                                     const Automaton<EventId>& sup,
                                                                     const EventUniverse& universe,
                                                                     std::size_t max_len );

} // namespace desattack
