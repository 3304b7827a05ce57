#pragma once

#include "desattack/attack_alphabet.hpp"
#include "desattack/attack_structure.hpp"
#include "desattack/automaton.hpp"

#include <string>
#include <string_view>

namespace desattack {

/// Quoted DOT identifier.
[[nodiscard]] std::string dot_quote( std::string_view text );

[[nodiscard]] std::string export_dot( const Automaton<EventId>& aut, std::string_view graph_name = "G" );
[[nodiscard]] std::string export_dot( const Automaton<AttackLabel>& aut, std::string_view graph_name = "G" );

/// Nodes are filled by classification: gray (exposing), then yellow (other
/// weakly exposing), then green (target), otherwise white.
[[nodiscard]] std::string export_dot( const AttackStructure& structure, std::string_view graph_name = "A" );

/// Fill color the structure export uses for node r.
[[nodiscard]] std::string_view node_color( const AttackStructure& structure, StateIndex r );

} // namespace desattack
