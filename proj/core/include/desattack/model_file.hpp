#pragma once

#include "desattack/automaton.hpp"
#include "desattack/events.hpp"

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace desattack {

/// A plant, its optional supervisor, the event universe and the unsafe
/// plant states, as read from a model file.
struct ModelFile
{
    EventUniverse universe;
    Automaton<EventId> plant;
    std::optional<Automaton<EventId>> supervisor;
    std::set<StateIndex> unsafe;
};

/// Parses the line-oriented model format:
///
///     [events]        NAME (o|uo) (c|uc)
///     [compromised]   ins: / era: / ena: followed by event names
///     [plant]         initial: X, unsafe: X..., states: X..., "src event dst"
///     [supervisor]    initial: Y, states: Y..., "src event dst"
///
/// `#` starts a comment; sections may appear in any order. Every syntax or
/// semantic problem raises ParseError carrying the offending line.
[[nodiscard]] ModelFile parse_model( std::string_view text );

/// Reads and parses a file. Throws Error if the file cannot be read.
[[nodiscard]] ModelFile load_model( const std::filesystem::path& path );

/// Canonical text: fixed section order, events and states sorted by name,
/// transitions sorted by (source, event, target).
[[nodiscard]] std::string serialize_model( const ModelFile& model );

/// Same states, transitions and initial state, compared by name.
[[nodiscard]] bool same_structure( const Automaton<EventId>& a, const Automaton<EventId>& b );

/// Structural equality of two models, independent of state numbering.
[[nodiscard]] bool same_model( const ModelFile& a, const ModelFile& b );

} // namespace desattack
