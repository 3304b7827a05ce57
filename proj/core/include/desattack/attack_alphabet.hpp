#pragma once

#include "desattack/events.hpp"

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace desattack {

enum class AttackKind
{
    Genuine,  ///< e: observed event that really occurred
    Inserted, ///< e+: fake observation inserted by the attacker
    Erased,   ///< e-: real occurrence hidden from the supervisor
    Enabled,  ///< e!: occurrence of an event the attacker re-enabled
};

struct AttackLabel
{
    AttackKind kind = AttackKind::Genuine;
    EventId event;

    static AttackLabel genuine( EventId e ) { return { AttackKind::Genuine, std::move( e ) }; }
    static AttackLabel inserted( EventId e ) { return { AttackKind::Inserted, std::move( e ) }; }
    static AttackLabel erased( EventId e ) { return { AttackKind::Erased, std::move( e ) }; }
    static AttackLabel enabled( EventId e ) { return { AttackKind::Enabled, std::move( e ) }; }

    friend auto operator<=>( const AttackLabel&, const AttackLabel& ) = default;
};

using AttackWord = std::vector<AttackLabel>;

/// `e`, `e+`, `e-` or `e!`.
[[nodiscard]] std::string to_string( const AttackLabel& label );
[[nodiscard]] std::string to_string( const AttackWord& word );
[[nodiscard]] inline const std::string& to_string( const EventId& e ) { return e; }

/// Parses one token. Throws UnknownEventError if the event is not in the
/// universe; the kind/compromised-set match is not checked here.
[[nodiscard]] AttackLabel parse_attack_label( std::string_view token, const EventUniverse& universe );
/// Whitespace-separated tokens.
[[nodiscard]] AttackWord parse_attack_word( std::string_view text, const EventUniverse& universe );

/// E_a = E_o ∪ E_+ ∪ E_- ∪ E_S for the given universe.
[[nodiscard]] std::set<AttackLabel> attack_alphabet( const EventUniverse& universe );

/// P̂: what the supervisor sees. Erasures vanish; insertions and
/// enablements read as the plain event.
[[nodiscard]] Word supervisor_projection( const AttackWord& word );

/// P̃: the real observation. Insertions vanish; erasures and enablements
/// read as the plain event.
[[nodiscard]] Word attacker_projection( const AttackWord& word );

enum class ValidationReason
{
    BadGenuine,
    BadInsert,
    BadErase,
    BadEnable,
};

[[nodiscard]] std::string_view to_string( ValidationReason reason );

struct Validation
{
    bool valid = true;
    std::optional<ValidationReason> reason;
    /// 0-based index of the offending label when invalid.
    std::size_t position = 0;

    explicit operator bool() const { return valid; }
};

/// Checks that `word` is a possible output of an admissible sensor attack
/// combined with enablements: every label belongs to its compromised set
/// (genuine labels must be observable).
[[nodiscard]] Validation validate_attack_word( const AttackWord& word, const EventUniverse& universe );

/// Control input ξ. Uncontrollable events are always enabled.
class ControlInput
{
public:
    /// Adds E_uc to `enabled`.
    ControlInput( EventSet enabled, const EventUniverse& universe );

    [[nodiscard]] const EventSet& enabled() const { return enabled_; }
    [[nodiscard]] bool allows( const EventId& e ) const { return enabled_.contains( e ); }

    friend bool operator==( const ControlInput&, const ControlInput& ) = default;

private:
    EventSet enabled_;
};

/// ξ' = ξ ∪ enable. Throws IllegalEnableError if enable is not within E_ena.
[[nodiscard]] ControlInput corrupt_control_input( const ControlInput& xi, const EventSet& enable, const EventUniverse& universe );

} // namespace desattack
