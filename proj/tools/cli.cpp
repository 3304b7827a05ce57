#include "cli.hpp"

#include "desattack/attack_structure.hpp"
#include "desattack/attacker_observer.hpp"
#include "desattack/dot.hpp"
#include "desattack/errors.hpp"
#include "desattack/model_file.hpp"
#include "desattack/observer.hpp"
#include "desattack/replay.hpp"
#include "desattack/supervisor_under_attack.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>

namespace desattack::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_attack = 2;

std::string join( const EventSet& events )
{
    std::string out = "{";
    for ( const auto& e : events ) {
        if ( out.size() > 1 )
            out += ',';
        out += e;
    }
    return out + "}";
}

std::string join_nodes( const AttackStructure& structure, const NodeSet& nodes )
{
    std::vector<std::string> names;
    for ( StateIndex r : nodes )
        names.push_back( structure.automaton.name( r ) );
    std::ranges::sort( names );
    std::string out;
    for ( const auto& n : names )
        out += ' ' + n;
    return out;
}

template <typename Label>
void print_automaton( std::ostream& out, const Automaton<Label>& aut )
{
    out << "states: " << aut.size() << '\n';
    if ( aut.empty() )
        return;
    out << "initial: " << aut.name( aut.initial() ) << '\n';
    out << "transitions: " << aut.transition_count() << '\n';
    for ( StateIndex s = 0; s < aut.size(); ++s )
        for ( const auto& [label, target] : aut.edges( s ) )
            out << "  " << aut.name( s ) << ' ' << to_string( label ) << ' ' << aut.name( target ) << '\n';
}

void print_structure( std::ostream& out, const AttackStructure& structure )
{
    print_automaton( out, structure.automaton );
    out << "targets:" << join_nodes( structure, structure.targets ) << '\n';
    out << "exposing:" << join_nodes( structure, structure.exposing ) << '\n';
    if ( structure.weakly_exposing )
        out << "weakly-exposing:" << join_nodes( structure, *structure.weakly_exposing ) << '\n';
}

const Automaton<EventId>& require_supervisor( const ModelFile& model )
{
    if ( !model.supervisor )
        throw Error( "model has no [supervisor] section" );
    return *model.supervisor;
}

AttackStructure full_structure( const ModelFile& model )
{
    return with_weakly_exposing_region( build_attack_structure( model.plant, require_supervisor( model ), model.universe, model.unsafe ) );
}

std::string dot_for( const ModelFile& model, const std::string& what )
{
    if ( what == "obs" )
        return export_dot( build_observer( model.plant, model.universe ).automaton, "Obs" );
    if ( what == "attobs" )
        return export_dot( build_attacker_observer( model.plant, model.universe ).automaton, "Obs_att" );
    if ( what == "supatt" )
        return export_dot( build_supervisor_under_attack( model.plant, require_supervisor( model ), model.universe ).automaton, "S_Pa" );
    if ( what == "A" )
        return export_dot( full_structure( model ), "A" );
    return export_dot( supremal_substructure( full_structure( model ) ), "A_ss" );
}

} // namespace

int cli_main( int argc, const char* const* argv, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Sensor/actuator attack analysis for a plant and its supervisor", "desattack" };
    app.require_subcommand( 1 );

    std::size_t max_enum = 8;
    bool canonical = false;
    app.add_option( "--max-enum", max_enum, "Word-length bound for bounded self-checks" )->default_val( 8 );
    app.add_flag( "--canonical", canonical, "Print the canonical serialization of FILE instead of running the command" );

    std::string file;
    std::string word_text;
    std::string what = "A";
    std::string dot_path;
    std::function<int( const ModelFile& )> action;

    auto command = [&]( const std::string& name, const std::string& help, std::function<int( const ModelFile& )> run ) {
        auto* sub = app.add_subcommand( name, help );
        sub->add_option( "FILE", file, "Model file" )->required();
        sub->callback( [&action, run = std::move( run )] { action = run; } );
        return sub;
    };

    command( "observe", "Print the observer Obs(G)", [&]( const ModelFile& m ) {
        print_automaton( out, build_observer( m.plant, m.universe ).automaton );
        return exit_ok;
    } );
    command( "attacker-observer", "Print the attacker observer", [&]( const ModelFile& m ) {
        print_automaton( out, build_attacker_observer( m.plant, m.universe ).automaton );
        return exit_ok;
    } );
    command( "sup-attack", "Print the supervisor under attack", [&]( const ModelFile& m ) {
        print_automaton( out, build_supervisor_under_attack( m.plant, require_supervisor( m ), m.universe ).automaton );
        return exit_ok;
    } );
    command( "attack-structure", "Print the attack structure with its classification", [&]( const ModelFile& m ) {
        print_structure( out, full_structure( m ) );
        return exit_ok;
    } );
    command( "supremal", "Print the supremal stealthy attack substructure", [&]( const ModelFile& m ) {
        print_structure( out, supremal_substructure( full_structure( m ) ) );
        return exit_ok;
    } );
    command( "verify", "Decide whether a stealthy effective attack exists", [&]( const ModelFile& m ) {
        const auto& sup = require_supervisor( m );
        const Analysis analysis = run_analysis( m.plant, sup, m.universe, m.unsafe );
        const Verdict& v = analysis.verdict;
        out << std::boolalpha;
        out << "effective=" << v.effective << '\n';
        out << "stealthy_effective=" << v.stealthy_effective << '\n';
        out << "robust=" << v.robust << '\n';
        out << "witness: " << ( v.witness ? to_string( *v.witness ) : std::string( "none" ) ) << '\n';
        out << "attack-structure nodes=" << analysis.structure.size() << " supremal nodes=" << analysis.supremal.size() << '\n';
        if ( auto violation = find_stealthiness_violation( analysis.supremal, m.plant, sup, m.universe, max_enum ) ) {
            err << "self-check failed: supremal word '" << to_string( *violation ) << "' is observable as an attack\n";
            return exit_error;
        }
        out << "self-check: stealthy up to length " << max_enum << '\n';
        return v.stealthy_effective ? exit_attack : exit_ok;
    } );
    command( "witness", "Print a shortest stealthy attack word reaching an unsafe state", [&]( const ModelFile& m ) {
        const Verdict v = analyze( m.plant, require_supervisor( m ), m.universe, m.unsafe );
        out << ( v.witness ? to_string( *v.witness ) : std::string( "none" ) ) << '\n';
        return exit_ok;
    } );
    command( "replay", "Replay an attack word through the attack structure", [&]( const ModelFile& m ) {
        const AttackWord word = parse_attack_word( word_text, m.universe );
        const ReplayTrace trace = replay( m, word );
        out << "start " << trace.start_name << '\n';
        for ( std::size_t i = 0; i < trace.steps.size(); ++i ) {
            const auto& step = trace.steps[i];
            out << i + 1 << ' ' << to_string( step.label ) << " -> " << step.node_name << " control=" << join( step.control.enabled() )
                << " corrupted=" << join( step.corrupted.enabled() ) << std::boolalpha << " target=" << step.target
                << " exposing=" << step.exposing << '\n';
        }
        return exit_ok;
    } )->add_option( "--word", word_text, "Whitespace-separated labels: e, e+, e-, e!" )->required();

    auto* exporter = command( "export", "Write a structure in DOT format", [&]( const ModelFile& m ) {
        const std::string text = dot_for( m, what );
        if ( dot_path == "-" ) {
            out << text;
            return exit_ok;
        }
        std::ofstream file_out( dot_path );
        if ( !file_out )
            throw Error( "cannot write '" + dot_path + "'" );
        file_out << text;
        return exit_ok;
    } );
    exporter->add_option( "--what", what, "Structure to export" )->check( CLI::IsMember( { "obs", "attobs", "supatt", "A", "Ass" } ) )->default_val( "A" );
    exporter->add_option( "--dot", dot_path, "Output path, '-' for stdout" )->required();

    try {
        app.parse( argc, argv );
    } catch ( const CLI::ParseError& e ) {
        return app.exit( e, out, err ) == 0 ? exit_ok : exit_error;
    }

    try {
        const ModelFile model = load_model( file );
        if ( canonical ) {
            out << serialize_model( model );
            return exit_ok;
        }
        return action( model );
    } catch ( const std::exception& e ) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
}

} // namespace desattack::cli
