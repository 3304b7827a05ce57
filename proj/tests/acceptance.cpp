// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "desattack/attack_structure.hpp"
#include "desattack/dot.hpp"
#include "desattack/model_file.hpp"
#include "desattack/random_model.hpp"

#include "cli.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace desattack;
namespace oracle = desattack::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since( Clock::time_point start )
{
    return std::chrono::duration<double>( Clock::now() - start ).count();
}

struct Outcome
{
    bool pass = true;
    std::string detail;
};

/// Plant sizes vary per seed within the small-suite bounds.
RandomModelOptions small_options( std::uint64_t seed )
{
    std::mt19937_64 rng( seed * 7919 + 1 );
    RandomModelOptions options;
    options.states = 1 + rng() % 6;
    options.events = 1 + rng() % 4;
    options.max_unobservable = 2;
    return options;
}

std::vector<ModelFile> attack_suite()
{
    std::vector<ModelFile> suite{ oracle::load_fixture( "f1.des" ) };
    for ( std::uint64_t seed = 0; seed < 50; ++seed )
        suite.push_back( random_model( {}, 5000 + seed ) );
    return suite;
}

int run_cli( std::vector<std::string> args, std::string* out = nullptr )
{
    args.insert( args.begin(), "desattack" );
    std::vector<const char*> argv;
    for ( const auto& a : args )
        argv.push_back( a.c_str() );
    std::ostringstream sink, err;
    const int code = cli::cli_main( static_cast<int>( argv.size() ), argv.data(), sink, err );
    if ( out )
        *out = sink.str();
    return code;
}

Outcome observer_oracle()
{
    const auto start = Clock::now();
    std::size_t matched = 0;
    std::string first_failure;
    for ( std::uint64_t seed = 0; seed < 200; ++seed ) {
        const ModelFile m = random_model( small_options( seed ), seed );
        const Observer obs = build_observer( m.plant, m.universe );
        const auto expected = oracle::brute_force_observations( m.plant, m.universe, 8 );
        bool ok = true;
        for ( const auto& [s, states] : expected ) {
            const auto b = extended_reach( obs.automaton, obs.automaton.initial(), s );
            ok = ok && b && obs.estimates[*b].members() == states;
        }
        std::size_t words = 0;
        oracle::for_each_word<EventId>( obs.automaton, 8, [&]( const Word&, StateIndex ) { ++words; } );
        ok = ok && words == expected.size();
        if ( ok )
            ++matched;
        else if ( first_failure.empty() )
            first_failure = " first mismatch at seed " + std::to_string( seed );
    }
    const double elapsed = seconds_since( start );
    char buf[128];
    std::snprintf( buf, sizeof buf, "%zu/200 plants match, %.2f s", matched, elapsed );
    return { matched == 200 && elapsed < 10.0, buf + first_failure };
}

Outcome attack_language_validity( const std::vector<ModelFile>& suite )
{
    const auto start = Clock::now();
    std::size_t words = 0;
    std::size_t bad = 0;
    for ( const auto& m : suite ) {
        const AttackStructure a = build_attack_structure( m.plant, *m.supervisor, m.universe, m.unsafe );
        const Observer obs = build_observer( m.plant, m.universe );
        oracle::for_each_word<AttackLabel>( a.automaton, 6, [&]( const AttackWord& w, StateIndex ) {
            ++words;
            const bool valid = validate_attack_word( w, m.universe ).valid;
            const bool observed = extended_reach( obs.automaton, obs.automaton.initial(), attacker_projection( w ) ).has_value();
            bad += !( valid && observed );
        } );
    }
    const double elapsed = seconds_since( start );
    char buf[128];
    std::snprintf( buf, sizeof buf, "%zu instances, %zu words, %zu violations, %.2f s", suite.size(), words, bad, elapsed );
    return { bad == 0 && elapsed < 30.0, buf };
}

Outcome stealthiness( const std::vector<ModelFile>& suite )
{
    const auto start = Clock::now();
    std::size_t words = 0;
    std::size_t bad = 0;
    for ( const auto& m : suite ) {
        const AttackStructure ass = supremal_substructure( build_attack_structure( m.plant, *m.supervisor, m.universe, m.unsafe ) );
        if ( ass.empty() )
            continue;
        const auto observed = oracle::closed_loop_observations( m.plant, *m.supervisor, m.universe, 8 );
        oracle::for_each_word<AttackLabel>( ass.automaton, 8, [&]( const AttackWord& w, StateIndex ) {
            ++words;
            // An erasure leaves the supervisor's view unchanged from the prefix.
            if ( !w.empty() && w.back().kind == AttackKind::Erased )
                return;
            bad += !observed.contains( supervisor_projection( w ) );
        } );
    }
    const double elapsed = seconds_since( start );
    char buf[128];
    std::snprintf( buf, sizeof buf, "%zu instances, %zu words, %zu violations, %.2f s", suite.size(), words, bad, elapsed );
    return { bad == 0 && elapsed < 30.0, buf };
}

Outcome pruning_oracle( const std::vector<ModelFile>& suite )
{
    std::size_t checked = 0;
    std::size_t equal = 0;
    std::size_t nontrivial = 0;
    auto check = [&]( const ModelFile& m ) {
        const AttackStructure a = build_attack_structure( m.plant, *m.supervisor, m.universe, m.unsafe );
        if ( a.size() > 40 )
            return;
        ++checked;
        const NodeSet region = weakly_exposing_region( a );
        equal += region == oracle::solve_exposure_game( a );
        nontrivial += region.size() > a.exposing.size();
    };
    for ( std::uint64_t seed = 0; seed < 200; ++seed )
        check( random_model( small_options( seed ), seed ) );
    for ( const auto& m : suite )
        check( m );
    char buf[160];
    std::snprintf( buf, sizeof buf, "%zu/%zu instances equal (%zu with nodes beyond the exposing set)", equal, checked, nontrivial );
    return { checked > 0 && equal == checked, buf };
}

Outcome f1_dossier()
{
    const ModelFile m = oracle::load_fixture( "f1.des" );
    const Analysis analysis = run_analysis( m.plant, *m.supervisor, m.universe, m.unsafe );
    const auto& a = analysis.structure;
    const auto& ass = analysis.supremal;
    const auto& v = analysis.verdict;
    std::vector<std::string> failures;
    auto expect = [&]( bool ok, const char* what ) {
        if ( !ok )
            failures.emplace_back( what );
    };

    expect( v.effective, "effective" );
    expect( v.stealthy_effective, "stealthy_effective" );
    expect( v.witness && to_string( *v.witness ) == "a b-", "witness" );
    expect( a.size() == 11 && a.automaton.transition_count() == 17, "A size" );
    expect( ass.size() == 6 && ass.automaton.transition_count() == 6, "A^ss size" );

    const auto r = a.automaton.find_state( "({1,2},y1)" );
    const auto exposed = a.automaton.find_state( "({3},y_empty)" );
    const auto target = a.automaton.find_state( "({3},y1)" );
    expect( r && exposed && target, "nodes" );
    if ( r && exposed && target ) {
        expect( a.automaton.successor( *r, AttackLabel::enabled( "b" ) ) == *exposed && a.exposing.contains( *exposed ), "b! edge" );
        expect( a.automaton.successor( *r, AttackLabel::erased( "b" ) ) == *target && a.targets.contains( *target ) &&
                    !a.exposing.contains( *target ),
                "b- edge" );
    }
    const auto pruned = a.automaton.find_state( "({0},y1)" );
    expect( pruned && a.weakly_exposing && a.weakly_exposing->contains( *pruned ) && !a.exposing.contains( *pruned ), "({0},y1) in region" );
    expect( !ass.automaton.find_state( "({0},y1)" ), "({0},y1) pruned" );
    expect( a.weakly_exposing && a.weakly_exposing->size() == a.exposing.size() + 1, "region size" );

    std::string detail = "11 nodes / 17 edges, A^ss 6 / 6, witness 'a b-', b!/b- pair, ({0},y1) pruned";
    if ( !failures.empty() ) {
        detail = "mismatch:";
        for ( const auto& f : failures )
            detail += " [" + f + "]";
    }
    return { failures.empty(), detail };
}

Outcome scalability()
{
    RandomModelOptions options;
    options.states = 8;
    options.events = 5;
    const double bound = std::pow( 2.0, 8 ) * ( std::pow( 2.0, 8 ) + 1 );
    double slowest = 0;
    std::size_t largest = 0;
    bool ok = true;
    for ( std::uint64_t seed = 0; seed < 25; ++seed ) {
        const ModelFile m = random_model( options, 9000 + seed );
        const auto start = Clock::now();
        const Analysis analysis = run_analysis( m.plant, *m.supervisor, m.universe, m.unsafe );
        const double elapsed = seconds_since( start );
        slowest = std::max( slowest, elapsed );
        largest = std::max( largest, analysis.structure.size() );
        ok = ok && elapsed < 5.0 && static_cast<double>( analysis.structure.size() ) <= bound;
    }
    char buf[128];
    std::snprintf( buf, sizeof buf, "25 plants |X|=8 |E|=5, slowest %.3f s, largest A %zu nodes (bound %.0f)", slowest, largest, bound );
    return { ok, buf };
}

Outcome cli_contract()
{
    std::vector<std::string> failures;
    auto expect = [&]( bool ok, const std::string& what ) {
        if ( !ok )
            failures.push_back( what );
    };
    const std::string f1 = oracle::fixture_path( "f1.des" );
    expect( run_cli( { "verify", oracle::fixture_path( "safe.des" ) } ) == 0, "verify robust" );
    expect( run_cli( { "verify", f1 } ) == 2, "verify F1" );
    expect( run_cli( { "verify", oracle::fixture_path( "malformed.des" ) } ) == 1, "verify malformed" );

    const std::string canonical = serialize_model( oracle::load_fixture( "f1.des" ) );
    expect( serialize_model( parse_model( canonical ) ) == canonical, "round trip" );
    std::string printed;
    expect( run_cli( { "--canonical", "verify", f1 }, &printed ) == 0 && printed == canonical, "--canonical" );

    for ( const char* what : { "obs", "attobs", "supatt", "A", "Ass" } ) {
        std::string dot;
        const int code = run_cli( { "export", f1, "--what", what, "--dot", "-" }, &dot );
        const std::string problem = oracle::validate_dot( dot );
        expect( code == 0 && problem.empty(), std::string( "dot " ) + what + ( problem.empty() ? "" : ": " + problem ) );
    }

    std::string detail = "verify exit codes 0/2/1, canonical F1 byte-identical, 5 DOT exports valid";
    if ( !failures.empty() ) {
        detail = "mismatch:";
        for ( const auto& f : failures )
            detail += " [" + f + "]";
    }
    return { failures.empty(), detail };
}

} // namespace

int main()
{
    const std::vector<ModelFile> suite = attack_suite();
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        { "observer matches brute-force observation sets", observer_oracle },
        { "attack-structure words are valid and observable", [&] { return attack_language_validity( suite ); } },
        { "supremal substructure is stealthy", [&] { return stealthiness( suite ); } },
        { "weakly exposing region matches game solution", [&] { return pruning_oracle( suite ); } },
        { "F1 structure, verdict and pruning", f1_dossier },
        { "pipeline scales to |X|=8, |E|=5", scalability },
        { "command-line contract", cli_contract },
    };

    int failed = 0;
    for ( std::size_t i = 0; i < criteria.size(); ++i ) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch ( const std::exception& e ) {
            outcome = { false, std::string( "exception: " ) + e.what() };
        }
        failed += !outcome.pass;
        std::cout << ( outcome.pass ? "PASS" : "FAIL" ) << "  " << i + 1 << ". " << criteria[i].first << ": " << outcome.detail << '\n';
    }
    std::cout << ( criteria.size() - failed ) << '/' << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
