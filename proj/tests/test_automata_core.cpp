#include "desattack/automaton.hpp"
#include "desattack/observer.hpp"
#include "desattack/random_model.hpp"
#include "desattack/supervisor_under_attack.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace desattack;
using desattack::testing::load_fixture;

namespace {

std::set<std::string> state_names( const Automaton<EventId>& aut )
{
    std::set<std::string> names;
    for ( StateIndex s = 0; s < aut.size(); ++s )
        names.insert( aut.name( s ) );
    return names;
}

Automaton<EventId> chain( std::initializer_list<std::tuple<const char*, const char*, const char*>> edges, const char* initial )
{
    Automaton<EventId> aut;
    auto ensure = [&]( const char* name ) {
        if ( auto s = aut.find_state( name ) )
            return *s;
        return aut.add_state( name );
    };
    aut.set_initial( ensure( initial ) );
    for ( const auto& [from, event, to] : edges )
        aut.add_transition( ensure( from ), event, ensure( to ) );
    return aut;
}

class F1 : public ::testing::Test
{
protected:
    ModelFile model = load_fixture( "f1.des" );
    const Automaton<EventId>& plant = model.plant;
    const EventUniverse& universe = model.universe;
};

} // namespace

TEST_F( F1, ActiveEvents )
{
    EXPECT_EQ( active_events( plant, plant.state( "0" ) ), ( std::set<EventId>{ "a" } ) );
    EXPECT_EQ( active_events( plant, plant.state( "1" ) ), ( std::set<EventId>{ "g", "d" } ) );
    EXPECT_TRUE( active_events( plant, plant.state( "3" ) ).empty() );
    EXPECT_THROW( (void)active_events( plant, 42 ), UnknownStateError );
}

TEST_F( F1, ExtendedReach )
{
    const StateIndex x0 = plant.state( "0" );
    EXPECT_EQ( extended_reach( plant, x0, Word{} ), x0 );
    EXPECT_EQ( extended_reach( plant, x0, Word{ "a", "g", "b" } ), plant.state( "3" ) );
    EXPECT_EQ( extended_reach( plant, x0, Word{ "b" } ), std::nullopt );
}

TEST( NaturalProjection, Examples )
{
    EXPECT_TRUE( natural_projection( Word{}, { "a", "b" } ).empty() );
    EXPECT_EQ( natural_projection( Word{ "a", "d", "g" }, { "a", "g", "b" } ), ( Word{ "a", "g" } ) );
    EXPECT_TRUE( natural_projection( Word{ "d", "d" }, { "a" } ).empty() );
}

TEST( NaturalProjection, LengthNonIncreasingAndIdempotent )
{
    std::mt19937 rng( 7 );
    const std::vector<EventId> events{ "a", "b", "c", "d" };
    for ( int trial = 0; trial < 500; ++trial ) {
        Word word( rng() % 10 );
        for ( auto& e : word )
            e = events[rng() % events.size()];
        EventSet keep;
        for ( const auto& e : events )
            if ( rng() % 2 )
                keep.insert( e );
        const Word once = natural_projection( word, keep );
        EXPECT_LE( once.size(), word.size() );
        EXPECT_EQ( natural_projection( once, keep ), once );
    }
}

TEST_F( F1, UnobservableReach )
{
    EXPECT_EQ( unobservable_reach( plant, universe, plant.state( "1" ) ).members(),
               ( std::set<StateIndex>{ plant.state( "1" ), plant.state( "2" ) } ) );
    EXPECT_EQ( unobservable_reach( plant, universe, plant.state( "0" ) ).members(), ( std::set<StateIndex>{ plant.state( "0" ) } ) );
    EXPECT_THROW( (void)unobservable_reach( plant, universe, 99 ), UnknownStateError );
}

TEST( UnobservableReach, FullyObservablePlantIsSingleton )
{
    EventUniverse u{ { "a", "b" }, { "a", "b" }, {}, {}, {}, {} };
    const auto plant = chain( { { "0", "a", "1" }, { "1", "b", "0" } }, "0" );
    for ( StateIndex x = 0; x < plant.size(); ++x )
        EXPECT_EQ( unobservable_reach( plant, u, x ).members(), std::set<StateIndex>{ x } );
}

TEST_F( F1, Observer )
{
    const Observer obs = build_observer( plant, universe );
    EXPECT_EQ( state_names( obs.automaton ), ( std::set<std::string>{ "{0}", "{1,2}", "{2}", "{3}" } ) );
    EXPECT_EQ( desattack::testing::named_edges( obs.automaton ), ( std::set<desattack::testing::NamedEdge>{
                                                                   { "{0}", "a", "{1,2}" },
                                                                   { "{1,2}", "g", "{2}" },
                                                                   { "{1,2}", "b", "{3}" },
                                                                   { "{2}", "b", "{3}" },
                                                               } ) );
    EXPECT_EQ( obs.automaton.name( obs.automaton.initial() ), "{0}" );
    for ( StateIndex b = 0; b < obs.automaton.size(); ++b )
        for ( StateIndex x : obs.estimates[b].members() )
            EXPECT_TRUE( std::ranges::includes( obs.estimates[b].members(), unobservable_reach( plant, universe, x ).members() ) );
}

TEST( Observer, FullyObservablePlantIsIsomorphicToReachablePart )
{
    EventUniverse u{ { "a", "b" }, { "a", "b" }, {}, {}, {}, {} };
    auto plant = chain( { { "0", "a", "1" }, { "1", "b", "0" }, { "2", "a", "0" } }, "0" );
    const Observer obs = build_observer( plant, u );
    EXPECT_EQ( obs.automaton.size(), 2u );
    EXPECT_EQ( desattack::testing::named_edges( obs.automaton ),
               ( std::set<desattack::testing::NamedEdge>{ { "{0}", "a", "{1}" }, { "{1}", "b", "{0}" } } ) );
}

TEST( Observer, SingleStateWithUnobservableLoop )
{
    EventUniverse u{ { "d" }, {}, {}, {}, {}, {} };
    const auto plant = chain( { { "0", "d", "0" } }, "0" );
    const Observer obs = build_observer( plant, u );
    EXPECT_EQ( obs.automaton.size(), 1u );
    EXPECT_EQ( obs.automaton.transition_count(), 0u );
}

TEST( Observer, SoundAndCompleteOnRandomPlants )
{
    RandomModelOptions options;
    for ( std::uint64_t seed = 0; seed < 60; ++seed ) {
        const ModelFile m = random_model( options, seed );
        const Observer obs = build_observer( m.plant, m.universe );
        const auto& aut = obs.automaton;

        // Soundness: every plant word is tracked by its projection.
        for ( const auto& sigma : enumerate_language( m.plant, 6 ) ) {
            const auto b = extended_reach( aut, aut.initial(), natural_projection( sigma, m.universe.observable ) );
            ASSERT_TRUE( b.has_value() ) << "seed " << seed;
            EXPECT_TRUE( obs.estimates[*b].contains( *extended_reach( m.plant, m.plant.initial(), sigma ) ) );
        }

        // Completeness: estimates equal the brute-force consistent sets.
        const auto oracle = desattack::testing::brute_force_observations( m.plant, m.universe, 5 );
        for ( const auto& [s, states] : oracle ) {
            const auto b = extended_reach( aut, aut.initial(), s );
            ASSERT_TRUE( b.has_value() ) << "seed " << seed;
            EXPECT_EQ( obs.estimates[*b].members(), states ) << "seed " << seed;
        }
        desattack::testing::for_each_word<EventId>( aut, 5, [&]( const Word& s, StateIndex ) { EXPECT_TRUE( oracle.contains( s ) ); } );
    }
}

TEST( ParallelCompose, PrivateAlphabetAdjoinsState )
{
    const auto g1 = chain( { { "0", "a", "1" }, { "1", "b", "0" } }, "0" );
    Automaton<EventId> g2;
    g2.add_label( "z" );
    g2.set_initial( g2.add_state( "q" ) );
    const auto product = parallel_compose( g1, g2 );
    EXPECT_EQ( desattack::testing::named_edges( product.automaton ),
               ( std::set<desattack::testing::NamedEdge>{ { "(0,q)", "a", "(1,q)" }, { "(1,q)", "b", "(0,q)" } } ) );
}

TEST( ParallelCompose, SelfProductIsDiagonal )
{
    const auto g = chain( { { "0", "a", "1" }, { "1", "b", "2" }, { "2", "a", "0" } }, "0" );
    const auto product = parallel_compose( g, g );
    EXPECT_EQ( product.automaton.size(), 3u );
    for ( const auto& [x1, x2] : product.pairs )
        EXPECT_EQ( x1, x2 );
    EXPECT_EQ( enumerate_language( product.automaton, 6 ), enumerate_language( g, 6 ) );
}

TEST( ParallelCompose, SharedAlphabetLanguageIsIntersection )
{
    std::mt19937 rng( 11 );
    const std::vector<EventId> events{ "a", "b", "c" };
    auto random_dfa = [&] {
        Automaton<EventId> aut;
        aut.add_labels( events );
        const std::size_t n = 1 + rng() % 4;
        for ( std::size_t i = 0; i < n; ++i )
            aut.add_state( std::to_string( i ) );
        aut.set_initial( 0 );
        for ( std::size_t i = 0; i < n; ++i )
            for ( const auto& e : events )
                if ( rng() % 3 != 0 )
                    aut.add_transition( i, e, rng() % n );
        return aut;
    };
    for ( int trial = 0; trial < 100; ++trial ) {
        const auto g1 = random_dfa();
        const auto g2 = random_dfa();
        const auto l1 = enumerate_language( g1, 5 );
        const auto l2 = enumerate_language( g2, 5 );
        std::set<Word> both;
        std::ranges::set_intersection( l1, l2, std::inserter( both, both.end() ) );
        EXPECT_EQ( enumerate_language( parallel_compose( g1, g2 ).automaton, 5 ), both );
    }
}

TEST_F( F1, ProductMatchesBruteForceEnumeration )
{
    const auto closed = closed_loop( plant, *model.supervisor, universe );
    std::set<std::string> nodes;
    const auto expected = desattack::testing::brute_force_product_edges( plant, *model.supervisor, nodes );
    // The closed loop completes unobservable self-loops, which F1's supervisor already has.
    EXPECT_EQ( desattack::testing::named_edges( closed ), expected );
    EXPECT_EQ( closed.size(), nodes.size() );
}

TEST_F( F1, EnumerateLanguage )
{
    EXPECT_EQ( enumerate_language( plant, 1 ), ( std::set<Word>{ {}, { "a" } } ) );
    EXPECT_EQ( enumerate_language( plant, 0 ), ( std::set<Word>{ {} } ) );
    const auto closed = closed_loop( plant, *model.supervisor, universe );
    EXPECT_EQ( enumerate_language( closed, 3 ), ( std::set<Word>{ {}, { "a" }, { "a", "g" }, { "a", "d" } } ) );
}

TEST( ReachableTrim, DropsIsolatedState )
{
    auto aut = chain( { { "0", "a", "1" } }, "0" );
    aut.add_state( "island" );
    const auto trimmed = reachable_trim( aut );
    EXPECT_EQ( state_names( trimmed ), ( std::set<std::string>{ "0", "1" } ) );
    EXPECT_EQ( enumerate_language( trimmed, 4 ), enumerate_language( aut, 4 ) );
}

TEST( ReachableTrim, IdempotentOnTrimAutomaton )
{
    const auto aut = chain( { { "0", "a", "1" }, { "1", "b", "0" } }, "0" );
    const auto trimmed = reachable_trim( aut );
    EXPECT_EQ( desattack::testing::named_edges( trimmed ), desattack::testing::named_edges( aut ) );
    EXPECT_EQ( desattack::testing::named_edges( reachable_trim( trimmed ) ), desattack::testing::named_edges( trimmed ) );
}

TEST( ReachableTrim, InitialWithoutEdges )
{
    auto aut = chain( { { "1", "a", "2" } }, "0" );
    const auto trimmed = reachable_trim( aut );
    EXPECT_EQ( trimmed.size(), 1u );
    EXPECT_EQ( trimmed.transition_count(), 0u );
}

TEST( Automaton, RejectsNondeterminism )
{
    auto aut = chain( { { "0", "a", "1" } }, "0" );
    EXPECT_NO_THROW( aut.add_transition( 0, "a", 1 ) );
    EXPECT_THROW( aut.add_transition( 0, "a", 0 ), NondeterminismError );
    EXPECT_THROW( aut.add_transition( 0, "b", 7 ), UnknownStateError );
}
