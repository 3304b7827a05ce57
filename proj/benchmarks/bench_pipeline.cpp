#include "desattack/attack_structure.hpp"
#include "desattack/random_model.hpp"

#include <benchmark/benchmark.h>

using namespace desattack;

namespace {

ModelFile model_for( const benchmark::State& state )
{
    RandomModelOptions options;
    options.states = static_cast<std::size_t>( state.range( 0 ) );
    options.events = 5;
    return random_model( options, 42 );
}

void BM_Observer( benchmark::State& state )
{
    const ModelFile m = model_for( state );
    for ( auto _ : state )
        benchmark::DoNotOptimize( build_observer( m.plant, m.universe ) );
}
BENCHMARK( BM_Observer )->DenseRange( 4, 12, 4 );

void BM_AttackStructure( benchmark::State& state )
{
    const ModelFile m = model_for( state );
    for ( auto _ : state )
        benchmark::DoNotOptimize( build_attack_structure( m.plant, *m.supervisor, m.universe, m.unsafe ) );
}
BENCHMARK( BM_AttackStructure )->DenseRange( 4, 12, 4 );

void BM_Region( benchmark::State& state )
{
    const ModelFile m = model_for( state );
    const AttackStructure a = build_attack_structure( m.plant, *m.supervisor, m.universe, m.unsafe );
    state.counters["nodes"] = static_cast<double>( a.size() );
    for ( auto _ : state )
        benchmark::DoNotOptimize( weakly_exposing_region( a ) );
}
BENCHMARK( BM_Region )->DenseRange( 4, 12, 4 );

void BM_FullAnalysis( benchmark::State& state )
{
    const ModelFile m = model_for( state );
    for ( auto _ : state )
        benchmark::DoNotOptimize( run_analysis( m.plant, *m.supervisor, m.universe, m.unsafe ) );
}
BENCHMARK( BM_FullAnalysis )->DenseRange( 4, 12, 4 );

} // namespace

BENCHMARK_MAIN();
