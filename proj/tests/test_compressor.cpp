#include <catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace revcomp;

namespace
{

/* Reference n:2 chain evaluated with the text INV0 table only.
 * Returns SUM and C1..C(n-2) for operand bits followed by carry-in bits. */
std::pair<bool, std::vector<bool>> reference_chain( const std::vector<bool>& bits )
{
  auto first = test::inv0_lookup( bits[0], bits[1], bits[2], false );
  bool sum = first[0];
  std::vector<bool> carries{ first[1] };
  for ( size_t i = 3; i + 1 < bits.size(); i += 2 )
  {
    auto const out = test::inv0_lookup( sum, bits[i], bits[i + 1], false );
    sum = out[0];
    carries.push_back( out[1] );
  }
  return { sum, carries };
}

std::map<std::string, bool> named_assignment( uint32_t n, const std::vector<bool>& bits )
{
  std::map<std::string, bool> a;
  for ( uint32_t i = 0; i < n; ++i )
  {
    a["I" + std::to_string( i + 1 )] = bits[i];
  }
  for ( size_t i = n; i < bits.size(); ++i )
  {
    a["CIN" + std::to_string( i - n + 1 )] = bits[i];
  }
  return a;
}

} // namespace

TEST_CASE( "compressor shapes", "[compressor]" )
{
  auto const c4 = build_compressor( 4 );
  CHECK( c4.gates().size() == 2 );
  CHECK( c4.width() == 7 );
  CHECK( compute_metrics( c4 ).constant_inputs == 2 );
  for ( auto const& app : c4.gates() )
  {
    CHECK( app.gate->name == "INV0" );
  }
  CHECK( c4.gates()[1].lines == std::vector<uint32_t>{ 0, 4, 5, 6 } );

  auto const c5 = build_compressor( 5 );
  CHECK( c5.gates().size() == 3 );
  CHECK( compute_metrics( c5 ).constant_inputs == 3 );
  CHECK( compute_metrics( c5 ).quantum_cost == 30 );
  CHECK( c5.primary_inputs().size() == 7 );

  auto const c3 = build_compressor( 3 );
  CHECK( c3.gates().size() == 1 );
  auto const t = restricted_function( c3 );
  for ( uint64_t x = 0; x < 8; ++x )
  {
    int const ones = std::popcount( x );
    CHECK( t.output( x, "SUM" ) == ( ones % 2 == 1 ) );
    CHECK( t.output( x, "C1" ) == ( ones >= 2 ) );
  }

  CHECK_THROWS_MATCHES( build_compressor( 2 ), error,
                        Catch::Matchers::Predicate<error>( []( auto const& e ) { return e.kind() == error_kind::n_too_small; } ) );
  CHECK_THROWS_MATCHES( build_compressor( 15 ), error,
                        Catch::Matchers::Predicate<error>( []( auto const& e ) { return e.kind() == error_kind::n_too_large; } ) );
}

TEST_CASE( "compressor shape formulas", "[compressor]" )
{
  for ( uint32_t n = 3; n <= max_compressor_n; ++n )
  {
    compressor_spec const s{ n };
    auto const c = build_compressor( n );
    CHECK( c.width() == s.width() );
    CHECK( c.primary_inputs().size() == s.input_bits() );
    CHECK( c.primary_outputs().size() == 1u + s.stages() );
    CHECK( c.gates().size() == s.stages() );
  }
}

TEST_CASE( "4:2 matches two cascaded full adders", "[compressor]" )
{
  auto const t = restricted_function( build_compressor( 4 ) );
  REQUIRE( t.rows.size() == 32 );
  REQUIRE( t.inputs.size() == 5 );
  for ( uint64_t x = 0; x < 32; ++x )
  {
    std::map<std::string, int> in;
    for ( size_t i = 0; i < 5; ++i )
    {
      in[t.inputs[i].second] = static_cast<int>( ( x >> ( 4u - i ) ) & 1u );
    }
    int const s1 = in["I1"] + in["I2"] + in["I3"];
    int const s2 = ( s1 & 1 ) + in["I4"] + in["CIN1"];
    CHECK( t.output( x, "C1" ) == ( s1 >= 2 ) );
    CHECK( t.output( x, "SUM" ) == ( s2 & 1 ) );
    CHECK( t.output( x, "C2" ) == ( s2 >= 2 ) );
  }
}

TEST_CASE( "generated circuits agree with the text-table chain", "[compressor][property]" )
{
  auto& gen = test::rng();
  for ( uint32_t n = 3; n <= 10; ++n )
  {
    auto const c = build_compressor( n );
    compressor_spec const s{ n };
    for ( int trial = 0; trial < 30; ++trial )
    {
      std::vector<bool> bits( s.input_bits() );
      for ( size_t i = 0; i < bits.size(); ++i )
      {
        bits[i] = ( gen() & 1u ) != 0u;
      }
      auto const [sum, carries] = reference_chain( bits );
      auto const r = simulate( c, named_assignment( n, bits ) );
      REQUIRE( r.outputs.at( "SUM" ) == sum );
      for ( size_t k = 0; k < carries.size(); ++k )
      {
        REQUIRE( r.outputs.at( "C" + std::to_string( k + 1 ) ) == carries[k] );
      }
    }
  }
}

TEST_CASE( "verify_compressor", "[compressor]" )
{
  auto const r4 = verify_compressor( build_compressor( 4 ), 4 );
  CHECK( r4.ok );
  CHECK( r4.assignments == 32 );
  auto const r5 = verify_compressor( build_compressor( 5 ), 5 );
  CHECK( r5.ok );
  CHECK( r5.assignments == 128 );
  CHECK( verify_compressor( build_compressor( 3 ), 3 ).ok );

  SECTION( "SUM relabeled onto a garbage line" )
  {
    auto const good = build_compressor( 4 );
    circuit bad( good.width() );
    for ( auto const& r : good.inputs() )
    {
      if ( auto const* p = std::get_if<primary_input>( &r.cls ) )
      {
        bad.add_input( r.line, p->name );
      }
      else
      {
        bad.add_constant( r.line, std::get<constant_input>( r.cls ).value );
      }
    }
    for ( auto const& app : good.gates() )
    {
      bad.add_gate( app.gate, app.lines );
    }
    bad.add_output( 2, "SUM" ).add_output( 1, "C1" ).add_output( 4, "C2" );
    bad.add_garbage( 0 ).add_garbage( 3 ).add_garbage( 5 ).add_garbage( 6 );
    REQUIRE( is_valid( bad ) );
    auto const r = verify_compressor( bad, 4 );
    REQUIRE_FALSE( r.ok );
    REQUIRE( r.counterexample );
    auto const& cex = *r.counterexample;
    int ones = 0;
    for ( auto const& [_, b] : cex.inputs )
    {
      ones += b;
    }
    CHECK( static_cast<uint32_t>( ones ) == cex.input_sum );
    CHECK( cex.input_sum != ( cex.sum ? 1u : 0u ) + 2u * cex.carries );
  }

  CHECK_THROWS_MATCHES( verify_compressor( build_compressor( 4 ), 5 ), error,
                        Catch::Matchers::Predicate<error>( []( auto const& e ) { return e.kind() == error_kind::shape_mismatch; } ) );
}

TEST_CASE( "predicted metrics", "[compressor]" )
{
  CHECK( predict_metrics( 4 ) == predicted_metrics{ 2, 4, 2, 20 } );
  CHECK( predict_metrics( 5 ) == predicted_metrics{ 3, 6, 3, 30 } );
  CHECK( predict_metrics( 10 ) == predicted_metrics{ 8, 16, 8, 80 } );

  auto const m10 = compute_metrics( build_compressor( 10 ) );
  CHECK( predicted_metrics{ m10.gate_count, m10.garbage_outputs, m10.constant_inputs, m10.quantum_cost } == predict_metrics( 10 ) );
  CHECK_THROWS_MATCHES( predict_metrics( 3 ), error,
                        Catch::Matchers::Predicate<error>( []( auto const& e ) { return e.kind() == error_kind::n_too_small; } ) );
}

TEST_CASE( "lemma report", "[compressor]" )
{
  auto const one = lemma_report( 4, 4 );
  REQUIRE( one.size() == 1 );
  CHECK( one[0].match() );
  CHECK( one[0].quoted_quantum_cost == 10 );

  auto const five = lemma_report( 4, 8 );
  REQUIRE( five.size() == 5 );
  for ( auto const& r : five )
  {
    CHECK( r.gate_count_match() );
    CHECK( r.garbage_match() );
    CHECK( r.ancilla_match() );
    CHECK( r.quantum_cost_match() );
    CHECK( r.measured.quantum_cost - r.quoted_quantum_cost == 10 );
  }

  CHECK_THROWS_MATCHES( lemma_report( 5, 4 ), error,
                        Catch::Matchers::Predicate<error>( []( auto const& e ) { return e.kind() == error_kind::range_error; } ) );
  CHECK_THROWS_AS( lemma_report( 3, 4 ), error );
  CHECK_THROWS_AS( lemma_report( 4, 13 ), error );
}

TEST_CASE( "build_compressor is deterministic", "[compressor]" )
{
  for ( uint32_t n = 3; n <= 8; ++n )
  {
    CHECK( emit_netlist( build_compressor( n ) ) == emit_netlist( build_compressor( n ) ) );
  }
}
