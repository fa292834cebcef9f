/*!
  \file compressor.hpp
  \brief n:2 reversible compressors built as cascades of INV0 full-adder stages

  Stage 1 adds I1, I2, I3. Every further stage adds the running sum to two
  fresh bits, taking operands I4..In first and then carry-ins
  CIN1..CIN(n-3). Every stage's D port is tied to constant 0 so Q is the
  stage carry. The running sum stays on line 0 and leaves as SUM; the Q of
  stage k leaves as Ck. Everything else is garbage.

  Line layout: 0..2 = I1..I3, 3 = constant; stage k >= 2 owns lines
  4+3(k-2) .. 6+3(k-2) (two fresh bits and one constant).
*/

#pragma once

#include "circuit.hpp"
#include "error.hpp"
#include "gate.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace revcomp
{

inline constexpr uint32_t min_compressor_n = 3u;
inline constexpr uint32_t max_compressor_n = 14u;

/*! \brief Shape of an n:2 compressor. */
struct compressor_spec
{
  uint32_t n;

  uint32_t carry_ins() const noexcept { return n > 3u ? n - 3u : 0u; }
  uint32_t stages() const noexcept { return n > 3u ? n - 2u : 1u; }
  uint32_t input_bits() const noexcept { return n + carry_ins(); }
  uint32_t width() const noexcept { return 4u + 3u * ( stages() - 1u ); }
};

inline circuit build_compressor( uint32_t n )
{
  if ( n < min_compressor_n )
  {
    throw error( error_kind::n_too_small, "n = " + std::to_string( n ) + " < " + std::to_string( min_compressor_n ) );
  }
  if ( n > max_compressor_n )
  {
    throw error( error_kind::n_too_large, "n = " + std::to_string( n ) + " > " + std::to_string( max_compressor_n ) );
  }

  compressor_spec const spec{ n };
  auto const inv0 = std::make_shared<const gate_spec>( builtin_gate( "INV0" ) );

  std::vector<std::string> fresh;
  for ( uint32_t i = 1; i <= n; ++i )
  {
    fresh.push_back( "I" + std::to_string( i ) );
  }
  for ( uint32_t i = 1; i <= spec.carry_ins(); ++i )
  {
    fresh.push_back( "CIN" + std::to_string( i ) );
  }

  circuit c( spec.width() );
  c.add_input( 0, fresh[0] ).add_input( 1, fresh[1] ).add_input( 2, fresh[2] ).add_constant( 3, false );
  c.add_gate( inv0, { 0, 1, 2, 3 } );
  c.add_output( 1, "C1" ).add_garbage( 2 ).add_garbage( 3 );

  size_t next = 3u;
  for ( uint32_t k = 2; k <= spec.stages(); ++k )
  {
    uint32_t const base = 4u + 3u * ( k - 2u );
    c.add_input( base, fresh[next] ).add_input( base + 1u, fresh[next + 1u] ).add_constant( base + 2u, false );
    next += 2u;
    c.add_gate( inv0, { 0, base, base + 1u, base + 2u } );
    c.add_output( base, "C" + std::to_string( k ) ).add_garbage( base + 1u ).add_garbage( base + 2u );
  }
  c.add_output( 0, "SUM" );
  return c;
}

struct compressor_counterexample
{
  std::map<std::string, bool> inputs;
  uint32_t input_sum;
  bool sum;
  uint32_t carries;
};

struct compressor_check
{
  bool ok{ false };
  uint64_t assignments{ 0 };
  std::optional<compressor_counterexample> counterexample;
};

/*! \brief Largest number of primary inputs enumerated by `verify_compressor`. */
inline constexpr uint32_t max_compressor_inputs = 2u * max_compressor_n - 3u;

/*! \brief Checks sum(inputs) = SUM + 2 * sum(other primary outputs) for every assignment. */
inline compressor_check verify_compressor( const circuit& c, uint32_t n )
{
  ensure_valid( c );
  compressor_spec const spec{ n };
  auto const pis = c.primary_inputs();
  auto const pos = c.primary_outputs();
  if ( n < min_compressor_n || pis.size() != spec.input_bits() )
  {
    throw error( error_kind::shape_mismatch, "expected " + std::to_string( spec.input_bits() ) + " primary inputs for n = " +
                                                 std::to_string( n ) + ", circuit has " + std::to_string( pis.size() ) );
  }
  if ( pis.size() > max_compressor_inputs )
  {
    throw error( error_kind::width_too_large, std::to_string( pis.size() ) + " primary inputs" );
  }

  std::optional<uint64_t> sum_mask;
  uint64_t carry_mask = 0u;
  for ( auto const& [line, name] : pos )
  {
    if ( name == "SUM" )
    {
      sum_mask = c.line_mask( line );
    }
    else
    {
      carry_mask |= c.line_mask( line );
    }
  }
  if ( !sum_mask )
  {
    throw error( error_kind::shape_mismatch, "circuit has no SUM output" );
  }

  compressor_check result;
  uint64_t const count = uint64_t{ 1 } << pis.size();
  for ( uint64_t x = 0; x < count; ++x )
  {
    auto const out = propagate( c, initial_state( c, pis, x ) );
    auto const input_sum = static_cast<uint32_t>( std::popcount( x ) );
    bool const sum = ( out & *sum_mask ) != 0u;
    auto const carries = static_cast<uint32_t>( std::popcount( out & carry_mask ) );
    ++result.assignments;
    if ( input_sum != ( sum ? 1u : 0u ) + 2u * carries )
    {
      compressor_counterexample cex{ {}, input_sum, sum, carries };
      for ( size_t i = 0; i < pis.size(); ++i )
      {
        cex.inputs[pis[i].second] = ( x >> ( pis.size() - 1u - i ) ) & 1u;
      }
      result.counterexample = std::move( cex );
      return result;
    }
  }
  result.ok = true;
  return result;
}

/*! \brief Closed-form costs of the n:2 cascade. */
struct predicted_metrics
{
  uint64_t gate_count;
  uint64_t garbage_outputs;
  uint64_t ancilla_inputs;
  uint64_t quantum_cost;

  friend bool operator==( const predicted_metrics&, const predicted_metrics& ) = default;
};

inline predicted_metrics predict_metrics( uint32_t n )
{
  if ( n < 4u )
  {
    throw error( error_kind::n_too_small, "closed forms hold for n >= 4" );
  }
  uint64_t const m = n;
  return { m - 2u, 2u * m - 4u, m - 2u, 10u * ( m - 2u ) };
}

struct lemma_row
{
  uint32_t n;
  predicted_metrics predicted;
  predicted_metrics measured;
  /*! 10(n-3): the closed form sometimes quoted for the quantum cost; informational */
  uint64_t quoted_quantum_cost;

  bool gate_count_match() const noexcept { return predicted.gate_count == measured.gate_count; }
  bool garbage_match() const noexcept { return predicted.garbage_outputs == measured.garbage_outputs; }
  bool ancilla_match() const noexcept { return predicted.ancilla_inputs == measured.ancilla_inputs; }
  bool quantum_cost_match() const noexcept { return predicted.quantum_cost == measured.quantum_cost; }
  bool match() const noexcept { return predicted == measured; }
};

inline constexpr uint32_t max_lemma_n = 12u;

inline std::vector<lemma_row> lemma_report( uint32_t n_lo, uint32_t n_hi )
{
  if ( n_lo < 4u || n_hi < n_lo || n_hi > max_lemma_n )
  {
    throw error( error_kind::range_error, "need 4 <= lo <= hi <= " + std::to_string( max_lemma_n ) + ", got [" +
                                              std::to_string( n_lo ) + ", " + std::to_string( n_hi ) + "]" );
  }
  std::vector<lemma_row> rows;
  for ( uint32_t n = n_lo; n <= n_hi; ++n )
  {
    auto const m = compute_metrics( build_compressor( n ) );
    rows.push_back( { n, predict_metrics( n ), { m.gate_count, m.garbage_outputs, m.constant_inputs, m.quantum_cost }, 10u * ( n - 3u ) } );
  }
  return rows;
}

} // namespace revcomp
