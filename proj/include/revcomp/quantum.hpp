/*!
  \file quantum.hpp
  \brief State-vector check of NOT / CNOT / controlled-V / controlled-V+ decompositions

  V is the square root of NOT, V+ its adjoint. A decomposition realizes a
  reversible gate if every basis input is mapped to the gate's output word
  up to one global phase shared by all inputs. The quantum cost of a
  decomposition is its number of primitives.
*/

#pragma once

#include "error.hpp"
#include "gate.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace revcomp
{

using complex = std::complex<double>;
using matrix2 = std::array<std::array<complex, 2>, 2>;

inline constexpr uint32_t max_state_width = 12u;

enum class primitive_kind
{
  x,
  cnot,
  cv,
  cvdag
};

inline std::string_view to_string( primitive_kind k )
{
  switch ( k )
  {
  case primitive_kind::x: return "x";
  case primitive_kind::cnot: return "cnot";
  case primitive_kind::cv: return "cv";
  case primitive_kind::cvdag: return "cvdag";
  }
  return "?";
}

struct quantum_primitive
{
  primitive_kind kind;
  uint32_t target;
  std::optional<uint32_t> control{};

  static quantum_primitive x( uint32_t target ) { return { primitive_kind::x, target, std::nullopt }; }
  static quantum_primitive cnot( uint32_t control, uint32_t target ) { return { primitive_kind::cnot, target, control }; }
  static quantum_primitive cv( uint32_t control, uint32_t target ) { return { primitive_kind::cv, target, control }; }
  static quantum_primitive cvdag( uint32_t control, uint32_t target ) { return { primitive_kind::cvdag, target, control }; }

  friend bool operator==( const quantum_primitive&, const quantum_primitive& ) = default;
};

struct primitive_sequence
{
  uint32_t width{ 0 };
  std::vector<quantum_primitive> steps;

  friend bool operator==( const primitive_sequence&, const primitive_sequence& ) = default;
};

inline matrix2 primitive_matrix( primitive_kind kind )
{
  using namespace std::complex_literals;
  switch ( kind )
  {
  case primitive_kind::x:
  case primitive_kind::cnot:
    return { { { 0.0, 1.0 }, { 1.0, 0.0 } } };
  case primitive_kind::cv:
  {
    complex const h = ( 1.0 + 1.0i ) / 2.0;
    return { { { h, -1.0i * h }, { -1.0i * h, h } } };
  }
  case primitive_kind::cvdag:
  {
    complex const h = ( 1.0 - 1.0i ) / 2.0;
    return { { { h, 1.0i * h }, { 1.0i * h, h } } };
  }
  }
  return {};
}

inline matrix2 multiply( const matrix2& a, const matrix2& b )
{
  matrix2 r{};
  for ( int i = 0; i < 2; ++i )
  {
    for ( int j = 0; j < 2; ++j )
    {
      r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    }
  }
  return r;
}

/*! \brief Largest entrywise distance between two matrices. */
inline double max_distance( const matrix2& a, const matrix2& b )
{
  double d = 0.0;
  for ( int i = 0; i < 2; ++i )
  {
    for ( int j = 0; j < 2; ++j )
    {
      d = std::max( d, std::abs( a[i][j] - b[i][j] ) );
    }
  }
  return d;
}

/*! \brief Throws BadIndex if any step references a line outside the sequence or has control == target. */
inline void check_sequence( const primitive_sequence& seq )
{
  for ( size_t i = 0; i < seq.steps.size(); ++i )
  {
    auto const& s = seq.steps[i];
    auto const where = "step " + std::to_string( i ) + " (" + std::string( to_string( s.kind ) ) + ")";
    bool const needs_control = s.kind != primitive_kind::x;
    if ( needs_control != s.control.has_value() )
    {
      throw error( error_kind::bad_index, where + ( needs_control ? " needs a control line" : " takes no control line" ) );
    }
    if ( s.target >= seq.width || ( s.control && *s.control >= seq.width ) )
    {
      throw error( error_kind::bad_index, where + " references a line outside width " + std::to_string( seq.width ) );
    }
    if ( s.control && *s.control == s.target )
    {
      throw error( error_kind::bad_index, where + " has control equal to target" );
    }
  }
}

class state_vector
{
public:
  state_vector( uint32_t width, uint64_t basis ) : width_( width ), amps_( size_t{ 1 } << width, complex{ 0.0 } )
  {
    amps_.at( basis ) = 1.0;
  }

  uint32_t width() const noexcept { return width_; }
  const std::vector<complex>& amplitudes() const noexcept { return amps_; }
  complex operator[]( size_t i ) const { return amps_[i]; }

  double norm_squared() const
  {
    double n = 0.0;
    for ( auto a : amps_ )
    {
      n += std::norm( a );
    }
    return n;
  }

  /*! \brief Line 0 is the most significant bit of a basis index. */
  void apply( const quantum_primitive& p )
  {
    auto const m = primitive_matrix( p.kind );
    uint64_t const tmask = uint64_t{ 1 } << ( width_ - 1u - p.target );
    uint64_t const cmask = p.control ? uint64_t{ 1 } << ( width_ - 1u - *p.control ) : 0u;
    for ( uint64_t i = 0; i < amps_.size(); ++i )
    {
      if ( ( i & tmask ) || ( i & cmask ) != cmask )
      {
        continue;
      }
      auto const a0 = amps_[i];
      auto const a1 = amps_[i | tmask];
      amps_[i] = m[0][0] * a0 + m[0][1] * a1;
      amps_[i | tmask] = m[1][0] * a0 + m[1][1] * a1;
    }
  }

private:
  uint32_t width_;
  std::vector<complex> amps_;
};

inline state_vector apply( const primitive_sequence& seq, uint64_t basis_in )
{
  if ( seq.width > max_state_width )
  {
    throw error( error_kind::width_too_large, "state vector width " + std::to_string( seq.width ) );
  }
  if ( basis_in >= ( uint64_t{ 1 } << seq.width ) )
  {
    throw error( error_kind::bad_index, "basis state " + std::to_string( basis_in ) + " out of range" );
  }
  check_sequence( seq );
  state_vector psi( seq.width, basis_in );
  for ( auto const& s : seq.steps )
  {
    psi.apply( s );
  }
  return psi;
}

inline uint64_t quantum_cost( const primitive_sequence& seq ) noexcept
{
  return seq.steps.size();
}

/*! \brief Step-wise inverse: reversed order with V and V+ exchanged. */
inline primitive_sequence inverse_sequence( const primitive_sequence& seq )
{
  primitive_sequence inv{ seq.width, { seq.steps.rbegin(), seq.steps.rend() } };
  for ( auto& s : inv.steps )
  {
    if ( s.kind == primitive_kind::cv )
    {
      s.kind = primitive_kind::cvdag;
    }
    else if ( s.kind == primitive_kind::cvdag )
    {
      s.kind = primitive_kind::cv;
    }
  }
  return inv;
}

struct decomposition_mismatch
{
  uint32_t input;
  uint32_t expected;
  /*! index of the largest amplitude */
  uint64_t observed;
  complex amplitude;
};

struct decomposition_check
{
  bool ok{ false };
  /*! phase of the amplitude on input 0, shared by all inputs when ok */
  complex global_phase{ 1.0 };
  std::optional<decomposition_mismatch> counterexample;
};

inline decomposition_check verify_decomposition( const primitive_sequence& seq, const gate_spec& g, double tol = 1e-12 )
{
  if ( seq.width != g.width() )
  {
    throw error( error_kind::width_mismatch, "decomposition width " + std::to_string( seq.width ) + " vs gate " + g.name +
                                                 " width " + std::to_string( g.width() ) );
  }
  if ( !( tol > 0.0 ) )
  {
    throw error( error_kind::range_error, "tolerance must be positive" );
  }

  decomposition_check result;
  std::optional<complex> phase;
  for ( uint32_t x = 0; x < g.table.size(); ++x )
  {
    auto const psi = apply( seq, x );
    auto const expected = g( x );
    auto const& amps = psi.amplitudes();
    uint64_t peak = 0u;
    for ( uint64_t i = 1; i < amps.size(); ++i )
    {
      if ( std::abs( amps[i] ) > std::abs( amps[peak] ) )
      {
        peak = i;
      }
    }
    auto const a = amps[expected];
    bool good = std::abs( std::abs( a ) - 1.0 ) <= tol;
    if ( good )
    {
      if ( !phase )
      {
        phase = a;
      }
      good = std::abs( a - *phase ) <= tol;
    }
    if ( !good )
    {
      result.counterexample = decomposition_mismatch{ x, expected, peak, amps[peak] };
      return result;
    }
  }
  result.ok = true;
  result.global_phase = phase.value_or( complex{ 1.0 } );
  return result;
}

/*! \brief Five-primitive Toffoli realization (controls 0,1; target 2). */
inline primitive_sequence toffoli_decomposition()
{
  using q = quantum_primitive;
  return { 3, { q::cv( 1, 2 ), q::cnot( 0, 1 ), q::cvdag( 1, 2 ), q::cv( 0, 2 ), q::cnot( 0, 1 ) } };
}

/*! \brief Four-primitive Peres realization. */
inline primitive_sequence peres_decomposition()
{
  using q = quantum_primitive;
  return { 3, { q::cv( 1, 2 ), q::cv( 0, 2 ), q::cnot( 0, 1 ), q::cvdag( 1, 2 ) } };
}

} // namespace revcomp
