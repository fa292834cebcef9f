/*!
  \file gate.hpp
  \brief Reversible gate library: truth-table backed gates with cost metadata

  Builtin gates: NOT, CNOT (alias FG), F2G, TG, PG, FRG, BJN, URG and the
  4x4 INV0 full adder/subtractor gate.
*/

#pragma once

#include "error.hpp"
#include "truth_table.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace revcomp
{

inline constexpr uint32_t max_gate_width = 8u;

struct gate_spec
{
  std::string name;
  truth_table table;
  uint64_t quantum_cost{ 0 };
  cost_vector logic_cost{};
  std::optional<uint64_t> transistor_count{};

  uint32_t width() const noexcept { return table.width(); }
  uint32_t operator()( uint32_t word ) const { return table( word ); }

  friend bool operator==( const gate_spec&, const gate_spec& ) = default;
};

using gate_ptr = std::shared_ptr<const gate_spec>;

inline std::string to_upper( std::string_view s )
{
  std::string r( s );
  std::transform( r.begin(), r.end(), r.begin(), []( unsigned char c ) { return static_cast<char>( std::toupper( c ) ); } );
  return r;
}

/*! \brief Creates a gate from its output rows (row index = input word). */
inline gate_spec gate_from_truth_table( std::string_view name, uint32_t width, std::vector<uint32_t> rows,
                                        uint64_t quantum_cost = 0u, cost_vector logic_cost = {} )
{
  if ( width < 1u || width > max_gate_width )
  {
    throw error( error_kind::bad_arity, "gate width must be in 1.." + std::to_string( max_gate_width ) );
  }
  return gate_spec{ to_upper( name ), truth_table( width, std::move( rows ) ), quantum_cost, logic_cost, std::nullopt };
}

inline constexpr std::string_view inverse_suffix = "_INV";

/*! \brief Inverse gate: same costs, inverse permutation. */
inline gate_spec inverse_gate( const gate_spec& g )
{
  auto inv = g;
  inv.table = g.table.inverse();
  if ( inv.name.ends_with( inverse_suffix ) )
  {
    inv.name.resize( inv.name.size() - inverse_suffix.size() );
  }
  else
  {
    inv.name += inverse_suffix;
  }
  return inv;
}

namespace detail
{

template<uint32_t Width, class Fn>
std::vector<uint32_t> tabulate( Fn&& fn )
{
  std::vector<uint32_t> rows( 1u << Width );
  for ( uint32_t x = 0; x < rows.size(); ++x )
  {
    std::array<bool, Width> in{};
    for ( uint32_t p = 0; p < Width; ++p )
    {
      in[p] = port_bit( x, Width, p );
    }
    auto const out = fn( in );
    uint32_t word = 0u;
    for ( bool b : out )
    {
      word = ( word << 1u ) | ( b ? 1u : 0u );
    }
    rows[x] = word;
  }
  return rows;
}

using in3 = std::array<bool, 3>;
using out3 = std::array<bool, 3>;

} // namespace detail

/*! \brief Outputs of INV0 (ordered P, Q, R, S) from the gate's algebraic form.
 *
 * P = A^B^C, Q = ((A^B)C + AB)^D, R = C, S = ((A^B)'C + A'B)^D^1.
 * Kept separate from the tabular definition so the two can be compared.
 */
constexpr std::array<bool, 4> inv0_expressions( bool a, bool b, bool c, bool d )
{
  bool const axb = a != b;
  bool const p = axb != c;
  bool const q = ( ( axb && c ) || ( a && b ) ) != d;
  bool const r = c;
  bool const s = !( ( ( !axb && c ) || ( !a && b ) ) != d );
  return { p, q, r, s };
}

/*! \brief Output words of INV0, one per input word ABCD. */
inline constexpr std::array<uint32_t, 16> inv0_rows = {
    0b0001, 0b0100, 0b1010, 0b1111, 0b1000, 0b1101, 0b0110, 0b0011,
    0b1001, 0b1100, 0b0111, 0b0010, 0b0101, 0b0000, 0b1110, 0b1011 };

inline const std::vector<std::string>& builtin_gate_names()
{
  static const std::vector<std::string> names{ "NOT", "CNOT", "F2G", "TG", "PG", "FRG", "BJN", "URG", "INV0" };
  return names;
}

/*! \brief Returns the canonical builtin name for `name` (resolving aliases), if any. */
inline std::optional<std::string> canonical_builtin_name( std::string_view name )
{
  auto const upper = to_upper( name );
  if ( upper == "FG" )
  {
    return "CNOT";
  }
  auto const& names = builtin_gate_names();
  if ( std::find( names.begin(), names.end(), upper ) != names.end() )
  {
    return upper;
  }
  return std::nullopt;
}

/*! \brief Library gate by name.
 *
 * Quantum costs of TG (5), PG (4) and INV0 (10) are the published values;
 * the remaining costs and all logic costs other than INV0's are
 * conventional defaults that callers may override on the returned value.
 */
inline gate_spec builtin_gate( std::string_view name )
{
  using namespace detail;
  auto const canonical = canonical_builtin_name( name );
  if ( !canonical )
  {
    throw error( error_kind::unknown_gate, std::string( name ) );
  }
  auto const& n = *canonical;

  if ( n == "NOT" )
  {
    return gate_from_truth_table( n, 1, { 1u, 0u }, 1, { 0, 0, 1 } );
  }
  if ( n == "CNOT" )
  {
    auto rows = tabulate<2>( []( std::array<bool, 2> in ) { return std::array<bool, 2>{ in[0], in[0] != in[1] }; } );
    return gate_from_truth_table( n, 2, std::move( rows ), 1, { 1, 0, 0 } );
  }
  if ( n == "F2G" )
  {
    auto rows = tabulate<3>( []( in3 in ) { return out3{ in[0], in[0] != in[1], in[0] != in[2] }; } );
    return gate_from_truth_table( n, 3, std::move( rows ), 2, { 2, 0, 0 } );
  }
  if ( n == "TG" )
  {
    auto rows = tabulate<3>( []( in3 in ) { return out3{ in[0], in[1], ( in[0] && in[1] ) != in[2] }; } );
    return gate_from_truth_table( n, 3, std::move( rows ), 5, { 1, 1, 0 } );
  }
  if ( n == "PG" )
  {
    auto rows = tabulate<3>( []( in3 in ) { return out3{ in[0], in[0] != in[1], ( in[0] && in[1] ) != in[2] }; } );
    return gate_from_truth_table( n, 3, std::move( rows ), 4, { 2, 1, 0 } );
  }
  if ( n == "FRG" )
  {
    // controlled swap: Q = A'B + AC, R = AB + A'C
    auto rows = tabulate<3>( []( in3 in ) {
      auto const [a, b, c] = in;
      return out3{ a, ( !a && b ) || ( a && c ), ( a && b ) || ( !a && c ) };
    } );
    return gate_from_truth_table( n, 3, std::move( rows ), 5, { 3, 1, 0 } );
  }
  if ( n == "BJN" )
  {
    auto rows = tabulate<3>( []( in3 in ) { return out3{ in[0], in[1], ( in[0] || in[1] ) != in[2] }; } );
    return gate_from_truth_table( n, 3, std::move( rows ), 5, { 3, 1, 0 } );
  }
  if ( n == "URG" )
  {
    auto rows = tabulate<3>( []( in3 in ) {
      auto const [a, b, c] = in;
      return out3{ ( a || b ) != c, b, ( a && b ) != c };
    } );
    return gate_from_truth_table( n, 3, std::move( rows ), 6, { 4, 1, 0 } );
  }
  // INV0
  return gate_from_truth_table( n, 4, std::vector<uint32_t>( inv0_rows.begin(), inv0_rows.end() ), 10, { 7, 4, 3 } );
}

/*! \brief Restriction of a gate with some input ports pinned to constants.
 *
 * Rows are indexed by the word formed from the free ports (in ascending
 * port order, first free port = MSB); each row holds the full output word.
 */
struct mode_function
{
  uint32_t width{ 0 };
  std::vector<uint32_t> free_ports;
  std::vector<uint32_t> outputs;

  bool output_bit( uint32_t free_word, uint32_t port ) const { return port_bit( outputs.at( free_word ), width, port ); }
};

inline mode_function mode_table( const gate_spec& g, const std::map<uint32_t, bool>& pinned )
{
  auto const w = g.width();
  for ( auto const& [port, _] : pinned )
  {
    if ( port >= w )
    {
      throw error( error_kind::unknown_port, "port " + std::to_string( port ) + " on gate " + g.name );
    }
  }

  mode_function f;
  f.width = w;
  for ( uint32_t p = 0; p < w; ++p )
  {
    if ( !pinned.contains( p ) )
    {
      f.free_ports.push_back( p );
    }
  }

  auto const k = static_cast<uint32_t>( f.free_ports.size() );
  f.outputs.resize( size_t{ 1 } << k );
  for ( uint32_t fw = 0; fw < f.outputs.size(); ++fw )
  {
    uint32_t word = 0u;
    for ( uint32_t p = 0; p < w; ++p )
    {
      bool bit;
      if ( auto it = pinned.find( p ); it != pinned.end() )
      {
        bit = it->second;
      }
      else
      {
        auto const idx = static_cast<uint32_t>( std::find( f.free_ports.begin(), f.free_ports.end(), p ) - f.free_ports.begin() );
        bit = port_bit( fw, k, idx );
      }
      word = ( word << 1u ) | ( bit ? 1u : 0u );
    }
    f.outputs[fw] = g( word );
  }
  return f;
}

/*! \brief Port letter (A, B, C, ...) to index; throws UnknownPort. */
inline uint32_t port_index( std::string_view letter, uint32_t width )
{
  if ( letter.size() != 1u || !std::isalpha( static_cast<unsigned char>( letter[0] ) ) )
  {
    throw error( error_kind::unknown_port, std::string( letter ) );
  }
  auto const idx = static_cast<uint32_t>( std::toupper( static_cast<unsigned char>( letter[0] ) ) - 'A' );
  if ( idx >= width )
  {
    throw error( error_kind::unknown_port, std::string( letter ) );
  }
  return idx;
}

/*! \brief Case-insensitive set of named gates.
 *
 * Names ending in `_INV` resolve to the inverse of the base gate when not
 * registered explicitly.
 */
class gate_registry
{
public:
  gate_registry() = default;

  static gate_registry with_builtins()
  {
    gate_registry r;
    for ( auto const& n : builtin_gate_names() )
    {
      r.gates_.emplace( n, std::make_shared<const gate_spec>( builtin_gate( n ) ) );
    }
    return r;
  }

  void add( gate_spec g )
  {
    g.name = to_upper( g.name );
    if ( g.name.empty() )
    {
      throw error( error_kind::syntax_error, "empty gate name" );
    }
    if ( canonical_builtin_name( g.name ) || gates_.contains( g.name ) )
    {
      throw error( error_kind::duplicate_gate, g.name );
    }
    auto const key = g.name;
    gates_.emplace( key, std::make_shared<const gate_spec>( std::move( g ) ) );
  }

  bool contains( std::string_view name ) const noexcept { return lookup( name ) != nullptr; }

  gate_ptr find( std::string_view name ) const
  {
    if ( auto g = lookup( name ) )
    {
      return g;
    }
    throw error( error_kind::unknown_gate, std::string( name ) );
  }

  /*! \brief Registered gates in name order. */
  std::vector<gate_ptr> gates() const
  {
    std::vector<gate_ptr> v;
    for ( auto const& [_, g] : gates_ )
    {
      v.push_back( g );
    }
    return v;
  }

private:
  gate_ptr lookup( std::string_view name ) const
  {
    auto upper = to_upper( name );
    if ( auto canonical = canonical_builtin_name( upper ) )
    {
      upper = *canonical;
    }
    if ( auto it = gates_.find( upper ); it != gates_.end() )
    {
      return it->second;
    }
    if ( upper.ends_with( inverse_suffix ) && upper.size() > inverse_suffix.size() )
    {
      if ( auto base = lookup( upper.substr( 0, upper.size() - inverse_suffix.size() ) ) )
      {
        return std::make_shared<const gate_spec>( inverse_gate( *base ) );
      }
    }
    return nullptr;
  }

  std::map<std::string, gate_ptr> gates_;
};

} // namespace revcomp
