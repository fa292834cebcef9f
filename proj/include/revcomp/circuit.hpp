/*!
  \file circuit.hpp
  \brief Cascades of reversible gates over classified lines

  A circuit has `width` lines. Each line carries exactly one input
  classification (named primary input or constant) and one output
  classification (named primary output or garbage). Gates are applied
  strictly in order; line 0 is the most significant bit of a line word.
*/

#pragma once

#include "error.hpp"
#include "gate.hpp"
#include "truth_table.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace revcomp
{

/*! \brief Lines are packed into a 64-bit word during simulation. */
inline constexpr uint32_t max_circuit_width = 64u;

struct primary_input
{
  std::string name;
  friend bool operator==( const primary_input&, const primary_input& ) = default;
};

struct constant_input
{
  bool value{ false };
  friend bool operator==( const constant_input&, const constant_input& ) = default;
};

struct primary_output
{
  std::string name;
  friend bool operator==( const primary_output&, const primary_output& ) = default;
};

struct garbage_output
{
  friend bool operator==( const garbage_output&, const garbage_output& ) = default;
};

using input_class = std::variant<primary_input, constant_input>;
using output_class = std::variant<primary_output, garbage_output>;

struct input_record
{
  uint32_t line;
  input_class cls;
};

struct output_record
{
  uint32_t line;
  output_class cls;
};

/*! \brief Port k of `gate` is bound to `lines[k]`. */
struct gate_application
{
  gate_ptr gate;
  std::vector<uint32_t> lines;
};

class circuit
{
public:
  explicit circuit( uint32_t width = 0u ) : width_( width ) {}

  uint32_t width() const noexcept { return width_; }

  circuit& add_input( uint32_t line, std::string_view name )
  {
    inputs_.push_back( { line, primary_input{ to_upper( name ) } } );
    return *this;
  }

  circuit& add_constant( uint32_t line, bool value )
  {
    inputs_.push_back( { line, constant_input{ value } } );
    return *this;
  }

  circuit& add_output( uint32_t line, std::string_view name )
  {
    outputs_.push_back( { line, primary_output{ to_upper( name ) } } );
    return *this;
  }

  circuit& add_garbage( uint32_t line )
  {
    outputs_.push_back( { line, garbage_output{} } );
    return *this;
  }

  circuit& add_gate( gate_ptr gate, std::vector<uint32_t> lines )
  {
    gates_.push_back( { std::move( gate ), std::move( lines ) } );
    return *this;
  }

  circuit& add_gate( const gate_spec& gate, std::vector<uint32_t> lines )
  {
    return add_gate( std::make_shared<const gate_spec>( gate ), std::move( lines ) );
  }

  const std::vector<input_record>& inputs() const noexcept { return inputs_; }
  const std::vector<output_record>& outputs() const noexcept { return outputs_; }
  const std::vector<gate_application>& gates() const noexcept { return gates_; }

  /*! \brief Primary inputs sorted by line. */
  std::vector<std::pair<uint32_t, std::string>> primary_inputs() const
  {
    std::vector<std::pair<uint32_t, std::string>> v;
    for ( auto const& r : inputs_ )
    {
      if ( auto const* p = std::get_if<primary_input>( &r.cls ) )
      {
        v.emplace_back( r.line, p->name );
      }
    }
    std::sort( v.begin(), v.end() );
    return v;
  }

  /*! \brief Primary outputs sorted by line. */
  std::vector<std::pair<uint32_t, std::string>> primary_outputs() const
  {
    std::vector<std::pair<uint32_t, std::string>> v;
    for ( auto const& r : outputs_ )
    {
      if ( auto const* p = std::get_if<primary_output>( &r.cls ) )
      {
        v.emplace_back( r.line, p->name );
      }
    }
    std::sort( v.begin(), v.end() );
    return v;
  }

  /*! \brief Word holding every constant line's value (zero elsewhere). */
  uint64_t constant_word() const
  {
    uint64_t w = 0u;
    for ( auto const& r : inputs_ )
    {
      if ( auto const* c = std::get_if<constant_input>( &r.cls ); c && c->value )
      {
        w |= line_mask( r.line );
      }
    }
    return w;
  }

  uint64_t line_mask( uint32_t line ) const { return uint64_t{ 1 } << ( width_ - 1u - line ); }

private:
  uint32_t width_;
  std::vector<input_record> inputs_;
  std::vector<output_record> outputs_;
  std::vector<gate_application> gates_;
};

enum class diagnostic_kind
{
  bad_arity,
  duplicate_line,
  out_of_range,
  unclassified_line,
  duplicate_classification,
  duplicate_name,
  missing_gate,
  width_too_large
};

inline std::string_view to_string( diagnostic_kind k )
{
  switch ( k )
  {
  case diagnostic_kind::bad_arity: return "BadArity";
  case diagnostic_kind::duplicate_line: return "DuplicateLine";
  case diagnostic_kind::out_of_range: return "OutOfRange";
  case diagnostic_kind::unclassified_line: return "UnclassifiedLine";
  case diagnostic_kind::duplicate_classification: return "DuplicateClassification";
  case diagnostic_kind::duplicate_name: return "DuplicateName";
  case diagnostic_kind::missing_gate: return "MissingGate";
  case diagnostic_kind::width_too_large: return "WidthTooLarge";
  }
  return "Diagnostic";
}

struct diagnostic
{
  diagnostic_kind kind;
  std::string message;
};

/*! \brief Lists every structural violation; empty iff the circuit is well-formed. */
inline std::vector<diagnostic> validate( const circuit& c )
{
  std::vector<diagnostic> diags;
  auto report = [&]( diagnostic_kind k, std::string msg ) { diags.push_back( { k, std::move( msg ) } ); };
  auto const w = c.width();

  if ( w > max_circuit_width )
  {
    report( diagnostic_kind::width_too_large, "width " + std::to_string( w ) + " exceeds " + std::to_string( max_circuit_width ) );
  }

  auto check_side = [&]( auto const& records, std::string_view side, auto name_of ) {
    std::vector<uint32_t> count( w, 0u );
    std::set<std::string> names;
    for ( auto const& r : records )
    {
      if ( r.line >= w )
      {
        report( diagnostic_kind::out_of_range, std::string( side ) + " classification of line " + std::to_string( r.line ) +
                                                   " in width-" + std::to_string( w ) + " circuit" );
        continue;
      }
      if ( ++count[r.line] == 2u )
      {
        report( diagnostic_kind::duplicate_classification,
                "line " + std::to_string( r.line ) + " classified more than once as " + std::string( side ) );
      }
      if ( auto const* name = name_of( r ) )
      {
        if ( !names.insert( *name ).second )
        {
          report( diagnostic_kind::duplicate_name, std::string( side ) + " name " + *name + " used twice" );
        }
      }
    }
    for ( uint32_t l = 0; l < w; ++l )
    {
      if ( count[l] == 0u )
      {
        report( diagnostic_kind::unclassified_line, "line " + std::to_string( l ) + " has no " + std::string( side ) + " classification" );
      }
    }
  };

  check_side( c.inputs(), "input", []( input_record const& r ) -> const std::string* {
    auto const* p = std::get_if<primary_input>( &r.cls );
    return p ? &p->name : nullptr;
  } );
  check_side( c.outputs(), "output", []( output_record const& r ) -> const std::string* {
    auto const* p = std::get_if<primary_output>( &r.cls );
    return p ? &p->name : nullptr;
  } );

  for ( size_t i = 0; i < c.gates().size(); ++i )
  {
    auto const& app = c.gates()[i];
    auto const where = "gate " + std::to_string( i );
    if ( !app.gate )
    {
      report( diagnostic_kind::missing_gate, where + " has no gate" );
      continue;
    }
    if ( app.lines.size() != app.gate->width() )
    {
      report( diagnostic_kind::bad_arity, where + " (" + app.gate->name + ") binds " + std::to_string( app.lines.size() ) +
                                              " lines, gate has " + std::to_string( app.gate->width() ) + " ports" );
    }
    std::set<uint32_t> seen;
    for ( auto l : app.lines )
    {
      if ( l >= w )
      {
        report( diagnostic_kind::out_of_range, where + " binds line " + std::to_string( l ) + " in width-" + std::to_string( w ) + " circuit" );
      }
      else if ( !seen.insert( l ).second )
      {
        report( diagnostic_kind::duplicate_line, where + " binds line " + std::to_string( l ) + " twice" );
      }
    }
  }
  return diags;
}

inline bool is_valid( const circuit& c )
{
  return validate( c ).empty();
}

inline void ensure_valid( const circuit& c )
{
  auto const diags = validate( c );
  if ( !diags.empty() )
  {
    throw error( error_kind::invalid_circuit, std::string( to_string( diags.front().kind ) ) + ": " + diags.front().message );
  }
}

/*! \brief Applies every gate of `c` to the line word `state`. `c` must be valid. */
inline uint64_t propagate( const circuit& c, uint64_t state )
{
  auto const w = c.width();
  for ( auto const& app : c.gates() )
  {
    uint32_t in = 0u;
    for ( auto l : app.lines )
    {
      in = ( in << 1u ) | static_cast<uint32_t>( ( state >> ( w - 1u - l ) ) & 1u );
    }
    uint32_t const out = app.gate->table( in );
    auto const k = static_cast<uint32_t>( app.lines.size() );
    for ( uint32_t p = 0; p < k; ++p )
    {
      uint64_t const mask = uint64_t{ 1 } << ( w - 1u - app.lines[p] );
      state = port_bit( out, k, p ) ? ( state | mask ) : ( state & ~mask );
    }
  }
  return state;
}

/*! \brief Line word for a primary-input word (first primary input by line = MSB) with constants applied. */
inline uint64_t initial_state( const circuit& c, const std::vector<std::pair<uint32_t, std::string>>& pis, uint64_t pi_word )
{
  uint64_t state = c.constant_word();
  auto const k = pis.size();
  for ( size_t i = 0; i < k; ++i )
  {
    if ( ( pi_word >> ( k - 1u - i ) ) & 1u )
    {
      state |= c.line_mask( pis[i].first );
    }
  }
  return state;
}

struct simulation_result
{
  std::map<std::string, bool> outputs;
  /*! garbage line -> value, ascending by line */
  std::map<uint32_t, bool> garbage;
};

inline simulation_result simulate( const circuit& c, const std::map<std::string, bool>& assignment )
{
  ensure_valid( c );
  std::map<std::string, bool> normalized;
  for ( auto const& [name, bit] : assignment )
  {
    normalized[to_upper( name )] = bit;
  }

  uint64_t state = c.constant_word();
  size_t used = 0u;
  for ( auto const& [line, name] : c.primary_inputs() )
  {
    auto it = normalized.find( name );
    if ( it == normalized.end() )
    {
      throw error( error_kind::missing_input, name );
    }
    ++used;
    if ( it->second )
    {
      state |= c.line_mask( line );
    }
  }
  if ( used != normalized.size() )
  {
    auto const pis = c.primary_inputs();
    for ( auto const& [name, _] : normalized )
    {
      if ( std::none_of( pis.begin(), pis.end(), [&]( auto const& p ) { return p.second == name; } ) )
      {
        throw error( error_kind::unknown_input, name );
      }
    }
  }

  state = propagate( c, state );

  simulation_result r;
  for ( auto const& rec : c.outputs() )
  {
    bool const bit = ( state & c.line_mask( rec.line ) ) != 0u;
    if ( auto const* p = std::get_if<primary_output>( &rec.cls ) )
    {
      r.outputs[p->name] = bit;
    }
    else
    {
      r.garbage[rec.line] = bit;
    }
  }
  return r;
}

/*! \brief Permutation realized on all 2^width line words, ignoring classifications. */
inline truth_table full_permutation( const circuit& c )
{
  if ( c.width() > max_exhaustive_width )
  {
    throw error( error_kind::width_too_large, "full permutation of width " + std::to_string( c.width() ) );
  }
  ensure_valid( c );
  std::vector<uint32_t> m( size_t{ 1 } << c.width() );
  for ( uint64_t x = 0; x < m.size(); ++x )
  {
    m[x] = static_cast<uint32_t>( propagate( c, x ) );
  }
  return truth_table( c.width(), std::move( m ) );
}

/*! \brief Output line words for every primary-input assignment, constants fixed. */
struct restricted_table
{
  uint32_t width{ 0 };
  std::vector<std::pair<uint32_t, std::string>> inputs;
  std::vector<std::pair<uint32_t, std::string>> outputs;
  std::vector<uint64_t> rows;
  bool injective{ false };

  bool line_value( uint64_t row, uint32_t line ) const { return ( rows.at( row ) >> ( width - 1u - line ) ) & 1u; }

  bool output( uint64_t row, std::string_view name ) const
  {
    auto const upper = to_upper( name );
    for ( auto const& [line, n] : outputs )
    {
      if ( n == upper )
      {
        return line_value( row, line );
      }
    }
    throw error( error_kind::unknown_input, "no primary output " + upper );
  }
};

inline restricted_table restricted_function( const circuit& c )
{
  ensure_valid( c );
  restricted_table t;
  t.width = c.width();
  t.inputs = c.primary_inputs();
  t.outputs = c.primary_outputs();
  if ( t.inputs.size() > max_exhaustive_width )
  {
    throw error( error_kind::width_too_large, std::to_string( t.inputs.size() ) + " primary inputs" );
  }
  auto const n = uint64_t{ 1 } << t.inputs.size();
  t.rows.resize( n );
  for ( uint64_t x = 0; x < n; ++x )
  {
    t.rows[x] = propagate( c, initial_state( c, t.inputs, x ) );
  }
  auto sorted = t.rows;
  std::sort( sorted.begin(), sorted.end() );
  t.injective = std::adjacent_find( sorted.begin(), sorted.end() ) == sorted.end();
  return t;
}

struct metrics
{
  uint64_t gate_count{ 0 };
  uint64_t quantum_cost{ 0 };
  uint64_t constant_inputs{ 0 };
  uint64_t garbage_outputs{ 0 };
  cost_vector logic_cost{};

  friend bool operator==( const metrics&, const metrics& ) = default;
};

/*! \brief Formats as `gates=2,ci=2,go=4,qc=20,T=14A+8B+6D`. */
inline std::string to_string( const metrics& m )
{
  return "gates=" + std::to_string( m.gate_count ) + ",ci=" + std::to_string( m.constant_inputs ) + ",go=" +
         std::to_string( m.garbage_outputs ) + ",qc=" + std::to_string( m.quantum_cost ) + ",T=" + to_string( m.logic_cost );
}

inline metrics compute_metrics( const circuit& c )
{
  ensure_valid( c );
  metrics m;
  m.gate_count = c.gates().size();
  for ( auto const& app : c.gates() )
  {
    m.quantum_cost += app.gate->quantum_cost;
    m.logic_cost += app.gate->logic_cost;
  }
  for ( auto const& r : c.inputs() )
  {
    m.constant_inputs += std::holds_alternative<constant_input>( r.cls ) ? 1u : 0u;
  }
  for ( auto const& r : c.outputs() )
  {
    m.garbage_outputs += std::holds_alternative<garbage_output>( r.cls ) ? 1u : 0u;
  }
  return m;
}

/*! \brief `c` followed by the inverses of its gates in reverse order. */
inline circuit append_inverse( const circuit& c )
{
  ensure_valid( c );
  circuit r = c;
  auto const& gates = c.gates();
  for ( auto it = gates.rbegin(); it != gates.rend(); ++it )
  {
    r.add_gate( inverse_gate( *it->gate ), it->lines );
  }
  return r;
}

/*! \brief Gates of `b` appended to `a`; classifications come from `a`. */
inline circuit concatenate( const circuit& a, const circuit& b )
{
  if ( a.width() != b.width() )
  {
    throw error( error_kind::width_mismatch, "cannot concatenate circuits of different widths" );
  }
  circuit r = a;
  for ( auto const& app : b.gates() )
  {
    r.add_gate( app.gate, app.lines );
  }
  return r;
}

} // namespace revcomp
