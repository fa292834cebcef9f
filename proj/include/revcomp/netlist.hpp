/*!
  \file netlist.hpp
  \brief Line-oriented text formats: netlists, gate registries, primitive decompositions

  Common lexical rules: `#` starts a comment, keywords are
  case-insensitive, tokens are separated by blanks, CR/LF line endings are
  accepted.

  Netlist records (`width` must come first):

      width <N>
      gate <NAME> <WIDTH> <hex words...> <QC> <ALPHA> <BETA> <DELTA> [<TRANSISTORS>]
      input <idx> <NAME>
      const <idx> <0|1>
      apply <GATE> <idx...>
      output <idx> <NAME>
      garbage <idx>

  A gate-registry file holds only `gate` records. A decomposition file
  starts with `width <N>` followed by `x <t>`, `cnot <c> <t>`,
  `cv <c> <t>` and `cvdag <c> <t>` records.
*/

#pragma once

#include "circuit.hpp"
#include "error.hpp"
#include "gate.hpp"
#include "quantum.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace revcomp
{

namespace detail
{

struct token
{
  std::string_view text;
  size_t column; /* 1-based */
};

struct record
{
  size_t line; /* 1-based */
  std::vector<token> tokens;
};

inline std::vector<record> tokenize( std::string_view text )
{
  std::vector<record> records;
  size_t line_no = 0u;
  size_t pos = 0u;
  while ( pos <= text.size() )
  {
    auto end = text.find( '\n', pos );
    if ( end == std::string_view::npos )
    {
      end = text.size();
    }
    auto line = text.substr( pos, end - pos );
    ++line_no;
    if ( auto hash = line.find( '#' ); hash != std::string_view::npos )
    {
      line = line.substr( 0, hash );
    }
    record rec{ line_no, {} };
    size_t i = 0u;
    while ( i < line.size() )
    {
      while ( i < line.size() && std::isspace( static_cast<unsigned char>( line[i] ) ) )
      {
        ++i;
      }
      auto const start = i;
      while ( i < line.size() && !std::isspace( static_cast<unsigned char>( line[i] ) ) )
      {
        ++i;
      }
      if ( i > start )
      {
        rec.tokens.push_back( { line.substr( start, i - start ), start + 1u } );
      }
    }
    if ( !rec.tokens.empty() )
    {
      records.push_back( std::move( rec ) );
    }
    pos = end + 1u;
  }
  return records;
}

[[noreturn]] inline void fail( error_kind kind, size_t line, size_t column, const std::string& msg )
{
  throw error( kind, "line " + std::to_string( line ) + ", column " + std::to_string( column ) + ": " + msg );
}

inline uint64_t parse_number( const record& rec, size_t idx, int base = 10 )
{
  if ( idx >= rec.tokens.size() )
  {
    auto const col = rec.tokens.back().column + rec.tokens.back().text.size();
    fail( error_kind::syntax_error, rec.line, col, "expected a number" );
  }
  auto const& tok = rec.tokens[idx];
  auto text = tok.text;
  if ( base == 16 && ( text.starts_with( "0x" ) || text.starts_with( "0X" ) ) )
  {
    text.remove_prefix( 2 );
  }
  uint64_t value = 0u;
  auto const [ptr, ec] = std::from_chars( text.data(), text.data() + text.size(), value, base );
  if ( ec != std::errc{} || ptr != text.data() + text.size() || text.empty() )
  {
    fail( error_kind::syntax_error, rec.line, tok.column, "expected a number, got '" + std::string( tok.text ) + "'" );
  }
  return value;
}

inline void expect_tokens( const record& rec, size_t count )
{
  if ( rec.tokens.size() != count )
  {
    auto const col = rec.tokens.size() > count ? rec.tokens[count].column : rec.tokens.back().column;
    fail( error_kind::syntax_error, rec.line, col,
          "'" + to_upper( rec.tokens[0].text ) + "' takes " + std::to_string( count - 1u ) + " argument(s)" );
  }
}

inline uint32_t parse_index( const record& rec, size_t idx )
{
  auto const v = parse_number( rec, idx );
  if ( v > UINT32_MAX )
  {
    fail( error_kind::syntax_error, rec.line, rec.tokens[idx].column, "index too large" );
  }
  return static_cast<uint32_t>( v );
}

inline bool is_name( std::string_view s )
{
  return !s.empty() && std::all_of( s.begin(), s.end(), []( unsigned char c ) { return std::isalnum( c ) || c == '_'; } ) &&
         !std::isdigit( static_cast<unsigned char>( s[0] ) );
}

inline std::string_view name_token( const record& rec, size_t idx )
{
  auto const& tok = rec.tokens[idx];
  if ( !is_name( tok.text ) )
  {
    fail( error_kind::syntax_error, rec.line, tok.column, "invalid name '" + std::string( tok.text ) + "'" );
  }
  return tok.text;
}

inline gate_spec parse_gate_record( const record& rec )
{
  if ( rec.tokens.size() < 3u )
  {
    fail( error_kind::syntax_error, rec.line, rec.tokens.back().column, "gate record needs a name and a width" );
  }
  auto const name = name_token( rec, 1 );
  auto const width = parse_index( rec, 2 );
  if ( width < 1u || width > max_gate_width )
  {
    fail( error_kind::bad_arity, rec.line, rec.tokens[2].column, "gate width must be in 1.." + std::to_string( max_gate_width ) );
  }
  size_t const rows = size_t{ 1 } << width;
  size_t const fixed = 3u + rows + 4u;
  if ( rec.tokens.size() != fixed && rec.tokens.size() != fixed + 1u )
  {
    fail( error_kind::bad_arity, rec.line, rec.tokens[0].column,
          "gate " + std::string( name ) + " of width " + std::to_string( width ) + " needs " + std::to_string( rows ) +
              " output words followed by qc alpha beta delta [transistors]" );
  }
  std::vector<uint32_t> words( rows );
  for ( size_t i = 0; i < rows; ++i )
  {
    words[i] = static_cast<uint32_t>( parse_number( rec, 3u + i, 16 ) );
  }
  auto const qc = parse_number( rec, 3u + rows );
  cost_vector const t{ parse_number( rec, 4u + rows ), parse_number( rec, 5u + rows ), parse_number( rec, 6u + rows ) };
  try
  {
    auto g = gate_from_truth_table( name, width, std::move( words ), qc, t );
    if ( rec.tokens.size() == fixed + 1u )
    {
      g.transistor_count = parse_number( rec, fixed );
    }
    return g;
  }
  catch ( const error& e )
  {
    fail( e.kind(), rec.line, rec.tokens[3].column, e.what() );
  }
}

inline std::string hex( uint32_t v )
{
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

} // namespace detail

/*! \brief One `gate` record (no trailing newline). */
inline std::string emit_gate_record( const gate_spec& g )
{
  std::string s = "gate " + to_upper( g.name ) + " " + std::to_string( g.width() );
  for ( auto w : g.table.mapping() )
  {
    s += " " + detail::hex( w );
  }
  s += " " + std::to_string( g.quantum_cost ) + " " + std::to_string( g.logic_cost.alpha ) + " " +
       std::to_string( g.logic_cost.beta ) + " " + std::to_string( g.logic_cost.delta );
  if ( g.transistor_count )
  {
    s += " " + std::to_string( *g.transistor_count );
  }
  return s;
}

/*! \brief Adds every `gate` record in `text` to `registry`. */
inline void parse_gate_registry( std::string_view text, gate_registry& registry )
{
  for ( auto const& rec : detail::tokenize( text ) )
  {
    if ( to_upper( rec.tokens[0].text ) != "GATE" )
    {
      detail::fail( error_kind::syntax_error, rec.line, rec.tokens[0].column,
                    "expected 'gate', got '" + std::string( rec.tokens[0].text ) + "'" );
    }
    auto g = detail::parse_gate_record( rec );
    try
    {
      registry.add( std::move( g ) );
    }
    catch ( const error& e )
    {
      detail::fail( e.kind(), rec.line, rec.tokens[1].column, e.what() );
    }
  }
}

inline std::string emit_gate_registry( const std::vector<gate_ptr>& gates )
{
  std::string s;
  for ( auto const& g : gates )
  {
    s += emit_gate_record( *g ) + "\n";
  }
  return s;
}

struct netlist_document
{
  circuit circ;
  /*! source line of each `apply` record, parallel to circ.gates() */
  std::vector<size_t> apply_lines;
  /*! builtins plus gates defined inline */
  gate_registry gates;
};

/*! \brief Parses a netlist. Structural problems (bad arity, duplicate or
 *  unclassified lines, duplicate names) are left to `validate`. */
inline netlist_document parse_netlist( std::string_view text, const gate_registry& registry = gate_registry::with_builtins() )
{
  using namespace detail;
  netlist_document doc{ circuit{}, {}, registry };
  auto const records = tokenize( text );
  if ( records.empty() )
  {
    throw error( error_kind::missing_width, "empty netlist" );
  }

  auto const& first = records.front();
  if ( to_upper( first.tokens[0].text ) != "WIDTH" )
  {
    fail( error_kind::missing_width, first.line, first.tokens[0].column, "netlist must start with 'width'" );
  }
  expect_tokens( first, 2 );
  auto const width = parse_index( first, 1 );
  if ( width > max_circuit_width )
  {
    fail( error_kind::width_too_large, first.line, first.tokens[1].column, "width " + std::to_string( width ) );
  }
  doc.circ = circuit( width );

  for ( size_t r = 1; r < records.size(); ++r )
  {
    auto const& rec = records[r];
    auto const kw = to_upper( rec.tokens[0].text );
    if ( kw == "WIDTH" )
    {
      fail( error_kind::syntax_error, rec.line, rec.tokens[0].column, "duplicate 'width'" );
    }
    else if ( kw == "GATE" )
    {
      auto g = parse_gate_record( rec );
      try
      {
        doc.gates.add( std::move( g ) );
      }
      catch ( const error& e )
      {
        fail( e.kind(), rec.line, rec.tokens[1].column, e.what() );
      }
    }
    else if ( kw == "INPUT" )
    {
      expect_tokens( rec, 3 );
      doc.circ.add_input( parse_index( rec, 1 ), name_token( rec, 2 ) );
    }
    else if ( kw == "CONST" )
    {
      expect_tokens( rec, 3 );
      auto const v = parse_number( rec, 2 );
      if ( v > 1u )
      {
        fail( error_kind::syntax_error, rec.line, rec.tokens[2].column, "constant must be 0 or 1" );
      }
      doc.circ.add_constant( parse_index( rec, 1 ), v == 1u );
    }
    else if ( kw == "APPLY" )
    {
      if ( rec.tokens.size() < 2u )
      {
        fail( error_kind::syntax_error, rec.line, rec.tokens[0].column, "'APPLY' needs a gate name" );
      }
      gate_ptr g;
      try
      {
        g = doc.gates.find( rec.tokens[1].text );
      }
      catch ( const error& )
      {
        fail( error_kind::unknown_gate, rec.line, rec.tokens[1].column, "unknown gate '" + std::string( rec.tokens[1].text ) + "'" );
      }
      std::vector<uint32_t> lines;
      for ( size_t i = 2; i < rec.tokens.size(); ++i )
      {
        lines.push_back( parse_index( rec, i ) );
      }
      doc.circ.add_gate( std::move( g ), std::move( lines ) );
      doc.apply_lines.push_back( rec.line );
    }
    else if ( kw == "OUTPUT" )
    {
      expect_tokens( rec, 3 );
      doc.circ.add_output( parse_index( rec, 1 ), name_token( rec, 2 ) );
    }
    else if ( kw == "GARBAGE" )
    {
      expect_tokens( rec, 2 );
      doc.circ.add_garbage( parse_index( rec, 1 ) );
    }
    else
    {
      fail( error_kind::syntax_error, rec.line, rec.tokens[0].column, "unknown keyword '" + std::string( rec.tokens[0].text ) + "'" );
    }
  }
  return doc;
}

/*! \brief Canonical netlist text; gates that are not builtins (or builtin
 *  inverses) are emitted as inline `gate` definitions. */
inline std::string emit_netlist( const circuit& c )
{
  ensure_valid( c );
  auto const builtins = gate_registry::with_builtins();

  std::map<std::string, gate_ptr> defined;
  for ( auto const& app : c.gates() )
  {
    auto const name = to_upper( app.gate->name );
    if ( builtins.contains( name ) && *builtins.find( name ) == *app.gate )
    {
      continue;
    }
    auto [it, inserted] = defined.emplace( name, app.gate );
    if ( !inserted && !( *it->second == *app.gate ) )
    {
      throw error( error_kind::duplicate_gate, "two different gates named " + name );
    }
  }

  std::string s = "width " + std::to_string( c.width() ) + "\n";
  for ( auto const& [_, g] : defined )
  {
    s += emit_gate_record( *g ) + "\n";
  }

  std::vector<std::pair<uint32_t, std::string>> consts;
  for ( auto const& r : c.inputs() )
  {
    if ( auto const* k = std::get_if<constant_input>( &r.cls ) )
    {
      consts.emplace_back( r.line, k->value ? "1" : "0" );
    }
  }
  std::sort( consts.begin(), consts.end() );
  for ( auto const& [line, name] : c.primary_inputs() )
  {
    s += "input " + std::to_string( line ) + " " + name + "\n";
  }
  for ( auto const& [line, v] : consts )
  {
    s += "const " + std::to_string( line ) + " " + v + "\n";
  }
  for ( auto const& app : c.gates() )
  {
    s += "apply " + to_upper( app.gate->name );
    for ( auto l : app.lines )
    {
      s += " " + std::to_string( l );
    }
    s += "\n";
  }
  for ( auto const& [line, name] : c.primary_outputs() )
  {
    s += "output " + std::to_string( line ) + " " + name + "\n";
  }
  std::vector<uint32_t> garbage;
  for ( auto const& r : c.outputs() )
  {
    if ( std::holds_alternative<garbage_output>( r.cls ) )
    {
      garbage.push_back( r.line );
    }
  }
  std::sort( garbage.begin(), garbage.end() );
  for ( auto l : garbage )
  {
    s += "garbage " + std::to_string( l ) + "\n";
  }
  return s;
}

inline primitive_sequence parse_decomposition( std::string_view text )
{
  using namespace detail;
  auto const records = tokenize( text );
  if ( records.empty() )
  {
    throw error( error_kind::missing_width, "empty decomposition" );
  }
  auto const& first = records.front();
  if ( to_upper( first.tokens[0].text ) != "WIDTH" )
  {
    fail( error_kind::missing_width, first.line, first.tokens[0].column, "decomposition must start with 'width'" );
  }
  expect_tokens( first, 2 );
  primitive_sequence seq{ parse_index( first, 1 ), {} };

  for ( size_t r = 1; r < records.size(); ++r )
  {
    auto const& rec = records[r];
    auto const kw = to_upper( rec.tokens[0].text );
    if ( kw == "X" || kw == "NOT" )
    {
      expect_tokens( rec, 2 );
      seq.steps.push_back( quantum_primitive::x( parse_index( rec, 1 ) ) );
      continue;
    }
    primitive_kind kind;
    if ( kw == "CNOT" )
    {
      kind = primitive_kind::cnot;
    }
    else if ( kw == "CV" )
    {
      kind = primitive_kind::cv;
    }
    else if ( kw == "CVDAG" )
    {
      kind = primitive_kind::cvdag;
    }
    else
    {
      fail( error_kind::syntax_error, rec.line, rec.tokens[0].column, "unknown primitive '" + std::string( rec.tokens[0].text ) + "'" );
    }
    expect_tokens( rec, 3 );
    seq.steps.push_back( { kind, parse_index( rec, 2 ), parse_index( rec, 1 ) } );
  }
  return seq;
}

inline std::string emit_decomposition( const primitive_sequence& seq )
{
  std::string s = "width " + std::to_string( seq.width ) + "\n";
  for ( auto const& p : seq.steps )
  {
    s += std::string( to_string( p.kind ) );
    if ( p.control )
    {
      s += " " + std::to_string( *p.control );
    }
    s += " " + std::to_string( p.target ) + "\n";
  }
  return s;
}

} // namespace revcomp
