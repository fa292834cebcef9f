/*!
  \file revc_cli.hpp
  \brief Command-line driver for the revcomp toolkit

  Exit codes: 0 success, 1 failed check, 2 usage or input error.
*/

#pragma once

#include <revcomp/revcomp.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace revcomp::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

inline std::string read_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw std::runtime_error( "cannot open " + path );
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/*! \brief Splits `A=1,B=0` into (name, bit) pairs. */
inline std::vector<std::pair<std::string, bool>> parse_assignments( const std::string& text )
{
  std::vector<std::pair<std::string, bool>> v;
  std::stringstream ss( text );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
  {
    if ( item.empty() )
    {
      continue;
    }
    auto const eq = item.find( '=' );
    if ( eq == std::string::npos || eq + 2u != item.size() || ( item[eq + 1] != '0' && item[eq + 1] != '1' ) )
    {
      throw CLI::ValidationError( "expected NAME=0|1, got '" + item + "'" );
    }
    v.emplace_back( item.substr( 0, eq ), item[eq + 1] == '1' );
  }
  return v;
}

inline std::string format_truth_table( const gate_spec& g, const std::map<uint32_t, bool>& pins )
{
  auto const f = mode_table( g, pins );
  std::string s;
  for ( auto p : f.free_ports )
  {
    s += static_cast<char>( 'A' + p );
    s += ' ';
  }
  s += '|';
  for ( uint32_t p = 0; p < g.width(); ++p )
  {
    s += ' ';
    s += static_cast<char>( 'P' + p );
  }
  s += '\n';
  auto const k = static_cast<uint32_t>( f.free_ports.size() );
  for ( uint32_t x = 0; x < f.outputs.size(); ++x )
  {
    for ( uint32_t i = 0; i < k; ++i )
    {
      s += port_bit( x, k, i ) ? '1' : '0';
      s += ' ';
    }
    s += '|';
    for ( uint32_t p = 0; p < g.width(); ++p )
    {
      s += ' ';
      s += f.output_bit( x, p ) ? '1' : '0';
    }
    s += '\n';
  }
  return s;
}

inline int run( int argc, const char* const* argv, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "revc: reversible gate library, compressor synthesis and verification" };
  app.require_subcommand( 1 );
  app.fallthrough();

  std::string gates_file;
  app.add_option( "--gates", gates_file, "Gate registry file with additional gate records" );

  std::string gate_name, netlist_file, decomp_file, output_file, inputs_text, pins_text, format = "md";
  uint32_t n = 4u, lo = 4u, hi = 12u;
  double tol = 1e-12;

  auto* truth = app.add_subcommand( "truth", "Print a gate's truth table" );
  truth->add_option( "gate", gate_name )->required();
  truth->add_option( "--pin", pins_text, "Pinned input ports, e.g. C=0,D=0" );

  auto* gates = app.add_subcommand( "gates", "Print the gate registry as gate records" );

  auto* sim = app.add_subcommand( "sim", "Simulate a netlist on one input assignment" );
  sim->add_option( "file", netlist_file )->required();
  sim->add_option( "--in", inputs_text, "Primary input values, e.g. I1=1,I2=0" )->required();

  auto* verify = app.add_subcommand( "verify", "Check netlist validity and full-width bijectivity" );
  verify->add_option( "file", netlist_file )->required();

  auto* metrics_cmd = app.add_subcommand( "metrics", "Print gate count, constants, garbage, quantum cost and T" );
  metrics_cmd->add_option( "file", netlist_file )->required();

  auto* synth = app.add_subcommand( "synth", "Synthesize a circuit" );
  synth->require_subcommand( 1 );
  auto* synth_comp = synth->add_subcommand( "compressor", "n:2 compressor from INV0 stages" );
  synth_comp->add_option( "--n", n, "Number of operand bits" )->required();
  synth_comp->add_option( "-o,--output", output_file, "Output netlist (stdout if omitted)" );

  auto* check = app.add_subcommand( "check-compressor", "Exhaustively check sum(inputs) = SUM + 2*sum(carries)" );
  check->add_option( "file", netlist_file )->required();
  check->add_option( "--n", n )->required();

  auto* qcheck = app.add_subcommand( "qcheck", "Verify a primitive decomposition against a gate" );
  qcheck->add_option( "gate", gate_name )->required();
  qcheck->add_option( "--decomp", decomp_file )->required();
  qcheck->add_option( "--tol", tol )->check( CLI::PositiveNumber );

  auto* compare = app.add_subcommand( "compare", "Compare the generated compressor against published 4:2 designs" );
  compare->add_option( "--n", n )->required();
  compare->add_option( "--netlist", netlist_file, "Measure this netlist instead of the generated circuit" );
  compare->add_option( "--format", format )->check( CLI::IsMember( { "md", "csv" } ) );

  auto* lemmas = app.add_subcommand( "lemmas", "Predicted vs. measured compressor costs" );
  lemmas->add_option( "--lo", lo );
  lemmas->add_option( "--hi", hi );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    auto const code = app.exit( e, out, err );
    return code == 0 ? exit_ok : exit_usage;
  }

  auto load_netlist = [&]( gate_registry const& reg ) { return parse_netlist( read_file( netlist_file ), reg ); };

  try
  {
    auto registry = gate_registry::with_builtins();
    if ( !gates_file.empty() )
    {
      parse_gate_registry( read_file( gates_file ), registry );
    }

    if ( *truth )
    {
      auto const g = registry.find( gate_name );
      std::map<uint32_t, bool> pins;
      for ( auto const& [port, bit] : parse_assignments( pins_text ) )
      {
        pins[port_index( port, g->width() )] = bit;
      }
      out << format_truth_table( *g, pins );
      return exit_ok;
    }
    if ( *gates )
    {
      out << emit_gate_registry( registry.gates() );
      return exit_ok;
    }
    if ( *sim )
    {
      auto const doc = load_netlist( registry );
      std::map<std::string, bool> assignment;
      for ( auto const& [name, bit] : parse_assignments( inputs_text ) )
      {
        assignment[to_upper( name )] = bit;
      }
      auto const r = simulate( doc.circ, assignment );
      for ( auto const& [line, name] : doc.circ.primary_outputs() )
      {
        out << name << "=" << r.outputs.at( name ) << "\n";
      }
      for ( auto const& [line, bit] : r.garbage )
      {
        out << "garbage[" << line << "]=" << bit << "\n";
      }
      return exit_ok;
    }
    if ( *verify )
    {
      netlist_document doc;
      try
      {
        doc = load_netlist( registry );
      }
      catch ( const error& e )
      {
        out << "invalid: " << e.what() << "\n";
        return exit_failed;
      }
      auto const diags = validate( doc.circ );
      if ( !diags.empty() )
      {
        for ( auto const& d : diags )
        {
          out << "invalid: " << to_string( d.kind ) << ": " << d.message << "\n";
        }
        return exit_failed;
      }
      if ( doc.circ.width() > max_exhaustive_width )
      {
        err << "width " << doc.circ.width() << " too large for exhaustive bijectivity check\n";
        return exit_failed;
      }
      auto const perm = full_permutation( doc.circ );
      out << "ok: valid, bijective on " << perm.size() << " words\n";
      return exit_ok;
    }
    if ( *metrics_cmd )
    {
      out << to_string( compute_metrics( load_netlist( registry ).circ ) ) << "\n";
      return exit_ok;
    }
    if ( *synth_comp )
    {
      auto const text = emit_netlist( build_compressor( n ) );
      if ( output_file.empty() )
      {
        out << text;
      }
      else
      {
        std::ofstream os( output_file, std::ios::binary );
        if ( !os || !( os << text ) )
        {
          throw std::runtime_error( "cannot write " + output_file );
        }
      }
      return exit_ok;
    }
    if ( *check )
    {
      auto const r = verify_compressor( load_netlist( registry ).circ, n );
      if ( r.ok )
      {
        out << "ok: identity holds on " << r.assignments << " assignments\n";
        return exit_ok;
      }
      auto const& cex = *r.counterexample;
      out << "fail:";
      for ( auto const& [name, bit] : cex.inputs )
      {
        out << " " << name << "=" << bit;
      }
      out << " -> inputs sum " << cex.input_sum << ", SUM=" << cex.sum << ", carries=" << cex.carries << "\n";
      return exit_failed;
    }
    if ( *qcheck )
    {
      auto const g = registry.find( gate_name );
      auto const seq = parse_decomposition( read_file( decomp_file ) );
      auto const r = verify_decomposition( seq, *g, tol );
      if ( r.ok )
      {
        out << "ok: realizes " << g->name << ", quantum cost " << quantum_cost( seq ) << ", global phase (" << r.global_phase.real()
            << "," << r.global_phase.imag() << ")\n";
        return exit_ok;
      }
      auto const& cex = *r.counterexample;
      out << "fail: input " << cex.input << " expected " << cex.expected << ", largest amplitude at " << cex.observed << " ("
          << cex.amplitude.real() << "," << cex.amplitude.imag() << ")\n";
      return exit_failed;
    }
    if ( *compare )
    {
      auto const c = netlist_file.empty() ? build_compressor( n ) : load_netlist( registry ).circ;
      auto const rows = comparison_table( n, c );
      out << ( format == "csv" ? format_csv( rows ) : format_markdown( rows ) );
      return exit_ok;
    }
    if ( *lemmas )
    {
      auto const rows = lemma_report( lo, hi );
      bool all = true;
      out << "n,gates,gates_pred,ci,ci_pred,go,go_pred,qc,qc_pred,qc_10(n-3),match\n";
      for ( auto const& r : rows )
      {
        out << r.n << "," << r.measured.gate_count << "," << r.predicted.gate_count << "," << r.measured.ancilla_inputs << ","
            << r.predicted.ancilla_inputs << "," << r.measured.garbage_outputs << "," << r.predicted.garbage_outputs << ","
            << r.measured.quantum_cost << "," << r.predicted.quantum_cost << "," << r.quoted_quantum_cost << ","
            << ( r.match() ? "yes" : "no" ) << "\n";
        all = all && r.match();
      }
      out << "note: quantum cost is 10(n-2) (10 per INV0 stage); the 10(n-3) closed form undercounts by one stage\n";
      return all ? exit_ok : exit_failed;
    }
  }
  catch ( const std::exception& e )
  {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

} // namespace revcomp::cli
