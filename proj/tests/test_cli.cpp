#include <catch_amalgamated.hpp>

#include "revc_cli.hpp"
#include "test_support.hpp"

#include <filesystem>
#include <fstream>

using namespace revcomp;

namespace
{

struct run_result
{
  int code;
  std::string out;
  std::string err;
};

run_result run( std::vector<std::string> args )
{
  args.insert( args.begin(), "revc" );
  std::vector<const char*> argv;
  for ( auto const& a : args )
  {
    argv.push_back( a.c_str() );
  }
  std::ostringstream out, err;
  int const code = cli::run( static_cast<int>( argv.size() ), argv.data(), out, err );
  return { code, out.str(), err.str() };
}

std::string temp_file( const std::string& name, const std::string& contents )
{
  auto const dir = std::filesystem::temp_directory_path() / "revc_cli_test";
  std::filesystem::create_directories( dir );
  auto const path = ( dir / name ).string();
  std::ofstream( path, std::ios::binary ) << contents;
  return path;
}

std::string samples( const std::string& name )
{
  return std::string( REVCOMP_SAMPLES_DIR ) + "/" + name;
}

} // namespace

TEST_CASE( "cli metrics and synth", "[cli]" )
{
  auto const path = temp_file( "c4.net", "" );
  REQUIRE( run( { "synth", "compressor", "--n", "4", "-o", path } ).code == 0 );
  auto const m = run( { "metrics", path } );
  CHECK( m.code == 0 );
  CHECK( m.out == "gates=2,ci=2,go=4,qc=20,T=14A+8B+6D\n" );

  auto const stdout_synth = run( { "synth", "compressor", "--n", "5" } );
  CHECK( stdout_synth.out == emit_netlist( build_compressor( 5 ) ) );

  CHECK( run( { "synth", "compressor", "--n", "2" } ).code == 2 );
}

TEST_CASE( "cli sim", "[cli]" )
{
  auto const path = temp_file( "c4sim.net", emit_netlist( build_compressor( 4 ) ) );
  auto const zero = run( { "sim", path, "--in", "I1=0,I2=0,I3=0,I4=0,CIN1=0" } );
  CHECK( zero.code == 0 );
  CHECK( zero.out.starts_with( "SUM=0\nC1=0\nC2=0\n" ) );

  auto const three = run( { "sim", path, "--in", "i1=1,i2=1,i3=1,i4=0,cin1=0" } );
  CHECK( three.out.starts_with( "SUM=1\nC1=1\nC2=0\n" ) );

  CHECK( run( { "sim", path, "--in", "I1=1" } ).code == 2 );
  CHECK( run( { "sim", path, "--in", "I1=3" } ).code == 2 );
}

TEST_CASE( "cli verify agrees with validate on a corpus", "[cli]" )
{
  std::vector<std::pair<std::string, std::string>> corpus = {
      { "good4.net", emit_netlist( build_compressor( 4 ) ) },
      { "good_inv.net", emit_netlist( append_inverse( build_compressor( 5 ) ) ) },
      { "dup.net", "width 2\ninput 0 A\ninput 1 B\napply CNOT 0 0\noutput 0 P\noutput 1 Q\n" },
      { "range.net", "width 2\ninput 0 A\ninput 1 B\napply CNOT 0 2\noutput 0 P\noutput 1 Q\n" },
      { "unclassified.net", "width 2\ninput 0 A\napply CNOT 0 1\noutput 0 P\noutput 1 Q\n" },
      { "twice.net", "width 2\ninput 0 A\ninput 1 B\nconst 1 0\noutput 0 P\noutput 1 Q\n" },
      { "arity.net", "width 3\ninput 0 A\ninput 1 B\ninput 2 C\napply TG 0 1\noutput 0 P\noutput 1 Q\noutput 2 R\n" } };
  for ( auto const& [name, text] : corpus )
  {
    auto const path = temp_file( name, text );
    bool const valid = is_valid( parse_netlist( text ).circ );
    auto const r = run( { "verify", path } );
    INFO( name << ": " << r.out );
    CHECK( r.code == ( valid ? 0 : 1 ) );
  }
  CHECK( run( { "verify", temp_file( "syntax.net", "width 2\nfoo\n" ) } ).code == 1 );
  CHECK( run( { "verify", samples( "corrupt_duplicate_line.net" ) } ).code == 1 );
  CHECK( run( { "verify", samples( "compressor_4_2.net" ) } ).code == 0 );
}

TEST_CASE( "cli check-compressor", "[cli]" )
{
  auto const good = temp_file( "c5.net", emit_netlist( build_compressor( 5 ) ) );
  auto const r = run( { "check-compressor", good, "--n", "5" } );
  CHECK( r.code == 0 );
  CHECK( r.out == "ok: identity holds on 128 assignments\n" );

  auto const bad = run( { "check-compressor", samples( "corrupt_sum_relabeled.net" ), "--n", "4" } );
  CHECK( bad.code == 1 );
  CHECK( bad.out.starts_with( "fail:" ) );

  CHECK( run( { "check-compressor", good, "--n", "4" } ).code == 2 );
}

TEST_CASE( "cli qcheck", "[cli]" )
{
  auto const r = run( { "qcheck", "TG", "--decomp", samples( "toffoli.qc" ) } );
  CHECK( r.code == 0 );
  CHECK( r.out.find( "quantum cost 5" ) != std::string::npos );
  CHECK( run( { "qcheck", "pg", "--decomp", samples( "peres.qc" ) } ).code == 0 );
  CHECK( run( { "qcheck", "PG", "--decomp", samples( "toffoli.qc" ) } ).code == 1 );
  CHECK( run( { "qcheck", "CNOT", "--decomp", samples( "toffoli.qc" ) } ).code == 2 );
  CHECK( run( { "qcheck", "TG", "--decomp", samples( "toffoli.qc" ), "--tol", "-1" } ).code == 2 );
}

TEST_CASE( "cli compare", "[cli]" )
{
  auto const csv = run( { "compare", "--n", "4", "--format", "csv" } );
  CHECK( csv.code == 0 );
  CHECK( csv.out == "design,gate_count,constant_inputs,garbage_outputs,quantum_cost,source\n"
                    "Proposed,2,2,4,20,measured\n"
                    "Existing design 1 [3],4,3,5,28,literature\n"
                    "Existing design 2 [3],7,3,5,20,literature\n"
                    "Existing design 4 [3],2,2,3,26,literature\n"
                    "Existing design 4 [15],2,3,5,18,literature\n" );

  auto const md = run( { "compare", "--n", "4" } );
  CHECK( md.out.find( "| Proposed | 2 | 2 | 4 | 20 | measured |" ) != std::string::npos );

  // the measured row follows the netlist: drop one gate
  auto text = emit_netlist( build_compressor( 4 ) );
  text.erase( text.find( "apply INV0 0 4 5 6\n" ), std::string( "apply INV0 0 4 5 6\n" ).size() );
  auto const path = temp_file( "c4_cut.net", text );
  auto const cut = run( { "compare", "--n", "4", "--netlist", path, "--format", "csv" } );
  CHECK( cut.out.find( "Proposed,1,2,4,10,measured\n" ) != std::string::npos );

  CHECK( run( { "compare", "--n", "4", "--format", "xml" } ).code == 2 );
}

TEST_CASE( "cli truth, gates and lemmas", "[cli]" )
{
  auto const t = run( { "truth", "inv0" } );
  CHECK( t.code == 0 );
  CHECK( t.out.starts_with( "A B C D | P Q R S\n0 0 0 0 | 0 0 0 1\n0 0 0 1 | 0 1 0 0\n" ) );

  auto const pinned = run( { "truth", "INV0", "--pin", "C=0,D=0" } );
  CHECK( pinned.out == "A B | P Q R S\n0 0 | 0 0 0 1\n0 1 | 1 0 0 0\n1 0 | 1 0 0 1\n1 1 | 0 1 0 1\n" );
  CHECK( run( { "truth", "INV0", "--pin", "E=0" } ).code == 2 );
  CHECK( run( { "truth", "NOPE" } ).code == 2 );

  auto const g = run( { "gates" } );
  CHECK( g.out.find( "gate INV0 4 1 4 a f 8 d 6 3 9 c 7 2 5 0 e b 10 7 4 3\n" ) != std::string::npos );

  auto const user = temp_file( "user.gates", "gate SWAP 2 0 2 1 3 3 0 0 0 12\n" );
  CHECK( run( { "--gates", user, "truth", "swap" } ).out == "A B | P Q\n0 0 | 0 0\n0 1 | 1 0\n1 0 | 0 1\n1 1 | 1 1\n" );
  auto const net = temp_file( "swap.net", "width 2\ninput 0 A\ninput 1 B\napply SWAP 0 1\noutput 0 P\noutput 1 Q\n" );
  CHECK( run( { "--gates", user, "metrics", net } ).out == "gates=1,ci=0,go=0,qc=3,T=0A+0B+0D\n" );
  CHECK( run( { "metrics", net } ).code == 2 );

  auto const l = run( { "lemmas", "--lo", "4", "--hi", "6" } );
  CHECK( l.code == 0 );
  CHECK( l.out.find( "4,2,2,2,2,4,4,20,20,10,yes\n" ) != std::string::npos );
  CHECK( l.out.find( "10(n-3)" ) != std::string::npos );
  CHECK( run( { "lemmas", "--lo", "6", "--hi", "5" } ).code == 2 );
}

TEST_CASE( "cli usage errors", "[cli]" )
{
  CHECK( run( {} ).code == 2 );
  CHECK( run( { "metrics" } ).code == 2 );
  CHECK( run( { "frobnicate" } ).code == 2 );
  CHECK( run( { "metrics", "/nonexistent/file.net" } ).code == 2 );
  CHECK( run( { "--help" } ).code == 0 );
}
