/*!
  \file compare.hpp
  \brief 4:2 compressor comparison table (measured design vs. published designs)
*/

#pragma once

#include "circuit.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace revcomp
{

enum class row_source
{
  measured,
  literature
};

struct comparison_row
{
  std::string design;
  uint64_t gate_count;
  uint64_t constant_inputs;
  uint64_t garbage_outputs;
  uint64_t quantum_cost;
  row_source source;

  friend bool operator==( const comparison_row&, const comparison_row& ) = default;
};

/*! \brief Published 4:2 compressor figures, verbatim (two designs share the label "Existing design 4"). */
inline std::vector<comparison_row> literature_rows_4_2()
{
  return {
      { "Existing design 1 [3]", 4, 3, 5, 28, row_source::literature },
      { "Existing design 2 [3]", 7, 3, 5, 20, row_source::literature },
      { "Existing design 4 [3]", 2, 2, 3, 26, row_source::literature },
      { "Existing design 4 [15]", 2, 3, 5, 18, row_source::literature } };
}

inline comparison_row measured_row( std::string design, const circuit& c )
{
  auto const m = compute_metrics( c );
  return { std::move( design ), m.gate_count, m.constant_inputs, m.garbage_outputs, m.quantum_cost, row_source::measured };
}

/*! \brief Measured row for `c` followed by the literature rows when n = 4. */
inline std::vector<comparison_row> comparison_table( uint32_t n, const circuit& c )
{
  std::vector<comparison_row> rows{ measured_row( "Proposed", c ) };
  if ( n == 4u )
  {
    auto lit = literature_rows_4_2();
    rows.insert( rows.end(), lit.begin(), lit.end() );
  }
  return rows;
}

inline std::string_view to_string( row_source s )
{
  return s == row_source::measured ? "measured" : "literature";
}

inline std::string format_csv( const std::vector<comparison_row>& rows )
{
  std::string s = "design,gate_count,constant_inputs,garbage_outputs,quantum_cost,source\n";
  for ( auto const& r : rows )
  {
    s += r.design + "," + std::to_string( r.gate_count ) + "," + std::to_string( r.constant_inputs ) + "," +
         std::to_string( r.garbage_outputs ) + "," + std::to_string( r.quantum_cost ) + "," + std::string( to_string( r.source ) ) + "\n";
  }
  return s;
}

inline std::string format_markdown( const std::vector<comparison_row>& rows )
{
  std::string s = "| Design | Gate count | Constant inputs | Garbage outputs | Quantum cost | Source |\n"
                  "|---|---:|---:|---:|---:|---|\n";
  for ( auto const& r : rows )
  {
    s += "| " + r.design + " | " + std::to_string( r.gate_count ) + " | " + std::to_string( r.constant_inputs ) + " | " +
         std::to_string( r.garbage_outputs ) + " | " + std::to_string( r.quantum_cost ) + " | " + std::string( to_string( r.source ) ) + " |\n";
  }
  return s;
}

} // namespace revcomp
