/*!
  \file error.hpp
  \brief Error type shared by all revcomp components
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace revcomp
{

enum class error_kind
{
  unknown_gate,
  duplicate_gate,
  non_bijective,
  bad_arity,
  unknown_port,
  missing_input,
  unknown_input,
  invalid_circuit,
  width_too_large,
  bad_index,
  width_mismatch,
  n_too_small,
  n_too_large,
  shape_mismatch,
  range_error,
  syntax_error,
  missing_width
};

inline std::string_view to_string( error_kind kind )
{
  switch ( kind )
  {
  case error_kind::unknown_gate: return "UnknownGate";
  case error_kind::duplicate_gate: return "DuplicateGate";
  case error_kind::non_bijective: return "NonBijective";
  case error_kind::bad_arity: return "BadArity";
  case error_kind::unknown_port: return "UnknownPort";
  case error_kind::missing_input: return "MissingInput";
  case error_kind::unknown_input: return "UnknownInput";
  case error_kind::invalid_circuit: return "InvalidCircuit";
  case error_kind::width_too_large: return "WidthTooLarge";
  case error_kind::bad_index: return "BadIndex";
  case error_kind::width_mismatch: return "WidthMismatch";
  case error_kind::n_too_small: return "NTooSmall";
  case error_kind::n_too_large: return "NTooLarge";
  case error_kind::shape_mismatch: return "ShapeMismatch";
  case error_kind::range_error: return "RangeError";
  case error_kind::syntax_error: return "SyntaxError";
  case error_kind::missing_width: return "MissingWidth";
  }
  return "Error";
}

class error : public std::runtime_error
{
public:
  error( error_kind kind, const std::string& message )
      : std::runtime_error( std::string( to_string( kind ) ) + ": " + message ), kind_( kind )
  {
  }

  error_kind kind() const noexcept { return kind_; }

private:
  error_kind kind_;
};

} // namespace revcomp
