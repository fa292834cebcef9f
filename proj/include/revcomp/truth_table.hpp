/*!
  \file truth_table.hpp
  \brief Permutation truth tables and logic-cost vectors

  Ports are numbered from 0 and port 0 is the most significant bit of a
  word, so a table row reads left to right as A, B, C, ...
*/

#pragma once

#include "error.hpp"

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace revcomp
{

/*! \brief Largest width that is enumerated exhaustively. */
inline constexpr uint32_t max_exhaustive_width = 20u;

/*! \brief Extracts port `port` of a `width`-bit word (port 0 = MSB). */
constexpr bool port_bit( uint32_t word, uint32_t width, uint32_t port )
{
  return ( word >> ( width - 1u - port ) ) & 1u;
}

/*! \brief Packs bits given in port order into a word (first bit = MSB). */
constexpr uint32_t pack_bits( std::initializer_list<bool> bits )
{
  uint32_t word = 0u;
  for ( bool b : bits )
  {
    word = ( word << 1u ) | ( b ? 1u : 0u );
  }
  return word;
}

/*! \brief A bijection on `width`-bit words.
 *
 * Construction checks that the mapping is a permutation, so every
 * `truth_table` value is reversible.
 */
class truth_table
{
public:
  truth_table() : truth_table( 0u, std::vector<uint32_t>{ 0u } ) {}

  truth_table( uint32_t width, std::vector<uint32_t> mapping ) : width_( width ), mapping_( std::move( mapping ) )
  {
    if ( width_ > max_exhaustive_width )
    {
      throw error( error_kind::width_too_large, "truth table width " + std::to_string( width_ ) + " exceeds " +
                                                    std::to_string( max_exhaustive_width ) );
    }
    if ( mapping_.size() != ( size_t{ 1 } << width_ ) )
    {
      throw error( error_kind::bad_arity, "expected " + std::to_string( size_t{ 1 } << width_ ) + " rows, got " +
                                              std::to_string( mapping_.size() ) );
    }
    std::vector<bool> seen( mapping_.size(), false );
    for ( auto out : mapping_ )
    {
      if ( out >= mapping_.size() )
      {
        throw error( error_kind::bad_arity, "output word " + std::to_string( out ) + " out of range" );
      }
      if ( seen[out] )
      {
        throw error( error_kind::non_bijective, "output word " + std::to_string( out ) + " appears twice" );
      }
      seen[out] = true;
    }
  }

  static truth_table identity( uint32_t width )
  {
    std::vector<uint32_t> m( size_t{ 1 } << width );
    for ( uint32_t i = 0; i < m.size(); ++i )
    {
      m[i] = i;
    }
    return truth_table( width, std::move( m ) );
  }

  uint32_t width() const noexcept { return width_; }
  size_t size() const noexcept { return mapping_.size(); }
  std::span<const uint32_t> mapping() const noexcept { return mapping_; }

  uint32_t operator()( uint32_t word ) const { return mapping_.at( word ); }

  truth_table inverse() const
  {
    std::vector<uint32_t> inv( mapping_.size() );
    for ( uint32_t x = 0; x < mapping_.size(); ++x )
    {
      inv[mapping_[x]] = x;
    }
    return truth_table( width_, std::move( inv ) );
  }

  /*! \brief Table of `other` applied after `*this`. */
  truth_table then( const truth_table& other ) const
  {
    if ( other.width_ != width_ )
    {
      throw error( error_kind::width_mismatch, "cannot compose tables of different widths" );
    }
    std::vector<uint32_t> m( mapping_.size() );
    for ( uint32_t x = 0; x < m.size(); ++x )
    {
      m[x] = other.mapping_[mapping_[x]];
    }
    return truth_table( width_, std::move( m ) );
  }

  bool is_identity() const noexcept
  {
    for ( uint32_t x = 0; x < mapping_.size(); ++x )
    {
      if ( mapping_[x] != x )
      {
        return false;
      }
    }
    return true;
  }

  friend bool operator==( const truth_table&, const truth_table& ) = default;

private:
  uint32_t width_;
  std::vector<uint32_t> mapping_;
};

/*! \brief Total logical calculation: counts of 2-input XOR (alpha), 2-input AND (beta), NOT (delta). */
struct cost_vector
{
  uint64_t alpha{ 0 };
  uint64_t beta{ 0 };
  uint64_t delta{ 0 };

  cost_vector& operator+=( const cost_vector& o ) noexcept
  {
    alpha += o.alpha;
    beta += o.beta;
    delta += o.delta;
    return *this;
  }

  friend cost_vector operator+( cost_vector a, const cost_vector& b ) noexcept { return a += b; }
  friend bool operator==( const cost_vector&, const cost_vector& ) = default;
};

/*! \brief Formats as `14A+8B+6D` (A = alpha, B = beta, D = delta). */
inline std::string to_string( const cost_vector& c )
{
  return std::to_string( c.alpha ) + "A+" + std::to_string( c.beta ) + "B+" + std::to_string( c.delta ) + "D";
}

} // namespace revcomp
