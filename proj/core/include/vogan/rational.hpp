#ifndef VOGAN_RATIONAL_HPP
#define VOGAN_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace vogan {

// Exact arithmetic only. No floating point appears anywhere in the library;
// every geometric quantity is a rational number or an integer count.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// GMP keeps rationals canonical: lowest terms, denominator > 0.
inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline std::string rat_str(const Rat& q) { return q.str(); }

}  // namespace vogan

#endif
