#ifndef STEVAL_PORTER_HPP
#define STEVAL_PORTER_HPP

#include <string>

namespace steval {

// Classic Porter stemming algorithm (1980), ASCII lowercase input.
// Non-alphabetic tokens pass through unchanged.
std::string porter_stem(const std::string& word);

}  // namespace steval

#endif
