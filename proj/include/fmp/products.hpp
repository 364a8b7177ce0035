#pragma once

#include <map>

#include "fmp/big_rational.hpp"
#include "fmp/formal_sum.hpp"
#include "fmp/index.hpp"

namespace fmp {

using WordSum = std::map<Word, BigRational>;

/// Shuffle of two words by the letter recursion
/// (u1 w1) sh (u2 w2) = u1 (w1 sh u2 w2) + u2 (u1 w1 sh w2), with 1 as the unit.
WordSum shuffle_words(const Word& a, const Word& b);

/// k sh k': shuffle of z_k and z_k' on words, read back as indices.
FormalSum shuffle(const Index& k, const Index& kp);

/// k * k': the quasi-shuffle (stuffle) product on z-letters.
FormalSum stuffle(const Index& k, const Index& kp);

/// Bilinear extensions.
FormalSum shuffle(const FormalSum& a, const FormalSum& b);
FormalSum stuffle(const FormalSum& a, const FormalSum& b);

}  // namespace fmp
