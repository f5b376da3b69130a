#pragma once

#include "graykit/assembly.hpp"
#include "graykit/bitstring.hpp"
#include "graykit/chain_gray.hpp"
#include "graykit/cycle_factor.hpp"
#include "graykit/flipping.hpp"
#include "graykit/lexical.hpp"
#include "graykit/scd.hpp"
#include "graykit/two_factor.hpp"
#include "graykit/verify.hpp"
#include "graykit/words.hpp"
