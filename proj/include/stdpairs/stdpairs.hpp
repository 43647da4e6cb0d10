#pragma once

// Everything: monoids, ideals, pairs, covers, decompositions, archives and
// Macaulay2 export.

#include "stdpairs/archive.hpp"
#include "stdpairs/covers.hpp"
#include "stdpairs/decomp.hpp"
#include "stdpairs/diophantine.hpp"
#include "stdpairs/errors.hpp"
#include "stdpairs/ideal.hpp"
#include "stdpairs/integer.hpp"
#include "stdpairs/macaulay2.hpp"
#include "stdpairs/monoid.hpp"
#include "stdpairs/pair.hpp"
#include "stdpairs/pairs.hpp"
#include "stdpairs/polyhedral.hpp"
