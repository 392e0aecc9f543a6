#pragma once

// Exact elementary number theory: Euclidean machinery, continued fractions,
// Farey sequences, Dirichlet convolution, congruences, quadratic residues,
// binary quadratic forms, and finite permutations.

#include "zahl/arithfun.hpp"
#include "zahl/contfrac.hpp"
#include "zahl/euclid.hpp"
#include "zahl/factor.hpp"
#include "zahl/farey.hpp"
#include "zahl/integer.hpp"
#include "zahl/modular.hpp"
#include "zahl/perm.hpp"
#include "zahl/qform.hpp"
#include "zahl/quadres.hpp"
#include "zahl/rational.hpp"
#include "zahl/render.hpp"
#include "zahl/surd.hpp"
