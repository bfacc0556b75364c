#pragma once

// Evaluation codes over subspace arrangements, skeleton simplicial codes
// K(l, h, j) over GF(2), and the machinery to check their parameters.

#include "skelcodes/arrangement.hpp"
#include "skelcodes/bitmatrix.hpp"
#include "skelcodes/codeparams.hpp"
#include "skelcodes/errors.hpp"
#include "skelcodes/evalcode.hpp"
#include "skelcodes/field.hpp"
#include "skelcodes/formulas.hpp"
#include "skelcodes/hamming.hpp"
#include "skelcodes/linalg.hpp"
#include "skelcodes/matrix.hpp"
#include "skelcodes/simplicial.hpp"
