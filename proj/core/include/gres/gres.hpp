#pragma once

#include "gres/error.hpp"
#include "gres/ideal.hpp"
#include "gres/interpolation.hpp"
#include "gres/matrix.hpp"
#include "gres/monomial.hpp"
#include "gres/parse.hpp"
#include "gres/poly.hpp"
#include "gres/residue.hpp"
#include "gres/scalar.hpp"
