#pragma once

#include <lojex/numeric.hpp>
#include <lojex/poly.hpp>
#include <lojex/hull.hpp>
#include <lojex/monomial.hpp>
#include <lojex/groebner.hpp>
#include <lojex/multiplicity.hpp>
#include <lojex/matching.hpp>
#include <lojex/lojasiewicz.hpp>
