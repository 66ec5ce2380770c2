#ifndef EMKNOT_EMKNOT_HPP
#define EMKNOT_EMKNOT_HPP

#include "emknot/cavity.hpp"
#include "emknot/clebsch.hpp"
#include "emknot/core.hpp"
#include "emknot/curve.hpp"
#include "emknot/diff.hpp"
#include "emknot/io.hpp"
#include "emknot/quadrature.hpp"
#include "emknot/quantize.hpp"
#include "emknot/topology.hpp"

#endif  // EMKNOT_EMKNOT_HPP
