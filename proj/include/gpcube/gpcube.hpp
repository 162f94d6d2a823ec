// Umbrella header.

#ifndef GPCUBE_GPCUBE_HPP_
#define GPCUBE_GPCUBE_HPP_

#include "complex.hpp"
#include "dj.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "hat.hpp"
#include "morse.hpp"
#include "oracle.hpp"
#include "simplicial.hpp"
#include "special.hpp"

#endif  // GPCUBE_GPCUBE_HPP_
