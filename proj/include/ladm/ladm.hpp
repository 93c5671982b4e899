#ifndef LADM_LADM_HPP
#define LADM_LADM_HPP

#include "ladm/decomposition.hpp"
#include "ladm/errors.hpp"
#include "ladm/generators.hpp"
#include "ladm/graph.hpp"
#include "ladm/io.hpp"
#include "ladm/products.hpp"
#include "ladm/rational.hpp"
#include "ladm/transform.hpp"

#endif
