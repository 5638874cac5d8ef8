#ifndef GPARKING_GPARKING_HPP
#define GPARKING_GPARKING_HPP

#include "gparking/bivariate_polynomial.hpp"
#include "gparking/classical.hpp"
#include "gparking/criticality.hpp"
#include "gparking/multigraph.hpp"
#include "gparking/parking.hpp"
#include "gparking/tree_bijection.hpp"
#include "gparking/tutte.hpp"

#endif  // GPARKING_GPARKING_HPP
