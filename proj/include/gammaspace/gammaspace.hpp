#pragma once

#include "gammaspace/algebra.hpp"
#include "gammaspace/classifying.hpp"
#include "gammaspace/diagram.hpp"
#include "gammaspace/error.hpp"
#include "gammaspace/ggamma.hpp"
#include "gammaspace/group.hpp"
#include "gammaspace/homology.hpp"
#include "gammaspace/presheaf.hpp"
#include "gammaspace/simplicial.hpp"
#include "gammaspace/smith.hpp"
