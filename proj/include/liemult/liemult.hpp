#pragma once

#include "liemult/cohomology.hpp"
#include "liemult/families.hpp"
#include "liemult/freenilpotent.hpp"
#include "liemult/hopf.hpp"
#include "liemult/io.hpp"
#include "liemult/isoclinism.hpp"
#include "liemult/liealgebra.hpp"
#include "liemult/matrix.hpp"
#include "liemult/subspace.hpp"
#include "liemult/varietyspan.hpp"
#include "liemult/wedge.hpp"
