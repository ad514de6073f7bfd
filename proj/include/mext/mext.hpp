#pragma once

#include "mext/abelian.hpp"
#include "mext/catalogs.hpp"
#include "mext/cohomology.hpp"
#include "mext/condensation.hpp"
#include "mext/constructors.hpp"
#include "mext/equivalence.hpp"
#include "mext/errors.hpp"
#include "mext/extensions.hpp"
#include "mext/fusion_ring.hpp"
#include "mext/io.hpp"
#include "mext/metric_group.hpp"
#include "mext/premodular.hpp"
#include "mext/rational.hpp"
#include "mext/symmetric_center.hpp"
#include "mext/symmetry_breaking.hpp"
#include "mext/witness.hpp"
