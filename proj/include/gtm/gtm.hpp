#pragma once

#include "gtm/certify.hpp"
#include "gtm/clans.hpp"
#include "gtm/compare.hpp"
#include "gtm/determinant.hpp"
#include "gtm/error.hpp"
#include "gtm/families.hpp"
#include "gtm/generators.hpp"
#include "gtm/index_set.hpp"
#include "gtm/io.hpp"
#include "gtm/matrix.hpp"
#include "gtm/rational.hpp"
#include "gtm/wog.hpp"
