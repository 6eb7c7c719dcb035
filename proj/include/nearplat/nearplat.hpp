#pragma once

#include "nearplat/canonical.hpp"
#include "nearplat/cli.hpp"
#include "nearplat/counting.hpp"
#include "nearplat/dot.hpp"
#include "nearplat/families.hpp"
#include "nearplat/oracle.hpp"
#include "nearplat/planar_code.hpp"
#include "nearplat/planar_map.hpp"
#include "nearplat/report.hpp"
#include "nearplat/search.hpp"
#include "nearplat/strip.hpp"
