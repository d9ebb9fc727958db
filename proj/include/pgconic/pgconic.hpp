#pragma once

// Umbrella header for the pgconic library.

#include "pgconic/gf.hpp"
#include "pgconic/plane.hpp"
#include "pgconic/conic.hpp"
#include "pgconic/families.hpp"
#include "pgconic/search.hpp"
#include "pgconic/classify.hpp"
#include "pgconic/report.hpp"
