#pragma once

#include "gag/errors.hpp"
#include "gag/groupoid.hpp"
#include "gag/ideals.hpp"
#include "gag/io.hpp"
#include "gag/laws.hpp"
#include "gag/search.hpp"
#include "gag/subset.hpp"
#include "gag/theorems.hpp"
#include "gag/witness.hpp"
