#pragma once

#include "kug/cache.hpp"
#include "kug/combinatorics.hpp"
#include "kug/counting.hpp"
#include "kug/errors.hpp"
#include "kug/green.hpp"
#include "kug/group_data.hpp"
#include "kug/io.hpp"
#include "kug/oracle.hpp"
#include "kug/poly.hpp"
#include "kug/table1.hpp"
