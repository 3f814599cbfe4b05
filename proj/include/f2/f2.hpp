#pragma once

#include "f2/error.hpp"
#include "f2/order.hpp"
#include "f2/perm.hpp"
#include "f2/group.hpp"
#include "f2/cayley.hpp"
#include "f2/field.hpp"
#include "f2/constructions.hpp"
#include "f2/lattice.hpp"
#include "f2/census.hpp"
#include "f2/closed_forms.hpp"
#include "f2/ww.hpp"
#include "f2/cache.hpp"
#include "f2/report.hpp"
