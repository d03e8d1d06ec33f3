#pragma once

#include "bihilbert/admissible.hpp"
#include "bihilbert/error.hpp"
#include "bihilbert/ferrers.hpp"
#include "bihilbert/filters.hpp"
#include "bihilbert/ideal.hpp"
#include "bihilbert/monomial.hpp"
#include "bihilbert/oracle.hpp"
#include "bihilbert/partition.hpp"
#include "bihilbert/table.hpp"
#include "bihilbert/witness.hpp"
