#pragma once

#include "semiconj/character_table.hpp"
#include "semiconj/closure.hpp"
#include "semiconj/conjugacy.hpp"
#include "semiconj/errors.hpp"
#include "semiconj/families.hpp"
#include "semiconj/json_io.hpp"
#include "semiconj/partial_injection.hpp"
#include "semiconj/partition.hpp"
#include "semiconj/representations.hpp"
#include "semiconj/semigroup.hpp"
#include "semiconj/transformation.hpp"
#include "semiconj/verification.hpp"
