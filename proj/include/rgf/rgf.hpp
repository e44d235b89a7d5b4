#pragma once

#include "rgf/core.hpp"
#include "rgf/counting.hpp"
#include "rgf/generators.hpp"
#include "rgf/oracle.hpp"
#include "rgf/orders.hpp"
