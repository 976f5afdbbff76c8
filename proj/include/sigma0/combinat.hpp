#pragma once

#include "sigma0/combinat/numbers.hpp"
#include "sigma0/combinat/partition.hpp"
#include "sigma0/combinat/subsum.hpp"
#include "sigma0/combinat/two_adic.hpp"
