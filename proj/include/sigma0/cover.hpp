#pragma once

#include "sigma0/cover/group_cover.hpp"
#include "sigma0/cover/instance.hpp"
#include "sigma0/cover/reduce.hpp"
#include "sigma0/cover/solve.hpp"
