#pragma once

#include "sigma0/verify/groups.hpp"
#include "sigma0/verify/inequalities.hpp"
#include "sigma0/verify/registry.hpp"
#include "sigma0/verify/report.hpp"
#include "sigma0/verify/symmetric.hpp"
#include "sigma0/verify/table.hpp"
