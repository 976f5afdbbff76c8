#pragma once

#include "sigma0/families/catalog.hpp"
#include "sigma0/families/counts.hpp"
#include "sigma0/families/members.hpp"
#include "sigma0/families/spec.hpp"
#include "sigma0/families/unbeatable.hpp"
