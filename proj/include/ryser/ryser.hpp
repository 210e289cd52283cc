#pragma once

#include "ryser/arith.hpp"
#include "ryser/barker.hpp"
#include "ryser/circulant.hpp"
#include "ryser/criterion.hpp"
#include "ryser/parallel.hpp"
#include "ryser/sign_row.hpp"
