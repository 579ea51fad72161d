#pragma once

#include "layerstab/eigen.hpp"
#include "layerstab/error.hpp"
#include "layerstab/green.hpp"
#include "layerstab/model.hpp"
#include "layerstab/oracle.hpp"
#include "layerstab/perturb.hpp"
#include "layerstab/polylog.hpp"
#include "layerstab/secondvar.hpp"
#include "layerstab/stability.hpp"
