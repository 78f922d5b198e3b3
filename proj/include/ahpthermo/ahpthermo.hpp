#pragma once

#include "ahpthermo/ensemble.hpp"
#include "ahpthermo/errors.hpp"
#include "ahpthermo/information.hpp"
#include "ahpthermo/market.hpp"
#include "ahpthermo/matrix.hpp"
#include "ahpthermo/strategy.hpp"
#include "ahpthermo/tropical.hpp"
