#pragma once

#include "qident/arith.hpp"
#include "qident/errors.hpp"
#include "qident/identity.hpp"
#include "qident/json_io.hpp"
#include "qident/partition.hpp"
#include "qident/poly_tu.hpp"
#include "qident/rational.hpp"
#include "qident/ring.hpp"
#include "qident/seqexpr.hpp"
#include "qident/series.hpp"
