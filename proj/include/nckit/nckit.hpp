#pragma once

#include "nckit/convolutions.hpp"
#include "nckit/error.hpp"
#include "nckit/limits.hpp"
#include "nckit/nc_table.hpp"
#include "nckit/ncseries.hpp"
#include "nckit/oracle.hpp"
#include "nckit/parity.hpp"
#include "nckit/partition.hpp"
#include "nckit/partitions.hpp"
#include "nckit/random.hpp"
#include "nckit/rational.hpp"
#include "nckit/series_json.hpp"
#include "nckit/transforms.hpp"
#include "nckit/verify.hpp"
