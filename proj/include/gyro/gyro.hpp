#pragma once

#include "gyro/axioms.hpp"
#include "gyro/errors.hpp"
#include "gyro/gensearch.hpp"
#include "gyro/gyro_table.hpp"
#include "gyro/models.hpp"
#include "gyro/parallel.hpp"
#include "gyro/permutation.hpp"
#include "gyro/quotient.hpp"
#include "gyro/random.hpp"
#include "gyro/subgyro.hpp"
#include "gyro/subset_mask.hpp"
#include "gyro/table_io.hpp"
