#pragma once

#include <billiards/billiards.hpp>
#include <billiards/checked.hpp>
#include <billiards/circseq.hpp>
#include <billiards/crt.hpp>
#include <billiards/grid.hpp>
#include <billiards/polynomial.hpp>
#include <billiards/svg.hpp>
#include <billiards/walks.hpp>
