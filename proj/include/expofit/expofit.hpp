#ifndef EXPOFIT_EXPOFIT_HPP
#define EXPOFIT_EXPOFIT_HPP

#include "expofit/dataset.hpp"
#include "expofit/dist.hpp"
#include "expofit/error.hpp"
#include "expofit/fit.hpp"
#include "expofit/fixtures.hpp"
#include "expofit/gof.hpp"
#include "expofit/inequality.hpp"
#include "expofit/nelder_mead.hpp"
#include "expofit/random.hpp"
#include "expofit/report.hpp"

#endif  // EXPOFIT_EXPOFIT_HPP
