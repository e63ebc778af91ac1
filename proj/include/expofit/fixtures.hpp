#ifndef EXPOFIT_FIXTURES_HPP
#define EXPOFIT_FIXTURES_HPP

#include "expofit/dataset.hpp"

namespace expofit::fixtures {

/// Total personal income, people with income, United States 2012 (USD).
/// Source: U.S. Census Bureau CPS tables, as published.
inline EcdfDataset us_2012() {
  return EcdfDataset::create("us_2012", "USD", {
      {2500, 0.0578}, {4999, 0.0903}, {7499, 0.1325}, {9999, 0.1858},
      {12499, 0.2466}, {14999, 0.2903}, {17499, 0.3435}, {19999, 0.3829},
      {22499, 0.4340}, {24999, 0.4659}, {27499, 0.5088}, {29999, 0.5340},
      {32499, 0.5787}, {34999, 0.5980}, {37499, 0.6327}, {39999, 0.6509},
      {42499, 0.6854}, {44999, 0.6990}, {47499, 0.7237}, {49999, 0.7378},
      {52499, 0.7673}, {54999, 0.7773}, {57499, 0.7934}, {59999, 0.8015},
      {62499, 0.8225}, {64999, 0.8298}, {67499, 0.8434}, {69999, 0.8498},
      {72499, 0.8645}, {74999, 0.8697}, {77499, 0.8804}, {79999, 0.8849},
      {82499, 0.8959}, {84999, 0.8999}, {87499, 0.9063}, {89999, 0.9098},
      {92499, 0.9178}, {94999, 0.9210}, {97499, 0.9248}, {99999, 0.9275},
      {149999, 0.9722}, {199999, 0.9863}, {249999, 0.9918},
  });
}

/// Total income before tax, taxpayers only, United Kingdom 2011-12 (GBP),
/// percentiles 1..99 from HM Revenue & Customs. The repeated 16300 is in the
/// published table.
inline EcdfDataset uk_2011_12() {
  return EcdfDataset::create("uk_2011_12", "GBP", {
      {7740, 0.01}, {8000, 0.02}, {8280, 0.03}, {8560, 0.04},
      {8840, 0.05}, {9150, 0.06}, {9450, 0.07}, {9740, 0.08},
      {10000, 0.09}, {10200, 0.10}, {10400, 0.11}, {10700, 0.12},
      {10900, 0.13}, {11100, 0.14}, {11300, 0.15}, {11500, 0.16},
      {11700, 0.17}, {12000, 0.18}, {12200, 0.19}, {12400, 0.20},
      {12600, 0.21}, {12900, 0.22}, {13100, 0.23}, {13300, 0.24},
      {13500, 0.25}, {13800, 0.26}, {14000, 0.27}, {14300, 0.28},
      {14500, 0.29}, {14700, 0.30}, {15000, 0.31}, {15200, 0.32},
      {15500, 0.33}, {15800, 0.34}, {16000, 0.35}, {16300, 0.36},
      {16300, 0.37}, {16800, 0.38}, {17100, 0.39}, {17400, 0.40},
      {17600, 0.41}, {17900, 0.42}, {18200, 0.43}, {18500, 0.44},
      {18800, 0.45}, {19100, 0.46}, {19400, 0.47}, {19700, 0.48},
      {20000, 0.49}, {20300, 0.50}, {20700, 0.51}, {21000, 0.52},
      {21300, 0.53}, {21700, 0.54}, {22100, 0.55}, {22400, 0.56},
      {22800, 0.57}, {23200, 0.58}, {23600, 0.59}, {24000, 0.60},
      {24400, 0.61}, {24900, 0.62}, {25300, 0.63}, {25800, 0.64},
      {26300, 0.65}, {26800, 0.66}, {27300, 0.67}, {27800, 0.68},
      {28400, 0.69}, {29000, 0.70}, {29500, 0.71}, {30100, 0.72},
      {30800, 0.73}, {31400, 0.74}, {32100, 0.75}, {32800, 0.76},
      {33600, 0.77}, {34400, 0.78}, {35200, 0.79}, {36000, 0.80},
      {36900, 0.81}, {37900, 0.82}, {39000, 0.83}, {40000, 0.84},
      {41100, 0.85}, {42200, 0.86}, {43400, 0.87}, {44800, 0.88},
      {46400, 0.89}, {48300, 0.90}, {50500, 0.91}, {53200, 0.92},
      {56500, 0.93}, {60700, 0.94}, {66200, 0.95}, {74100, 0.96},
      {85500, 0.97}, {104000, 0.98}, {147000, 0.99},
  });
}

}  // namespace expofit::fixtures

#endif  // EXPOFIT_FIXTURES_HPP
