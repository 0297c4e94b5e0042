#pragma once

#include "charclass.hpp"
#include "classify.hpp"
#include "groupdata.hpp"
#include "idealtest.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "report.hpp"
