#pragma once

#include "miniatures/analysis.hpp"
#include "miniatures/closed_forms.hpp"
#include "miniatures/enumeration.hpp"
#include "miniatures/geometry.hpp"
#include "miniatures/io.hpp"
#include "miniatures/rational.hpp"
#include "miniatures/reduction.hpp"
