#pragma once

#include <soq/cayley.hpp>
#include <soq/error.hpp>
#include <soq/factor.hpp>
#include <soq/generate.hpp>
#include <soq/io.hpp>
#include <soq/matrix.hpp>
#include <soq/rational.hpp>
#include <soq/sphere.hpp>
