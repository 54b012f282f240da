#ifndef QANALOGY_QCORE_HPP
#define QANALOGY_QCORE_HPP

#include "qanalogy/qcore/gates.hpp"
#include "qanalogy/qcore/measurement.hpp"
#include "qanalogy/qcore/random_source.hpp"
#include "qanalogy/qcore/state_vector.hpp"
#include "qanalogy/qcore/states.hpp"

#endif  // QANALOGY_QCORE_HPP
