// SPDX-License-Identifier: Apache-2.0
//
// Part of nyqshape, a Nyquist pulse-shaping filter toolkit.

#ifndef NYQSHAPE_NYQSHAPE_HPP
#define NYQSHAPE_NYQSHAPE_HPP

#include "nyqshape/analysis.hpp"
#include "nyqshape/design.hpp"
#include "nyqshape/dft.hpp"
#include "nyqshape/errors.hpp"
#include "nyqshape/io.hpp"
#include "nyqshape/pulse.hpp"
#include "nyqshape/rng.hpp"
#include "nyqshape/sweep.hpp"

#endif // NYQSHAPE_NYQSHAPE_HPP
