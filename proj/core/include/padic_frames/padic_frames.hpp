#pragma once

#include "padic_frames/fourier.hpp"
#include "padic_frames/oracle.hpp"
#include "padic_frames/padic.hpp"
#include "padic_frames/serialization.hpp"
#include "padic_frames/spectral.hpp"
#include "padic_frames/stepfn.hpp"
#include "padic_frames/translates.hpp"
