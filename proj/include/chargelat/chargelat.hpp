#pragma once

#include "chargelat/box.hpp"
#include "chargelat/charge.hpp"
#include "chargelat/errors.hpp"
#include "chargelat/hypercube.hpp"
#include "chargelat/io.hpp"
#include "chargelat/lemma.hpp"
#include "chargelat/oracle.hpp"
#include "chargelat/parallel.hpp"
#include "chargelat/partition.hpp"
#include "chargelat/projection.hpp"
#include "chargelat/sampler.hpp"
#include "chargelat/weights.hpp"
