#ifndef RATKNOT_RATKNOT_HPP
#define RATKNOT_RATKNOT_HPP

#include "ratknot/cf.hpp"
#include "ratknot/errors.hpp"
#include "ratknot/field.hpp"
#include "ratknot/fpoly.hpp"
#include "ratknot/integer.hpp"
#include "ratknot/invariants.hpp"
#include "ratknot/multipoly.hpp"
#include "ratknot/poset.hpp"
#include "ratknot/upoly.hpp"
#include "ratknot/verify.hpp"

#endif  // RATKNOT_RATKNOT_HPP
