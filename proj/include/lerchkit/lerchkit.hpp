#ifndef LERCHKIT_LERCHKIT_HPP
#define LERCHKIT_LERCHKIT_HPP

#include "lerchkit/errors.hpp"
#include "lerchkit/identities.hpp"
#include "lerchkit/quad.hpp"
#include "lerchkit/special.hpp"
#include "lerchkit/verify.hpp"

#endif // LERCHKIT_LERCHKIT_HPP
