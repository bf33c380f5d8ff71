#ifndef UQGLMN_UQGLMN_HPP
#define UQGLMN_UQGLMN_HPP

#include "uqglmn/coefficient.hpp"
#include "uqglmn/element.hpp"
#include "uqglmn/errors.hpp"
#include "uqglmn/expansion.hpp"
#include "uqglmn/expr_io.hpp"
#include "uqglmn/harness.hpp"
#include "uqglmn/laurent_poly.hpp"
#include "uqglmn/normalizer.hpp"
#include "uqglmn/rule_verification.hpp"
#include "uqglmn/rulebook.hpp"
#include "uqglmn/signature.hpp"

#endif  // UQGLMN_UQGLMN_HPP
